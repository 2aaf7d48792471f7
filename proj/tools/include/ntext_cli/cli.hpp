#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ntx::cli {

/// Exit codes: 0 all checks pass, 1 a mathematical failure, 2 an input error.
enum ExitCode : int { kPass = 0, kFail = 1, kInputError = 2 };

/// Runs one command line (args[0] is the program name). The report goes to
/// `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ntx::cli
