#include <iostream>

#include "ntext_cli/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv, argv + argc);
    return ntx::cli::run(args, std::cout, std::cerr);
}
