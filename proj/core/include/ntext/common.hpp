#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ntext/linalg.hpp"

namespace ntx {

/// Accumulates human-readable constraint violations. Empty means valid.
class ValidationReport {
public:
    void fail(std::string what) { failures_.push_back(std::move(what)); }
    void merge(const ValidationReport& other, std::string_view prefix = {}) {
        for (const auto& f : other.failures_) failures_.push_back(std::string(prefix) + f);
    }
    [[nodiscard]] bool ok() const noexcept { return failures_.empty(); }
    [[nodiscard]] const std::vector<std::string>& failures() const noexcept { return failures_; }

private:
    std::vector<std::string> failures_;
};

/// Thrown when an input fails validation where a valid one is required.
class InvalidInput : public std::invalid_argument {
public:
    InvalidInput(const std::string& what, ValidationReport report)
        : std::invalid_argument(what), report_(std::move(report)) {}
    [[nodiscard]] const ValidationReport& report() const noexcept { return report_; }

private:
    ValidationReport report_;
};

enum class Verdict { yes, no, inconclusive };

constexpr std::string_view to_string(Verdict v) noexcept {
    switch (v) {
        case Verdict::yes: return "yes";
        case Verdict::no: return "no";
        case Verdict::inconclusive: return "inconclusive";
    }
    return "?";
}

/// Outcome of an isomorphism search. A "yes" always carries a verified witness.
struct IsoResult {
    Verdict verdict = Verdict::inconclusive;
    std::optional<Mat> witness;
    std::string reason;
};

/// A homological dimension that may be truncated at a cap: when `capped` is
/// set the true value is at least `value`.
struct HomDim {
    std::size_t value = 0;
    bool capped = false;

    [[nodiscard]] bool finite() const noexcept { return !capped; }
    [[nodiscard]] std::string to_string() const {
        return capped ? ">=" + std::to_string(value) : std::to_string(value);
    }
    friend bool operator==(const HomDim&, const HomDim&) = default;
};

}  // namespace ntx
