#pragma once

#include "qseries/qseries.hpp"

#include <map>
#include <string>

namespace qseries {

enum class CheckStatus { pass, fail, budget_exceeded };

std::string to_string(CheckStatus s);

/// Outcome of one verification run.  fail implies the first mismatching
/// exponent and both coefficients are recorded.
struct IdentityReport {
    std::string identity;
    std::map<std::string, std::string> params;
    Rat order{0};
    CheckStatus status = CheckStatus::fail;
    std::optional<Rat> mismatch_exponent;
    Int lhs_coeff{0};
    Int rhs_coeff{0};
    std::string note;  // budget message or similar
    double millis = 0.0;

    bool passed() const { return status == CheckStatus::pass; }
    std::string str() const;
};

IdentityReport make_report(std::string identity,
                           std::map<std::string, std::string> params,
                           const CompareResult& cmp);

}  // namespace qseries
