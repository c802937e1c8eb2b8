#include "qseries/report.hpp"

#include <sstream>

namespace qseries {

std::string to_string(CheckStatus s) {
    switch (s) {
        case CheckStatus::pass: return "pass";
        case CheckStatus::fail: return "fail";
        case CheckStatus::budget_exceeded: return "budget-exceeded";
    }
    return "?";
}

std::string IdentityReport::str() const {
    std::ostringstream os;
    os << identity << "(";
    bool first = true;
    for (const auto& [k, v] : params) {
        if (!first) os << ",";
        os << k << "=" << v;
        first = false;
    }
    os << ") order " << to_string(order) << ": " << to_string(status);
    if (status == CheckStatus::fail && mismatch_exponent)
        os << " at q^" << to_string(*mismatch_exponent) << " lhs="
           << lhs_coeff.str() << " rhs=" << rhs_coeff.str();
    if (!note.empty()) os << " (" << note << ")";
    return os.str();
}

IdentityReport make_report(std::string identity,
                           std::map<std::string, std::string> params,
                           const CompareResult& cmp) {
    IdentityReport r;
    r.identity = std::move(identity);
    r.params = std::move(params);
    r.order = cmp.order;
    r.status = cmp.pass ? CheckStatus::pass : CheckStatus::fail;
    r.mismatch_exponent = cmp.mismatch_exponent;
    r.lhs_coeff = cmp.lhs_coeff;
    r.rhs_coeff = cmp.rhs_coeff;
    return r;
}

}  // namespace qseries
