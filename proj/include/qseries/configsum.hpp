#pragma once

#include "qseries/qtools.hpp"
#include "qseries/report.hpp"

namespace qseries {

struct ModelParams {
    long long p = 1, pp = 2;  // 1 <= p < pp
    bool coprime() const;
};

struct XIndex {
    long long r = 0, s = 1, b = 1, L = 0;  // L + s + b even
};

/// One-dimensional configuration sum X^{(p,p')}_{r,s}(L,b): the alternating
/// j-sum of Gaussian polynomials with exponents j(pp'j+p'r-ps) and
/// (pj+r)(p'j+s).  Returned as the exact polynomial; pass `order` to compute
/// it truncated instead.
QSeries config_sum(const ModelParams& mp, const XIndex& ix,
                   std::optional<Rat> order = std::nullopt);

// X_{r,s}(L,b) = X_{p-r,p'-s}(L,p'-b)
IdentityReport flip_symmetry_check(const ModelParams& mp, const XIndex& ix);
// X_{r,s}^{(p,p')}(L,b;q) = q^{(L^2-(b-s)^2)/4} X_{b-r,s}^{(p'-p,p')}(L,b;1/q)
IdentityReport dual_symmetry_check(const ModelParams& mp, const XIndex& ix);
// X_{0,s}(L,1) = q^{(L-s+1)/2} X_{1,s}(L,1)
IdentityReport rzero_check(const ModelParams& mp, long long s, long long L);

}  // namespace qseries
