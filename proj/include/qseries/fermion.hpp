#pragma once

#include "qseries/configsum.hpp"

namespace qseries {

/// Combinatorial data attached to the continued fraction of p/(p'-p) for
/// 1 <= p < p' < 2p, gcd(p,p') = 1: digits, partial sums, the fractional
/// incidence/Cartan pair, the y-recursion, Takahashi lengths and Q-vectors.
/// Constructed by build_cf_system, which asserts every structural invariant
/// and fails loudly on any inconsistency.
struct CFSystem {
    long long p = 0, pp = 0;
    std::vector<long long> nu;        // digits nu_0..nu_n
    long long n = 0;                  // last digit index
    std::vector<long long> t;         // t[m], m = 0..n+1; t[0] = -1, t[n+1] = d
    long long d = 0;                  // rank of the (m,n)-system
    std::vector<std::vector<long long>> IB;  // d x d incidence
    std::vector<std::vector<long long>> B;   // 2I - IB
    std::vector<long long> y, ybar;   // index i holds y_{i-1}, i = 0..n+2
    std::vector<long long> tak;       // tak[j] = l_{j+1}, j = 0..d+1
    std::vector<long long> takbar;    // takbar[j] = truncated length
    // Q[j-1] holds Q^{(j)} for j = 1..d+1; entries 1..d (+ slot d+1 for the
    // nu_n = 2 override used inside the recursion)
    std::vector<std::vector<long long>> Q;
    std::vector<std::vector<long long>> uvec;  // uvec[i] = u_i, i = 0..d+1

    // band m with t_m < i <= t_{m+1} + delta_{m,n}, for i in [0, d+1]
    long long band_of_index(long long i) const;
    // band m with t_m < k <= t_{m+1}, for vector components k in [1, d]
    long long band_of_component(long long k) const;
};

CFSystem build_cf_system(long long p, long long pp);

/// sigma with l_{sigma+1} = s when s is a Takahashi length
std::optional<long long> takahashi_index(const CFSystem& sys, long long s);

/// A vector in Z^{d+1} (1-based components stored 0-based).
using UVector = std::vector<long long>;
UVector unit_uvector(const CFSystem& sys, long long i);  // u_i of the paper
UVector scaled_e1(const CFSystem& sys, long long L);     // L*e_1

struct FermStats {
    long long skipped_half_integer = 0;  // (m,n)-system gave non-integer n
    long long support_points = 0;
};

/// The fermionic sum f(u,v) = sum over m in 2Z^d + Q_{u+v} of
/// q^{m B m/4 - A_{u,v}.m/2} prod_j [m_j+n_j, m_j] with
/// m + n = (IB m + u* + v*)/2.  With no order the full (finite) support is
/// enumerated and the exact polynomial returned.
QSeries fermionic_f(const CFSystem& sys, const UVector& u, const UVector& v,
                    std::optional<Rat> order = std::nullopt,
                    const SumConfig& cfg = {}, FermStats* stats = nullptr);

/// Fermionic evaluation of X^{(p,p')}_{r,s}(L,b) for s, b Takahashi lengths,
/// covering both p < p' < 2p and the dual regime p' > 2p.  The additive
/// normalization constant is fixed once per index family by the q = 0
/// condition at L0 = |s-b| and reused for every L.
QSeries fermionic_X(long long p, long long pp, long long r, long long s,
                    long long b, long long L,
                    std::optional<Rat> order = std::nullopt,
                    const SumConfig& cfg = {}, FermStats* stats = nullptr);

IdentityReport fermionic_vs_bosonic(long long p, long long pp, long long r,
                                    long long s, long long b, long long L,
                                    const SumConfig& cfg = {});

}  // namespace qseries
