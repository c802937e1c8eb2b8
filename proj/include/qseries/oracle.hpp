#pragma once

#include "qseries/configsum.hpp"

namespace qseries {

/// Brute-force ground truth, kept deliberately free of any generating
/// function machinery so it cannot share bugs with config_sum.

/// Sum of q^{|P|} over all lattice paths (x_0,...,x_{L+1}) with x_0 = s,
/// x_L = b, x_{L+1} = c, unit steps, and 1 <= x_i <= p'-1 for 1 <= i <= L.
/// The weight is |P| = sum_i i*H(x_{i-1},x_i,x_{i+1}) with H = 1/2 on
/// straight segments and -+floor(a(p'-p)/p') at local extrema of outer
/// height a.  Exact, grid denominator 2.  c may also be 0 or p'.
QSeries path_generating_fn(long long p, long long pp, long long s, long long b,
                           long long c, long long L);

// r-value of the path family, from the two floor expressions; for interior c
// both must agree
long long path_r_value(long long p, long long pp, long long b, long long c);

// D_L(s,b,c) = q^{L(c-b)(c+b-1-2r)/4 + (s-b)(s+b-1-2r)/4} X_{r,s}(L,b)
IdentityReport path_vs_configsum(long long p, long long pp, long long s,
                                 long long b, long long c, long long L);

/// Generating function of partitions in the (L+s-b)/2 x (L-s+b)/2 box with
/// the prescribed hook differences (at least r-s+1 on diagonal 1-r, at most
/// p'-p+r-s-1 on diagonal p-r-1); r = 0 adds the largest-part side condition.
QSeries hook_partition_gen_fn(long long p, long long pp, long long r,
                              long long s, long long b, long long L);

IdentityReport hook_vs_configsum(long long p, long long pp, long long r,
                                 long long s, long long b, long long L);

/// Counts partitions whose parts are congruent to one of `residues` mod
/// `modulus` (by direct enumeration over part sizes).
QSeries partition_count_products(long long modulus,
                                 const std::vector<long long>& residues,
                                 const Rat& order);
/// Counts partitions into distinct parts drawn from the same class.
QSeries partition_count_distinct(long long modulus,
                                 const std::vector<long long>& residues,
                                 const Rat& order);

}  // namespace qseries
