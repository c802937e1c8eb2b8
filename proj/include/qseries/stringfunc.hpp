#pragma once

#include "qseries/qtools.hpp"
#include "qseries/report.hpp"

namespace qseries {

struct StringIndex {
    long long p = 1, pp = 3;
    long long m = 0, l = 0;  // l in Z_{p'-1}, m = l (mod 2)
};

/// Modified A_1^(1) string function C^{(p,p')}_{m,l}, normalized so all
/// exponents are integers.  Evaluated through the four-quadrant form whose
/// pieces are absolutely convergent coefficient-wise, which works for every
/// 1 <= p < p'.
QSeries string_fn(const StringIndex& ix, const Rat& order,
                  const SumConfig& cfg = {});

/// The defining bilateral (j, i)-sum evaluated literally (j outer, i inner).
/// The iterated sum converges shell-wise only for p' < 2p; outside that range
/// the enumeration raises BudgetExceeded rather than returning a wrong
/// answer.
QSeries string_fn_defform(const StringIndex& ix, const Rat& order,
                          const SumConfig& cfg = {});

/// Integer-level (p = 1, p' = N+2) two-sided (j,k) form.
QSeries string_fn_neatform(long long N, long long m, long long l,
                           const Rat& order, const SumConfig& cfg = {});

/// Lepowsky-Primc lattice form for integer level N >= 1: a sum over
/// Z_+^{N-1} with the A_{N-1} Cartan-inverse quadratic form and the exact
/// congruence (m+l)/2N + (C^{-1}n)_1 in Z.
QSeries lp_string_fn(long long N, long long m, long long l, const Rat& order,
                     const SumConfig& cfg = {});

/// (q)_inf * C_{m,l}; the q^{1/24} of eta and the rational normalization
/// exponent are not part of the series, see parafermion_exponent_offset.
QSeries parafermion_char(const StringIndex& ix, const Rat& order,
                         const SumConfig& cfg = {});

/// Exponent relating the normalized series to the unnormalized string
/// function: C^N_{m,l}(q) = q^{offset} * C^{(p,p')}_{m,l}(q) with
/// offset = (l+1)^2/(4(N+2)) - m^2/(4N) - 1/8.
Rat unnormalized_exponent_offset(const StringIndex& ix);
/// Offset for the parafermion character e^N_{m,l} = eta * C^N_{m,l}
/// relative to (q)_inf * C_{m,l}: the above plus 1/24.
Rat parafermion_exponent_offset(const StringIndex& ix);

/// Entries of the inverse A_{N-1} Cartan matrix, (C^{-1})_{ij} =
/// min(i,j) - ij/N, as exact rationals (1-based indices).
Rat an1_cartan_inverse_entry(long long N, long long i, long long j);

}  // namespace qseries
