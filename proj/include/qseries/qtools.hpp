#pragma once

#include "qseries/qseries.hpp"

namespace qseries {

/// A signed monomial +-q^e, the only kind of symbolic argument the
/// Pochhammer/hypergeometric gadgets accept.
struct Monomial {
    int sign = +1;
    Rat e{0};

    static Monomial q(const Rat& e) { return {+1, e}; }
    static Monomial neg_q(const Rat& e) { return {-1, e}; }
    Monomial times_qpow(const Rat& f) const { return {sign, e + f}; }
    Monomial times(const Monomial& o) const { return {sign * o.sign, e + o.e}; }
    // q^b / this
    Monomial under_qpow(const Rat& b) const { return {sign, b - e}; }
    QSeries pow_monomial(long long k,
                         std::optional<Rat> order = std::nullopt) const {
        return QSeries::monomial((k % 2 == 0 || sign > 0) ? 1 : -1, e * k, order);
    }
};

inline QSeries qpow(const Rat& e, std::optional<Rat> order = std::nullopt) {
    return QSeries::monomial(1, e, order);
}

// (a; q^base)_n truncated at `order`.  Negative n uses the quotient
// convention (a)_n = (a)_inf/(aq^n)_inf, which reduces to inverting a finite
// product; a vanishing factor there surfaces as NonUnitError.
QSeries poch(const Monomial& a, long long n, const Rat& order,
             long long base = 1);
// (a; q^base)_inf truncated at `order`; identically zero (exact) when a
// factor vanishes, e.g. (q^0)_inf
QSeries poch_inf(const Monomial& a, const Rat& order, long long base = 1);
// condensed (a1,...,ak; q^base)_inf
QSeries poch_inf_list(const std::vector<Monomial>& as, const Rat& order,
                      long long base = 1);
// (q; q)_n and its inverse
QSeries poch_q(long long n, const Rat& order);
QSeries inv_poch_q(long long n, const Rat& order);

// Gaussian polynomial [n m]_q; identically zero unless 0 <= m <= n
QSeries qbinomial(long long n, long long m, const Rat& order);
QSeries qbinomial_exact(long long n, long long m);

// Jacobi triple product, both sides, with base Q = q^base:
//   sum_r (-1)^r x^r Q^{binom(r,2)}  =  (x, Q/x, Q; Q)_inf
QSeries triple_product_lhs(const Monomial& x, const Rat& order,
                           long long base = 1, const SumConfig& cfg = {});
QSeries triple_product_rhs(const Monomial& x, const Rat& order,
                           long long base = 1);

}  // namespace qseries
