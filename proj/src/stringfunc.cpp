#include "qseries/stringfunc.hpp"

#include <cmath>

namespace qseries {

namespace {

void validate(const StringIndex& ix) {
    if (!(1 <= ix.p && ix.p < ix.pp)) throw DomainError("need 1 <= p < p'");
    if (!(0 <= ix.l && ix.l <= ix.pp - 2))
        throw DomainError("l out of range Z_{p'-1}");
    if (((ix.m - ix.l) % 2 + 2) % 2 != 0)
        throw ParityError("l and m must have equal parity");
}

// sum of (-1)^{sign index} q^{E} over the quadrant i = i0 + a*di,
// j = j0 + b*dj (a,b >= 0).  In every quadrant used here E is jointly convex
// with nonnegative cross term, so along each axis it is a parabola and the
// enumeration may stop once the value is >= order and nondecreasing.
template <typename ExpFn, typename SignFn>
QSeries quadrant_sum(long long i0, int di, long long j0, int dj, ExpFn E,
                     SignFn sign, const Rat& order, const SumConfig& cfg) {
    QSeries::Terms acc;
    std::optional<Rat> prev_row_min;
    int quiet = 0;
    const int window = std::max(2, cfg.window);
    for (long long a = 0;; ++a) {
        if (a > cfg.shell_budget)
            throw BudgetExceeded("quadrant sum exceeded its shell budget");
        long long i = i0 + a * di;
        std::optional<Rat> row_min;
        std::optional<Rat> prevE;
        for (long long b = 0;; ++b) {
            if (b > cfg.shell_budget)
                throw BudgetExceeded("quadrant sum exceeded its shell budget");
            long long j = j0 + b * dj;
            Rat e = E(i, j);
            row_min = row_min ? std::min(*row_min, e) : e;
            if (e < order) {
                if (e.denominator() != 1)
                    throw GridError("string function exponent off the integer grid");
                acc[e.numerator()] += sign(i, j);
            }
            // each row is a parabola in b: done once past the vertex and the
            // value has cleared the order
            if (prevE && !(e < *prevE) && !(e < order)) break;
            prevE = e;
        }
        if (prev_row_min && !(*row_min < *prev_row_min) && !(*row_min < order))
            ++quiet;
        else
            quiet = 0;
        if (quiet >= window) break;
        prev_row_min = row_min;
    }
    return QSeries::from_terms(std::move(acc), 1, order);
}

int parity_sign(long long i) { return ((i % 2) + 2) % 2 == 0 ? 1 : -1; }

// the four-quadrant sum, equal to (q)_inf^3 * C_{m,l}
QSeries quadrants_total(const StringIndex& ix, const Rat& order,
                        const SumConfig& cfg) {
    const long long p = ix.p, pp = ix.pp, m = ix.m, l = ix.l;
    auto Eplus = [&](long long i, long long j) {
        return Rat(i * (i + m) + (l + 1) * (2 * p * j + i), 2) +
               Rat(pp * j * (p * j + i));
    };
    auto Eminus = [&](long long i, long long j) {
        return Rat(i * (i + m) - (l + 1) * (2 * p * j + i), 2) +
               Rat(pp * j * (p * j + i));
    };
    auto sgn = [](long long i, long long) { return parity_sign(i); };
    QSeries s = quadrant_sum(0, +1, 0, +1, Eplus, sgn, order, cfg);
    s -= quadrant_sum(-1, -1, -1, -1, Eplus, sgn, order, cfg);
    s -= quadrant_sum(0, +1, 1, +1, Eminus, sgn, order, cfg);
    s += quadrant_sum(-1, -1, 0, -1, Eminus, sgn, order, cfg);
    return s;
}

// s/(q)_inf^3 to the requested order; recompute() must rebuild s at a deeper
// order so that negatively-valued raw terms are fully cancelled
template <typename Recompute>
QSeries divide_by_euler_cubed(QSeries s, const Rat& order, Recompute recompute) {
    if (!s.known_zero() && *s.valuation() < 0)
        s = recompute(order - *s.valuation());
    Rat work = s.order() ? *s.order() : order;
    QSeries inv = poch_inf(Monomial::q(1), work, 1).inverse(work);
    return (s * inv * inv * inv).truncated(order);
}

}  // namespace

QSeries string_fn(const StringIndex& ix, const Rat& order,
                  const SumConfig& cfg) {
    validate(ix);
    QSeries s = quadrants_total(ix, order, cfg);
    return divide_by_euler_cubed(std::move(s), order, [&](const Rat& deeper) {
        return quadrants_total(ix, deeper, cfg);
    });
}

namespace {

// inner i-sum of the defining form at fixed j, truncated at `order`
QSeries defform_inner(const StringIndex& ix, long long j, const Rat& order,
                      const SumConfig& cfg) {
    const long long p = ix.p, pp = ix.pp, m = ix.m, l = ix.l;
    const long long cj = j * p * (pp * j + l + 1);
    const long long w = 2 * pp * j + l + 1;
    QSeries::Terms acc;
    for (int brace : {+1, -1}) {
        std::optional<Rat> prevE;
        for (long long i = 1;; ++i) {
            if (i > cfg.shell_budget)
                throw BudgetExceeded("defining-form inner sum exceeded budget");
            Rat e = Rat(i * (i + m) + brace * i * w, 2) + Rat(cj);
            if (e < order) {
                if (e.denominator() != 1)
                    throw GridError("string function exponent off the integer grid");
                acc[e.numerator()] += (brace > 0) ? parity_sign(i) : -parity_sign(i);
            }
            if (prevE && !(e < *prevE) && !(e < order)) break;
            prevE = e;
        }
    }
    return QSeries::from_terms(std::move(acc), 1, order);
}

QSeries defform_raw(const StringIndex& ix, const Rat& order,
                    const SumConfig& cfg) {
    return sum_converging(
        over_integers([&](long long j) { return defform_inner(ix, j, order, cfg); }),
        order, cfg);
}

}  // namespace

QSeries string_fn_defform(const StringIndex& ix, const Rat& order,
                          const SumConfig& cfg) {
    validate(ix);
    QSeries s = defform_raw(ix, order, cfg);
    return divide_by_euler_cubed(std::move(s), order, [&](const Rat& deeper) {
        return defform_raw(ix, deeper, cfg);
    });
}

namespace {

QSeries neatform_raw(long long N, long long m, long long l, const Rat& order,
                     const SumConfig& cfg) {
    auto E = [&](long long k, long long j) {
        long long d = k - j;
        return Rat(d * (d - 1) - 2 * N * j * k + k * (m - l) + j * (m + l), 2);
    };
    auto sgn = [](long long k, long long j) { return parity_sign(k - j); };
    // {sum_{j>=1,k<=0} - sum_{j<=0,k>=1}} (-1)^{k-j} q^{E(k,j)}
    QSeries s = quadrant_sum(0, -1, 1, +1, E, sgn, order, cfg);
    s -= quadrant_sum(1, +1, 0, -1, E, sgn, order, cfg);
    return s;
}

}  // namespace

QSeries string_fn_neatform(long long N, long long m, long long l,
                           const Rat& order, const SumConfig& cfg) {
    if (N < 1) throw DomainError("neat form needs integer level N >= 1");
    validate(StringIndex{1, N + 2, m, l});
    QSeries s = neatform_raw(N, m, l, order, cfg);
    return divide_by_euler_cubed(std::move(s), order, [&](const Rat& deeper) {
        return neatform_raw(N, m, l, deeper, cfg);
    });
}

Rat an1_cartan_inverse_entry(long long N, long long i, long long j) {
    if (!(1 <= i && i < N && 1 <= j && j < N))
        throw DomainError("Cartan inverse index out of range");
    return Rat(std::min(i, j)) - Rat(i * j, N);
}

QSeries lp_string_fn(long long N, long long m, long long l, const Rat& order,
                     const SumConfig& cfg) {
    if (N < 1) throw DomainError("Lepowsky-Primc form needs N >= 1");
    validate(StringIndex{1, N + 2, m, l});
    const long long d = N - 1;
    const Rat pref(m * m - l * l, 4 * N);

    Rat work = order - std::min(pref, Rat(0)) + 1;
    QSeries inv = poch_inf(Monomial::q(1), work, 1).inverse(work);
    if (d == 0)  // empty lattice, the congruence reduces to the parity
        return inv.shifted(pref).truncated(order);

    // hard box bound: n C^{-1} n >= M^2/4 and the linear part is at most
    // d*N*M in magnitude, so exponents clear `work` beyond this M
    double w = static_cast<double>(work.numerator()) / work.denominator();
    long long M = 2 * d * N + 2 +
                  2 * static_cast<long long>(
                          std::sqrt(std::max(0.0, w + d * N * N)) + 1);
    if (M > cfg.shell_budget) throw BudgetExceeded("LP lattice budget");

    QSeries acc = QSeries::zero(work, 1);
    std::vector<long long> n(static_cast<std::size_t>(d), 0);
    std::function<void(long long)> rec = [&](long long idx) {
        if (idx == d) {
            Rat c1(m + l, 2 * N);  // congruence (m+l)/2N + (C^{-1}n)_1 in Z
            for (long long j = 1; j <= d; ++j)
                c1 += an1_cartan_inverse_entry(N, 1, j) *
                      Rat(n[static_cast<std::size_t>(j - 1)]);
            if (c1.denominator() != 1) return;
            Rat e(0);  // n C^{-1} (n - e_l)
            for (long long i = 1; i <= d; ++i)
                for (long long j = 1; j <= d; ++j)
                    e += an1_cartan_inverse_entry(N, i, j) *
                         Rat(n[static_cast<std::size_t>(i - 1)]) *
                         Rat(n[static_cast<std::size_t>(j - 1)] - (j == l ? 1 : 0));
            if (!(e < work)) return;
            QSeries term = QSeries::one(work - e);
            for (long long j = 1; j <= d; ++j)
                term *= inv_poch_q(n[static_cast<std::size_t>(j - 1)], work - e);
            acc += term.shifted(e);
            return;
        }
        for (long long v = 0; v <= M; ++v) {
            n[static_cast<std::size_t>(idx)] = v;
            rec(idx + 1);
        }
    };
    rec(0);
    return (acc * inv).shifted(pref).truncated(order);
}

QSeries parafermion_char(const StringIndex& ix, const Rat& order,
                         const SumConfig& cfg) {
    QSeries c = string_fn(ix, order, cfg);
    return (poch_inf(Monomial::q(1), order, 1) * c).truncated(order);
}

Rat unnormalized_exponent_offset(const StringIndex& ix) {
    validate(ix);
    if (ix.pp == 2 * ix.p)
        throw DomainError("level N = 0 has no normalization exponent");
    Rat a((ix.l + 1) * (ix.l + 1) * ix.p, 4 * ix.pp);
    Rat b(ix.m * ix.m * ix.p, 4 * (ix.pp - 2 * ix.p));
    return a - b - Rat(1, 8);
}

Rat parafermion_exponent_offset(const StringIndex& ix) {
    return unnormalized_exponent_offset(ix) + Rat(1, 24);
}

}  // namespace qseries
