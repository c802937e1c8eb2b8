#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qseries/configsum.hpp"
#include "qseries/stringfunc.hpp"

using namespace qseries;

namespace {

// constant-sign route: C_{m,l} = sum_r X_{0,l+1}(2r+m,1)/((q)_r (q)_{r+m}),
// an independent evaluation path through config_sum
QSeries string_fn_via_cx(long long p, long long pp, long long m, long long l,
                         const Rat& order) {
    REQUIRE(m >= 0);
    return sum_converging(
        over_nonneg([&](long long r) {
            QSeries x =
                config_sum({p, pp}, {0, l + 1, 1, 2 * r + m}, order);
            return x * inv_poch_q(r, order) * inv_poch_q(r + m, order);
        }),
        order);
}

}  // namespace

TEST_CASE("level 1: C_{m,l} = q^{(m^2-l^2)/4}/(q)_inf") {
    Rat ord(25);
    QSeries invq = poch_inf(Monomial::q(1), ord).inverse(ord);
    for (long long l : {0LL, 1LL}) {
        for (long long m = -6 + l % 2; m <= 5; m += 2) {
            QSeries c = string_fn({1, 3, m, l}, ord);
            QSeries expect = invq.shifted(Rat(m * m - l * l, 4)).truncated(ord);
            CHECK(equal_to_order(c, expect, ord).pass);
        }
    }
}

TEST_CASE("symmetry C_{m,l} = C_{-m,l} for (2,5)") {
    Rat ord(30);
    for (long long m = 0; m <= 6; ++m) {
        long long l = m % 2;
        CHECK(equal_to_order(string_fn({2, 5, m, l}, ord),
                             string_fn({2, 5, -m, l}, ord), ord)
                  .pass);
    }
}

TEST_CASE("level -1/2 closed form and constant-sign form") {
    Rat ord(30);
    for (long long m = 0; m <= 4; ++m) {
        long long l = m % 2;
        if (l > 1) continue;
        QSeries c = string_fn({2, 3, m, l}, ord);

        // q^{(m-l)/2}/(q)_inf^2 sum_{i>=0} (-1)^i q^{i(i+2m+1)/2}
        QSeries inner = sum_converging(over_nonneg([&](long long i) {
                                           return QSeries::monomial(
                                               i % 2 == 0 ? 1 : -1,
                                               Rat(i * (i + 2 * m + 1), 2), ord);
                                       }),
                                       ord);
        QSeries inv = poch_inf(Monomial::q(1), ord).inverse(ord);
        QSeries closed =
            (inner * inv * inv).shifted(Rat(m - l, 2)).truncated(ord);
        CHECK(equal_to_order(c, closed, ord).pass);

        // q^{(m-l)/2} sum_r q^r/((q)_r (q)_{r+m})
        QSeries csign = sum_converging(
            over_nonneg([&](long long r) {
                return qpow(Rat(r), ord) * inv_poch_q(r, ord) *
                       inv_poch_q(r + m, ord);
            }),
            ord);
        CHECK(equal_to_order(c, csign.shifted(Rat(m - l, 2)).truncated(ord), ord)
                  .pass);
    }
}

TEST_CASE("defining form agrees with the quadrant form") {
    // the signed inner i-sum telescopes, so the iterated (j outer, i inner)
    // evaluation works on both sides of p' = 2p
    Rat ord(25);
    for (auto [p, pp] : std::vector<std::pair<long long, long long>>{
             {2, 3}, {3, 4}, {3, 5}, {2, 5}, {1, 4}}) {
        for (long long l = 0; l <= std::min<long long>(2, pp - 2); ++l) {
            for (long long m = -6 + (l % 2); m <= 6; m += 2) {
                QSeries a = string_fn({p, pp, m, l}, ord);
                QSeries b = string_fn_defform({p, pp, m, l}, ord);
                CHECK(equal_to_order(a, b, ord).pass);
            }
        }
    }
}

TEST_CASE("neat form at integer level") {
    Rat ord(25);
    for (auto [m, l] : std::vector<std::pair<long long, long long>>{
             {0, 0}, {2, 0}, {1, 1}, {-3, 1}, {4, 2}}) {
        QSeries a = string_fn({1, 4, m, l}, ord);
        QSeries b = string_fn_neatform(2, m, l, ord);
        CHECK(equal_to_order(a, b, ord).pass);
    }
    // N = 1 collapses to the level-1 closed form
    QSeries inv = poch_inf(Monomial::q(1), ord).inverse(ord);
    CHECK(equal_to_order(string_fn_neatform(1, 3, 1, ord),
                         inv.shifted(Rat(2)).truncated(ord), ord)
              .pass);
}

TEST_CASE("integer-level shift symmetry C_{m,l} = q^{(m-l)/2} C_{m-N,N-l}") {
    Rat ord(22);
    for (long long N : {2LL, 3LL}) {
        for (long long m = -4; m <= 4; ++m) {
            for (long long l = 0; l <= N; ++l) {
                if (((m - l) % 2 + 2) % 2 != 0) continue;
                QSeries lhs = string_fn({1, N + 2, m, l}, ord);
                QSeries rhs = string_fn({1, N + 2, m - N, N - l}, Rat(30))
                                  .shifted(Rat(m - l, 2))
                                  .truncated(ord);
                CHECK(equal_to_order(lhs, rhs, ord).pass);
            }
        }
    }
}

TEST_CASE("Lepowsky-Primc lattice form") {
    CHECK(equal_to_order(lp_string_fn(2, 0, 0, Rat(25)),
                         string_fn({1, 4, 0, 0}, Rat(25)), Rat(25))
              .pass);
    CHECK(equal_to_order(lp_string_fn(3, 1, 1, Rat(20)),
                         string_fn({1, 5, 1, 1}, Rat(20)), Rat(20))
              .pass);
    // nontrivial congruence class
    CHECK(equal_to_order(lp_string_fn(2, 0, 2, Rat(25)),
                         string_fn({1, 4, 0, 2}, Rat(25)), Rat(25))
              .pass);
    // N = 1 empty lattice
    CHECK(equal_to_order(lp_string_fn(1, 2, 0, Rat(25)),
                         string_fn({1, 3, 2, 0}, Rat(25)), Rat(25))
              .pass);
}

TEST_CASE("constant-sign route through the configuration sums") {
    Rat ord(20);
    for (auto [p, pp] : std::vector<std::pair<long long, long long>>{
             {2, 5}, {3, 5}, {3, 4}, {1, 4}}) {
        for (long long m = 0; m <= 3; ++m) {
            long long l = m % 2;
            if (l > pp - 2) continue;
            CHECK(equal_to_order(string_fn({p, pp, m, l}, ord),
                                 string_fn_via_cx(p, pp, m, l, ord), ord)
                      .pass);
        }
    }
}

TEST_CASE("parafermion characters") {
    Rat ord(20);
    // level 1: (q)_inf C_{m,l} is the single monomial q^{(m^2-l^2)/4}
    QSeries e = parafermion_char({1, 3, 4, 0}, ord);
    CHECK(equal_to_order(e, QSeries::monomial(1, Rat(4), ord), ord).pass);

    // level -1/2: (q)_inf C_{m,l} = q^{(m-l)/2} sum_r q^{r(r+m+1)}/((q)_r(q)_{r+m})
    for (long long m : {0LL, 1LL, 2LL}) {
        long long l = m % 2;
        QSeries lhs = parafermion_char({2, 3, m, l}, ord);
        QSeries rhs = sum_converging(
            over_nonneg([&](long long r) {
                return qpow(Rat(r * (r + m + 1)), ord) * inv_poch_q(r, ord) *
                       inv_poch_q(r + m, ord);
            }),
            ord);
        CHECK(equal_to_order(lhs, rhs.shifted(Rat(m - l, 2)).truncated(ord), ord)
                  .pass);
    }

    // m = l = 0 has leading coefficient 1 at q^0
    QSeries t = parafermion_char({3, 5, 0, 0}, Rat(10));
    CHECK(t.coeff(Rat(0)) == 1);

    // documented exponent offsets
    CHECK(unnormalized_exponent_offset({1, 3, 0, 0}) == Rat(1, 12) - Rat(1, 8));
    CHECK(parafermion_exponent_offset({1, 3, 0, 0}) ==
          Rat(1, 12) - Rat(1, 8) + Rat(1, 24));
}

TEST_CASE("index validation") {
    CHECK_THROWS_AS(string_fn({2, 5, 1, 0}, Rat(10)), ParityError);
    CHECK_THROWS_AS(string_fn({2, 5, 0, 4}, Rat(10)), DomainError);
    CHECK_THROWS_AS(unnormalized_exponent_offset({1, 2, 0, 0}), DomainError);
}
