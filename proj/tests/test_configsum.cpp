#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qseries/configsum.hpp"

using namespace qseries;

namespace {

const std::vector<std::pair<long long, long long>> kGrid = {
    {1, 3}, {2, 3}, {1, 4}, {3, 4}, {2, 5},
    {3, 5}, {4, 5}, {3, 7}, {4, 7}, {5, 8}};

}  // namespace

TEST_CASE("closed forms for (1,3) and (2,3)") {
    // X_{0,l+1}^{(1,3)}(L,1) = q^{(L^2-l^2)/4},  X_{0,l+1}^{(2,3)}(L,1) = q^{(L-l)/2}
    for (long long l = 0; l <= 2; ++l) {
        for (long long L = l; L <= 12; L += 2) {
            if (l + 1 > 2) {
                // s must lie in N_{p'-1} = {1,2}
                break;
            }
            QSeries a = config_sum({1, 3}, {0, l + 1, 1, L});
            CHECK(equal_exact(
                a, QSeries::monomial(1, Rat(L * L - l * l, 4))));
            QSeries b = config_sum({2, 3}, {0, l + 1, 1, L});
            CHECK(equal_exact(b, QSeries::monomial(1, Rat(L - l, 2))));
        }
    }
}

TEST_CASE("minimal L gives the constant 1") {
    for (auto [p, pp] : kGrid) {
        for (long long s = 1; s <= pp - 1; ++s) {
            for (long long b = 1; b <= pp - 1; ++b) {
                for (long long r = 0; r <= p; ++r) {
                    long long L = std::max<long long>(std::llabs(s - b), 0);
                    QSeries x = config_sum({p, pp}, {r, s, b, L});
                    CHECK(equal_exact(x, QSeries::one()));
                }
            }
        }
    }
}

TEST_CASE("X vanishes for L < |s-b|") {
    for (auto [p, pp] : kGrid) {
        if (pp < 4) continue;
        long long s = pp - 1, b = 1;
        long long L = s - b - 2;
        if (L < 0) continue;
        CHECK(config_sum({p, pp}, {0, s, b, L}).known_zero());
    }
}

TEST_CASE("flip, dual and rzero symmetries on sampled tuples") {
    const std::vector<std::tuple<long long, long long, long long, long long,
                                 long long>>
        tuples = {// p, pp, r, s, b
                  {3, 5, 1, 2, 3}, {2, 5, 1, 3, 2}, {3, 4, 2, 1, 2}};
    for (auto [p, pp, r, s, b] : tuples) {
        for (long long L = (s + b) % 2; L <= 12; L += 2) {
            CHECK(flip_symmetry_check({p, pp}, {r, s, b, L}).passed());
            CHECK(dual_symmetry_check({p, pp}, {r, s, b, L}).passed());
        }
    }
    for (long long s = 1; s <= 4; ++s)
        for (long long L = (s + 1) % 2; L <= 12; L += 2)
            CHECK(rzero_check({2, 5}, s, L).passed());
    // the (1,3) <-> (2,3) dual pair reproduces the closed forms
    for (long long L = 1; L <= 11; L += 2)
        CHECK(dual_symmetry_check({1, 3}, {0, 2, 1, L}).passed());
    // degenerate L=0, s=b
    CHECK(dual_symmetry_check({3, 5}, {1, 2, 2, 0}).passed());
}

TEST_CASE("full symmetry sweep over the (p,p') grid") {
    for (auto [p, pp] : kGrid) {
        for (long long s = 1; s <= pp - 1; ++s) {
            for (long long b = 1; b <= pp - 1; ++b) {
                for (long long r = 0; r <= p; ++r) {
                    long long L = 14 - ((14 + s + b) % 2);
                    CHECK(flip_symmetry_check({p, pp}, {r, s, b, L}).passed());
                    if (b - r >= 0 && b - r <= pp - p)
                        CHECK(dual_symmetry_check({p, pp}, {r, s, b, L})
                                  .passed());
                }
            }
        }
        for (long long s = 1; s <= pp - 1; ++s) {
            long long L = 14 - ((14 + s + 1) % 2);
            CHECK(rzero_check({p, pp}, s, L).passed());
        }
    }
}

TEST_CASE("parity violations are rejected") {
    CHECK_THROWS_AS(config_sum({2, 5}, {0, 2, 1, 4}), ParityError);
    CHECK_THROWS_AS(config_sum({2, 5}, {0, 6, 1, 5}), DomainError);
}

TEST_CASE("truncated evaluation agrees with the exact polynomial") {
    QSeries full = config_sum({3, 5}, {1, 2, 2, 10});
    QSeries cut = config_sum({3, 5}, {1, 2, 2, 10}, Rat(8));
    CHECK(equal_to_order(full, cut, Rat(8)).pass);
}
