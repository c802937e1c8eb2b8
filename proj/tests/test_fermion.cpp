#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qseries/fermion.hpp"
#include "qseries/stringfunc.hpp"

using namespace qseries;

TEST_CASE("(3,5): the single-sum Rogers-Ramanujan structure") {
    CFSystem sys = build_cf_system(3, 5);
    CHECK(sys.nu == std::vector<long long>{1, 2});
    CHECK(sys.d == 1);
    CHECK(sys.y.back() == 5);
    CHECK(sys.ybar.back() == 3);
    CHECK(sys.tak == std::vector<long long>{1, 2, 3});
    CHECK(sys.takbar == std::vector<long long>{0, 1, 2});
    CHECK(sys.B[0][0] == 1);  // tadpole
    CHECK(takahashi_index(sys, 1).has_value());
    CHECK(!takahashi_index(sys, 5).has_value());
}

TEST_CASE("p' = p+1 gives the A-type Cartan matrix and all lengths") {
    for (long long p : {3LL, 4LL, 5LL}) {
        CFSystem sys = build_cf_system(p, p + 1);
        CHECK(sys.d == p - 2);
        // Takahashi set is all of N_{p'-1}
        std::vector<long long> expect;
        for (long long s = 1; s <= p; ++s) expect.push_back(s);
        CHECK(sys.tak == expect);
        for (long long i = 0; i < sys.d; ++i)
            for (long long j = 0; j < sys.d; ++j)
                CHECK(sys.B[i][j] == (i == j ? 2 : (std::llabs(i - j) == 1 ? -1 : 0)));
    }
}

TEST_CASE("p' = p+2 gives the tadpole Cartan-type matrix") {
    for (long long p : {3LL, 5LL, 7LL}) {
        CFSystem sys = build_cf_system(p, p + 2);
        CHECK(sys.d == (p - 1) / 2);
        CHECK(sys.B[sys.d - 1][sys.d - 1] == 1);
        for (long long i = 0; i + 1 < sys.d; ++i) CHECK(sys.B[i][i] == 2);
    }
}

TEST_CASE("range and gcd violations fail loudly") {
    CHECK_THROWS_AS(build_cf_system(2, 5), DomainError);   // p' > 2p
    CHECK_THROWS_AS(build_cf_system(2, 4), DomainError);   // gcd 2
    CHECK_THROWS_AS(build_cf_system(3, 3), DomainError);
}

TEST_CASE("d = 0 lattice gives the empty product") {
    CFSystem sys = build_cf_system(2, 3);
    CHECK(sys.d == 0);
    QSeries f = fermionic_f(sys, scaled_e1(sys, 4), unit_uvector(sys, 0));
    CHECK(equal_exact(f, QSeries::one()));
}

TEST_CASE("zero-length fermionic X") {
    CHECK(equal_exact(fermionic_X(3, 5, 1, 2, 2, 0), QSeries::one()));
    CHECK(fermionic_X(3, 5, 0, 3, 1, 0).known_zero());
}

TEST_CASE("(F0s): X_{0,s}^{(3,5)}(L,1) matches the bosonic polynomial") {
    for (long long s = 1; s <= 3; ++s)
        for (long long L = (s + 1) % 2; L <= 16; L += 2)
            CHECK(fermionic_vs_bosonic(3, 5, 0, s, 1, L).passed());
}

TEST_CASE("dual (F0sdual): X_{0,s}^{(2,5)}(L,1) matches") {
    for (long long s = 1; s <= 4; ++s)
        for (long long L = (s + 1) % 2; L <= 16; L += 2)
            CHECK(fermionic_vs_bosonic(2, 5, 0, s, 1, L).passed());
}

TEST_CASE("the four (2,5) Schur polynomial displays") {
    for (long long L = 1; L <= 10; ++L) {
        // X_{0,1}(2L,1) = q^L (1 + sum_{n=1}^{L-1} q^{n(n+1)} [2L-2-n, n])
        QSeries s1 = QSeries::one();
        for (long long n = 1; n <= L - 1; ++n)
            s1 += qbinomial_exact(2 * L - 2 - n, n).shifted(Rat(n * (n + 1)));
        CHECK(equal_exact(config_sum({2, 5}, {0, 1, 1, 2 * L}), s1.shifted(Rat(L))));
        CHECK(equal_exact(fermionic_X(2, 5, 0, 1, 1, 2 * L), s1.shifted(Rat(L))));

        // X_{0,2}(2L+1,1) = q^L sum_{n=0}^{L} q^{n^2} [2L-n, n]
        QSeries s2 = QSeries::zero(std::nullopt);
        for (long long n = 0; n <= L; ++n)
            s2 += qbinomial_exact(2 * L - n, n).shifted(Rat(n * n));
        CHECK(equal_exact(config_sum({2, 5}, {0, 2, 1, 2 * L + 1}),
                          s2.shifted(Rat(L))));
        CHECK(equal_exact(fermionic_X(2, 5, 0, 2, 1, 2 * L + 1),
                          s2.shifted(Rat(L))));

        // X_{0,3}(2L,1) = q^{L-1} sum_{n=0}^{L-1} q^{n^2} [2L-1-n, n]
        QSeries s3 = QSeries::zero(std::nullopt);
        for (long long n = 0; n <= L - 1; ++n)
            s3 += qbinomial_exact(2 * L - 1 - n, n).shifted(Rat(n * n));
        CHECK(equal_exact(config_sum({2, 5}, {0, 3, 1, 2 * L}),
                          s3.shifted(Rat(L - 1))));
        CHECK(equal_exact(fermionic_X(2, 5, 0, 3, 1, 2 * L),
                          s3.shifted(Rat(L - 1))));

        // X_{0,4}(2L+1,1) = q^{L-1} sum_{n=0}^{L-1} q^{n(n+1)} [2L-1-n, n]
        QSeries s4 = QSeries::zero(std::nullopt);
        for (long long n = 0; n <= L - 1; ++n)
            s4 += qbinomial_exact(2 * L - 1 - n, n).shifted(Rat(n * (n + 1)));
        CHECK(equal_exact(config_sum({2, 5}, {0, 4, 1, 2 * L + 1}),
                          s4.shifted(Rat(L - 1))));
        CHECK(equal_exact(fermionic_X(2, 5, 0, 4, 1, 2 * L + 1),
                          s4.shifted(Rat(L - 1))));
    }
}

TEST_CASE("the (3,4) Ising closed forms") {
    for (long long L = 0; L <= 12; ++L) {
        // X_{0,2}(2L+1,1) = q^L (-q)_L
        QSeries rhs = poch(Monomial::neg_q(1), L, Rat(1000)).declared_exact();
        CHECK(equal_exact(config_sum({3, 4}, {0, 2, 1, 2 * L + 1}),
                          rhs.shifted(Rat(L))));
        CHECK(equal_exact(fermionic_X(3, 4, 0, 2, 1, 2 * L + 1),
                          rhs.shifted(Rat(L))));

        // X_{0,1}(2L,1) +- q^{3/2} X_{0,3}(2L,1) = q^L (-+ q^{1/2})_L
        QSeries x01 = config_sum({3, 4}, {0, 1, 1, 2 * L});
        QSeries x03 = config_sum({3, 4}, {0, 3, 1, 2 * L});
        QSeries plus = x01 + x03.shifted(Rat(3, 2));
        QSeries minus = x01 - x03.shifted(Rat(3, 2));
        QSeries pm = poch(Monomial::neg_q(Rat(1, 2)), L, Rat(1000)).declared_exact();
        QSeries pp = poch(Monomial::q(Rat(1, 2)), L, Rat(1000)).declared_exact();
        CHECK(equal_exact(plus, pm.shifted(Rat(L))));
        CHECK(equal_exact(minus, pp.shifted(Rat(L))));
    }
}

TEST_CASE("bosonic = fermionic across the admissible sample grid") {
    // direct systems: all (F)-pairs (b = l_{beta+1}, r = truncated partner)
    for (auto [p, pp] : std::vector<std::pair<long long, long long>>{
             {3, 5}, {3, 4}, {4, 7}, {5, 8}, {5, 7}, {4, 5}}) {
        CFSystem sys = build_cf_system(p, pp);
        for (std::size_t beta = 1; beta < sys.tak.size(); ++beta) {
            long long b = sys.tak[beta], r = sys.takbar[beta];
            for (long long s : sys.tak) {
                long long L = 12 - ((12 + s + b) % 2);
                CHECK(fermionic_vs_bosonic(p, pp, r, s, b, L).passed());
            }
        }
        for (long long s : sys.tak) {
            long long L = 13 - ((13 + s + 1) % 2);
            CHECK(fermionic_vs_bosonic(p, pp, 0, s, 1, L).passed());
            long long sp = pp - s;
            long long Lp = 13 - ((13 + sp + 1) % 2);
            CHECK(fermionic_vs_bosonic(p, pp, 0, sp, 1, Lp).passed());
            CHECK(fermionic_vs_bosonic(p, pp, 1, s, 1, L).passed());
        }
    }
    // dual systems
    for (auto [p, pp] :
         std::vector<std::pair<long long, long long>>{{2, 5}, {3, 7}}) {
        CFSystem sys = build_cf_system(pp - p, pp);
        for (std::size_t beta = 1; beta < sys.tak.size(); ++beta) {
            long long b = sys.tak[beta];
            long long r = b - sys.takbar[beta];
            for (long long s : sys.tak) {
                long long L = 12 - ((12 + s + b) % 2);
                CHECK(fermionic_vs_bosonic(p, pp, r, s, b, L).passed());
            }
        }
        for (long long s : sys.tak) {
            long long L = 13 - ((13 + s + 1) % 2);
            CHECK(fermionic_vs_bosonic(p, pp, 0, s, 1, L).passed());
        }
    }
}

TEST_CASE("(1,N+2) explicit A_{N-1} forms match the generic dual route") {
    for (long long N : {2LL, 3LL}) {
        long long d = N - 1;
        for (long long l = 0; l <= N; ++l) {
            for (long long L = l % 2 == 0 ? 0 : 1; L <= 12; L += 2) {
                if ((L + l) % 2 != 0) continue;
                // X^{(1,N+2)}_{0,l+1}(L,1) = q^{(L^2-l^2)/4N} *
                //   sum over n with (L-l)/2N + (C^{-1}n)_1 in Z of
                //   q^{n C^{-1} (n - e_{N-l})} [m+n over n],
                //   m + n = (L e_1 + e_{N-l} + I m)/2
                long long lam = N - l;
                QSeries acc = QSeries::zero(std::nullopt, 4 * N);
                for (long long n1 = 0; n1 <= L + 2; ++n1) {
                    for (long long n2 = 0; n2 <= (d == 2 ? L + 2 : 0); ++n2) {
                        std::vector<long long> n{n1};
                        if (d == 2) n.push_back(n2);
                        Rat c1(L - l, 2 * N);
                        for (long long j = 1; j <= d; ++j)
                            c1 += an1_cartan_inverse_entry(N, 1, j) * Rat(n[j - 1]);
                        if (c1.denominator() != 1) continue;
                        // m = C^{-1} (L e_1 + e_lam - 2n)
                        std::vector<Rat> mr(d, Rat(0));
                        bool ok = true;
                        for (long long i = 1; i <= d; ++i) {
                            Rat mi(0);
                            for (long long j = 1; j <= d; ++j) {
                                long long rhs = (j == 1 ? L : 0) +
                                                (j == lam ? 1 : 0) -
                                                2 * n[j - 1];
                                mi += an1_cartan_inverse_entry(N, i, j) * Rat(rhs);
                            }
                            mr[i - 1] = mi;
                            if (mi.denominator() != 1 || mi < 0) ok = false;
                        }
                        if (!ok) continue;
                        Rat e(0);
                        for (long long i = 1; i <= d; ++i)
                            for (long long j = 1; j <= d; ++j)
                                e += an1_cartan_inverse_entry(N, i, j) *
                                     Rat(n[i - 1]) *
                                     Rat(n[j - 1] - (j == lam ? 1 : 0));
                        QSeries term = QSeries::one();
                        for (long long i = 1; i <= d; ++i) {
                            long long mi = mr[i - 1].numerator();
                            term *= qbinomial_exact(mi + n[i - 1], n[i - 1]);
                        }
                        acc += term.shifted(e);
                    }
                }
                QSeries expect = acc.shifted(Rat(L * L - l * l, 4 * N));
                QSeries got = fermionic_X(1, N + 2, 0, l + 1, 1, L);
                CHECK(equal_exact(got, expect));
            }
        }
    }
}

TEST_CASE("precondition failures") {
    CHECK_THROWS_AS(fermionic_X(3, 5, 0, 2, 1, 4), ParityError);
    // r must be the truncated partner of b
    CHECK_THROWS_AS(fermionic_X(3, 5, 0, 2, 2, 4), DomainError);
}
