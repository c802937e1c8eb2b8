#include "qseries/bailey.hpp"

#include "qseries/configsum.hpp"
#include "qseries/stringfunc.hpp"

#include <cmath>

namespace qseries {

QSeries SeriesSequence::at(long long L, const Rat& order) const {
    if (!state_) throw DomainError("evaluating an empty SeriesSequence");
    {
        std::lock_guard<std::mutex> lk(state_->mu);
        auto it = state_->memo.find({L, order});
        if (it != state_->memo.end()) return it->second;
    }
    QSeries v = state_->eval(L, order);
    std::lock_guard<std::mutex> lk(state_->mu);
    state_->memo.emplace(std::make_pair(L, order), v);
    return v;
}

namespace {

QSeries inv_poch_aq(const Rat& a_exp, long long n, const Rat& order) {
    // 1/(aq)_n with a = q^{a_exp}
    return poch(Monomial::q(a_exp + 1), n, order).inverse(order);
}

IdentityReport pass_report(std::string name,
                           std::map<std::string, std::string> params,
                           const Rat& order) {
    IdentityReport rep;
    rep.identity = std::move(name);
    rep.params = std::move(params);
    rep.order = order;
    rep.status = CheckStatus::pass;
    return rep;
}

}  // namespace

IdentityReport verify_bailey_pair(const BaileyPair& bp, long long Lmax,
                                  const Rat& order, const SumConfig& cfg) {
    (void)cfg;
    for (long long L = 0; L <= Lmax; ++L) {
        QSeries rhs = QSeries::zero(order, 1);
        for (long long r = 0; r <= L; ++r)
            rhs += bp.alpha.at(r, order) * inv_poch_q(L - r, order) *
                   inv_poch_aq(bp.a_exponent, L + r, order);
        auto cmp = equal_to_order(bp.beta.at(L, order), rhs, order);
        if (!cmp.pass)
            return make_report("bailey-pair", {{"L", std::to_string(L)}}, cmp);
    }
    return pass_report("bailey-pair", {{"Lmax", std::to_string(Lmax)}}, order);
}

IdentityReport verify_conjugate_pair(const ConjugateBaileyPair& cbp,
                                     long long Lmax, const Rat& order,
                                     const SumConfig& cfg) {
    for (long long L = 0; L <= Lmax; ++L) {
        QSeries rhs = sum_converging(
            over_nonneg([&](long long k) {
                long long r = L + k;
                return cbp.delta.at(r, order) * inv_poch_q(r - L, order) *
                       inv_poch_aq(cbp.a_exponent, r + L, order);
            }),
            order, cfg);
        auto cmp = equal_to_order(cbp.gamma.at(L, order), rhs, order);
        if (!cmp.pass)
            return make_report("conjugate-pair", {{"L", std::to_string(L)}}, cmp);
    }
    return pass_report("conjugate-pair", {{"Lmax", std::to_string(Lmax)}}, order);
}

// --- named Bailey pairs -----------------------------------------------------

BaileyPair bp_initial() {
    BaileyPair bp;
    bp.a_exponent = Rat(0);
    bp.alpha = SeriesSequence([](long long L, const Rat& order) {
        if (L == 0) return QSeries::one(order);
        QSeries t = QSeries::monomial(1, Rat(L * (L - 1), 2), order) +
                    QSeries::monomial(1, Rat(L * (L - 1), 2) + L, order);
        return (L % 2 == 0) ? t : t.negated();
    });
    bp.beta = SeriesSequence([](long long L, const Rat& order) {
        return L == 0 ? QSeries::one(order) : QSeries::zero(order, 1);
    });
    return bp;
}

BaileyPair bp_unit(long long eta) {
    BaileyPair bp;
    bp.a_exponent = Rat(eta);
    bp.alpha = SeriesSequence([eta](long long L, const Rat& order) {
        if (L == 0) return QSeries::one(order);
        // (1 - a q^{2L}) (a)_L/(1-a) written as (1 - a q^{2L}) (aq)_{L-1}
        QSeries head =
            QSeries::one(order) - QSeries::monomial(1, Rat(eta + 2 * L), order);
        QSeries t = head * poch(Monomial::q(Rat(eta + 1)), L - 1, order) *
                    inv_poch_q(L, order);
        t = t.shifted(Rat(L * (L - 1), 2)).truncated(order);
        return (L % 2 == 0) ? t : t.negated();
    });
    bp.beta = SeriesSequence([](long long L, const Rat& order) {
        return L == 0 ? QSeries::one(order) : QSeries::zero(order, 1);
    });
    return bp;
}

BaileyPair bp_rogers_first() {
    BaileyPair bp;
    bp.a_exponent = Rat(0);
    bp.alpha = SeriesSequence([](long long L, const Rat& order) {
        if (L == 0) return QSeries::one(order);
        QSeries t = QSeries::monomial(1, Rat(L * (3 * L - 1), 2), order) +
                    QSeries::monomial(1, Rat(L * (3 * L - 1), 2) + L, order);
        return (L % 2 == 0) ? t : t.negated();
    });
    bp.beta = SeriesSequence(
        [](long long L, const Rat& order) { return inv_poch_q(L, order); });
    return bp;
}

BaileyPair bp_rogers_second() {
    BaileyPair bp;
    bp.a_exponent = Rat(1);
    bp.alpha = SeriesSequence([](long long L, const Rat& order) {
        // (-1)^L q^{L(3L+1)/2} (1-q^{2L+1})/(1-q)
        QSeries geo = QSeries::zero(order, 1);
        for (long long k = 0; k <= 2 * L; ++k)
            geo += QSeries::monomial(1, Rat(k), order);
        QSeries t = geo.shifted(Rat(L * (3 * L + 1), 2)).truncated(order);
        return (L % 2 == 0) ? t : t.negated();
    });
    bp.beta = SeriesSequence(
        [](long long L, const Rat& order) { return inv_poch_q(L, order); });
    return bp;
}

// --- conjugate pairs --------------------------------------------------------

ConjugateBaileyPair cbp_gd(const RhoSpec& rho1, const RhoSpec& rho2,
                           std::optional<long long> M, const Rat& a_exp,
                           const SumConfig& cfg) {
    (void)cfg;
    ConjugateBaileyPair cbp;
    cbp.a_exponent = a_exp;
    // (rho1)_L (rho2)_L (aq/rho1rho2)^L with each infinite rho folded via
    // lim (rho)_L rho^{-L} = (-1)^L q^{binom(L,2)}
    auto common = [rho1, rho2, a_exp](long long L, const Rat& order) {
        QSeries t = QSeries::one(order);
        Rat power_exp = (a_exp + 1) * L;
        int sign = 1;
        for (const RhoSpec& rho : {rho1, rho2}) {
            if (rho.infinite) {
                t = t.shifted(Rat(L * (L - 1), 2));
                if (L % 2 == 1) sign = -sign;
            } else {
                t *= poch(rho.value, L, order);
                power_exp -= rho.value.e * L;
                if (rho.value.sign < 0 && L % 2 == 1) sign = -sign;
            }
        }
        t = t.shifted(power_exp).truncated(order);
        return sign < 0 ? t.negated() : t;
    };
    cbp.gamma = SeriesSequence([=](long long L, const Rat& order) {
        if (M && L > *M) return QSeries::zero(order, 1);
        QSeries t = common(L, order);
        for (const RhoSpec& rho : {rho1, rho2}) {
            if (rho.infinite) continue;  // (aq/rho)_L -> 1
            Monomial arg = rho.value.under_qpow(a_exp + 1);
            t *= poch(arg, L, order).inverse(order);
        }
        if (M)
            t *= inv_poch_q(*M - L, order) * inv_poch_aq(a_exp, *M + L, order);
        else
            t *= poch_inf(Monomial::q(a_exp + 1), order).inverse(order);
        return t.truncated(order);
    });
    cbp.delta = SeriesSequence([=](long long L, const Rat& order) {
        if (!M) {
            // M -> infinity, normalized by (q)_inf as in the classical limit
            QSeries t = common(L, order);
            if (!rho1.infinite && !rho2.infinite) {
                Monomial prod{rho1.value.sign * rho2.value.sign,
                              a_exp + 1 - rho1.value.e - rho2.value.e};
                if (!(prod.e > 0))
                    throw DomainError(
                        "M -> infinity needs e(rho1)+e(rho2) < a+1");
                t *= poch_inf(prod, order);
            }
            for (const RhoSpec& rho : {rho1, rho2}) {
                if (rho.infinite) continue;
                Monomial arg = rho.value.under_qpow(a_exp + 1);
                t *= poch_inf(arg, order).inverse(order);
            }
            return t.truncated(order);
        }
        if (L > *M) return QSeries::zero(order, 1);
        QSeries t = common(L, order);
        for (const RhoSpec& rho : {rho1, rho2}) {
            if (rho.infinite) continue;  // (aq/rho)_M -> 1
            Monomial arg = rho.value.under_qpow(a_exp + 1);
            t *= poch(arg, *M, order).inverse(order);
        }
        if (!rho1.infinite && !rho2.infinite) {
            Monomial prod{rho1.value.sign * rho2.value.sign,
                          a_exp + 1 - rho1.value.e - rho2.value.e};
            t *= poch(prod, *M - L, order);  // else (0)_{M-L} = 1
        }
        t *= inv_poch_q(*M - L, order);
        return t.truncated(order);
    });
    return cbp;
}

ConjugateBaileyPair cbp_gdinf(const Rat& a_exp) {
    ConjugateBaileyPair cbp;
    cbp.a_exponent = a_exp;
    cbp.gamma = SeriesSequence([a_exp](long long L, const Rat& order) {
        return poch_inf(Monomial::q(a_exp + 1), order)
            .inverse(order)
            .shifted(a_exp * L + Rat(L) * Rat(L))
            .truncated(order);
    });
    cbp.delta = SeriesSequence([a_exp](long long L, const Rat& order) {
        return QSeries::monomial(1, a_exp * L + Rat(L) * Rat(L), order);
    });
    return cbp;
}

ConjugateBaileyPair cbp_bressoud_singh(const Monomial& r, const Rat& a_exp,
                                       const SumConfig& cfg) {
    ConjugateBaileyPair cbp;
    cbp.a_exponent = a_exp;
    cbp.gamma = SeriesSequence([r, a_exp, cfg](long long L, const Rat& order) {
        QSeries sum = sum_converging(
            over_nonneg([&](long long k) {
                // (-1)^k q^{binom(k,2)} (r)_k (aq^{2L+1})^k/(q)_k
                QSeries t = poch(r, k, order) * inv_poch_q(k, order);
                t = t.shifted(Rat(k * (k - 1), 2) + (a_exp + 2 * L + 1) * k)
                        .truncated(order);
                return (k % 2 == 0) ? t : t.negated();
            }),
            order, cfg);
        QSeries pref = poch_inf(r, order).inverse(order) *
                       poch_inf(Monomial::q(a_exp + 1), order).inverse(order);
        return (r.pow_monomial(L, order) * pref * sum).truncated(order);
    });
    cbp.delta = SeriesSequence([r](long long L, const Rat& order) {
        return r.pow_monomial(L, order);
    });
    return cbp;
}

ConjugateBaileyPair cbp_theorem41(long long eta, long long j,
                                  const SumConfig& cfg) {
    if (eta < 0) throw DomainError("Theorem 4.1 needs eta >= 0");
    ConjugateBaileyPair cbp;
    cbp.a_exponent = Rat(eta);
    cbp.gamma = SeriesSequence([eta, j, cfg](long long L, const Rat& order) {
        // sum_{i>=1} (-1)^i q^{i(i+2L+eta)/2} {q^{i(2j+eta+1)/2} - q^{-...}}
        QSeries::Terms acc;
        const long long w = 2 * j + eta + 1;
        for (int brace : {+1, -1}) {
            std::optional<Rat> prevE;
            for (long long i = 1;; ++i) {
                if (i > cfg.shell_budget)
                    throw BudgetExceeded("Theorem 4.1 inner sum exceeded budget");
                Rat e(i * (i + 2 * L + eta) + brace * i * w, 2);
                if (e < order) {
                    int c = (i % 2 == 0) ? 1 : -1;
                    acc[e.numerator()] += (brace > 0) ? c : -c;
                }
                if (prevE && !(e < *prevE) && !(e < order)) break;
                prevE = e;
            }
        }
        QSeries inner = QSeries::from_terms(std::move(acc), 1, order);
        QSeries invq = poch_inf(Monomial::q(1), order).inverse(order);
        return (inner * invq * invq *
                poch_inf(Monomial::q(Rat(eta + 1)), order).inverse(order))
            .truncated(order);
    });
    cbp.delta = SeriesSequence([eta, j](long long L, const Rat& order) {
        return qbinomial(2 * L + eta, L - j, order) -
               qbinomial(2 * L + eta, L - j - 1, order);
    });
    return cbp;
}

ConjugateBaileyPair cbp_corollary42(long long p, long long pp, long long eta,
                                    long long l, const SumConfig& cfg) {
    if (eta < 0 || ((l + eta) % 2 + 2) % 2 != 0)
        throw ParityError("Corollary 4.2 needs eta in Z_+ with l+eta even");
    ConjugateBaileyPair cbp;
    cbp.a_exponent = Rat(eta);
    cbp.gamma = SeriesSequence([=](long long L, const Rat& order) {
        return (poch_q(eta, order) * string_fn({p, pp, 2 * L + eta, l}, order, cfg))
            .truncated(order);
    });
    cbp.delta = SeriesSequence([=](long long L, const Rat& order) {
        return config_sum({p, pp}, {0, l + 1, 1, 2 * L + eta}, order);
    });
    return cbp;
}

ConjugateBaileyPair cbp_higher_level(long long N, int sigma, long long eta,
                                     long long l, const SumConfig& cfg) {
    if (N < 1 || eta < 0 || !(0 <= l && l <= N))
        throw DomainError("higher-level pair needs N >= 1, eta >= 0, l in Z_{N+1}");
    if (((l + eta + sigma * N) % 2 + 2) % 2 != 0)
        throw ParityError("need l + eta + sigma*N even");
    const long long d = N - 1;

    // enumerate the sector {n in Z_+^{N-1} :
    //   (2L+eta+l)/2N + (C^{-1}n)_1 in Z + sigma/2} inside a hard box
    auto for_each_n =
        [=](long long L, const Rat& cap,
            const std::function<void(const std::vector<long long>&, const Rat&)>&
                visit) {
            if (d == 0) {
                Rat c1 = Rat(2 * L + eta + l, 2 * N) - Rat(sigma, 2);
                if (c1.denominator() == 1) visit({}, Rat(0));
                return;
            }
            double w = static_cast<double>(cap.numerator()) / cap.denominator();
            long long M = 2 * d * N + 2 +
                          2 * static_cast<long long>(
                                  std::sqrt(std::max(0.0, w + d * N * N)) + 1);
            if (M > cfg.shell_budget)
                throw BudgetExceeded("higher-level lattice budget");
            std::vector<long long> n(static_cast<std::size_t>(d), 0);
            std::function<void(long long)> rec = [&](long long idx) {
                if (idx == d) {
                    Rat c1 = Rat(2 * L + eta + l, 2 * N) - Rat(sigma, 2);
                    for (long long jj = 1; jj <= d; ++jj)
                        c1 += an1_cartan_inverse_entry(N, 1, jj) *
                              Rat(n[static_cast<std::size_t>(jj - 1)]);
                    if (c1.denominator() != 1) return;
                    Rat e(0);
                    for (long long i = 1; i <= d; ++i)
                        for (long long jj = 1; jj <= d; ++jj)
                            e += an1_cartan_inverse_entry(N, i, jj) *
                                 Rat(n[static_cast<std::size_t>(i - 1)]) *
                                 Rat(n[static_cast<std::size_t>(jj - 1)] -
                                     (jj == l ? 1 : 0));
                    visit(n, e);
                    return;
                }
                for (long long v = 0; v <= M; ++v) {
                    n[static_cast<std::size_t>(idx)] = v;
                    rec(idx + 1);
                }
            };
            rec(0);
        };

    ConjugateBaileyPair cbp;
    cbp.a_exponent = Rat(eta);
    cbp.gamma = SeriesSequence([=](long long L, const Rat& order) {
        Rat lead(L * (L + eta), N);
        Rat work = order - std::min(lead, Rat(0)) + 1;
        QSeries acc = QSeries::zero(work, 1);
        for_each_n(L, work, [&](const std::vector<long long>& n, const Rat& e) {
            if (!(e < work)) return;
            QSeries term = QSeries::one(work - e);
            for (long long jj = 1; jj <= d; ++jj)
                term *= inv_poch_q(n[static_cast<std::size_t>(jj - 1)], work - e);
            acc += term.shifted(e);
        });
        QSeries invaq = poch_inf(Monomial::q(Rat(eta + 1)), work).inverse(work);
        return (acc * invaq).shifted(lead).truncated(order);
    });
    cbp.delta = SeriesSequence([=](long long L, const Rat& order) {
        Rat lead(L * (L + eta), N);
        Rat work = order - std::min(lead, Rat(0)) + 1;
        QSeries acc = QSeries::zero(work, 1);
        for_each_n(L, work, [&](const std::vector<long long>& n, const Rat& e) {
            if (!(e < work)) return;
            // (m,n)-system: C m = (2L+eta) e_1 + e_l - 2n
            std::vector<long long> mm(static_cast<std::size_t>(std::max<long long>(d, 1)), 0);
            for (long long i = 1; i <= d; ++i) {
                Rat mi(0);
                for (long long jj = 1; jj <= d; ++jj) {
                    long long rhs = (jj == 1 ? 2 * L + eta : 0) +
                                    (jj == l ? 1 : 0) -
                                    2 * n[static_cast<std::size_t>(jj - 1)];
                    mi += an1_cartan_inverse_entry(N, i, jj) * Rat(rhs);
                }
                if (mi.denominator() != 1 || mi < 0) return;
                mm[static_cast<std::size_t>(i - 1)] = mi.numerator();
            }
            QSeries term = QSeries::one(work - e);
            for (long long i = 1; i <= d; ++i) {
                long long ni = n[static_cast<std::size_t>(i - 1)];
                long long mi = mm[static_cast<std::size_t>(i - 1)];
                term *= qbinomial(mi + ni, ni, work - e);
            }
            acc += term.shifted(e);
        });
        return acc.shifted(lead).truncated(order);
    });
    return cbp;
}

// --- transform and pairing --------------------------------------------------

BaileyPair bailey_transform(const BaileyPair& bp, const RhoSpec& rho1,
                            const RhoSpec& rho2) {
    // keep an infinite rho, if any, in slot 1
    if (!rho1.infinite && rho2.infinite) return bailey_transform(bp, rho2, rho1);
    const Rat a = bp.a_exponent;
    // every specialization in use keeps aq/rho1rho2 at a nonnegative power and
    // the denominators unit-led; anything else would leave the truncated ring
    Rat esum(0);
    for (const RhoSpec& rho : {rho1, rho2}) {
        if (rho.infinite) continue;
        if (!(rho.value.e < a + 1))
            throw DomainError("rho exponent must be below a+1");
        esum += rho.value.e;
    }
    if (esum > a + 1)
        throw DomainError("rho exponents must satisfy e1+e2 <= a+1");

    // (rho1)_r (rho2)_r (aq/rho1rho2)^r with infinite limits folded in
    auto numer = [rho1, rho2, a](long long r, const Rat& order) {
        if (rho1.infinite && rho2.infinite)
            return QSeries::monomial(1, a * r + Rat(r) * Rat(r), order);
        if (rho1.infinite) {
            Monomial aq_rho2 = rho2.value.under_qpow(a + 1);
            QSeries t = poch(rho2.value, r, order);
            t = t.shifted(Rat(r * (r - 1), 2) + aq_rho2.e * r).truncated(order);
            int s = (r % 2 == 1) ? -aq_rho2.sign : 1;
            return s < 0 ? t.negated() : t;
        }
        Monomial prod{rho1.value.sign * rho2.value.sign,
                      a + 1 - rho1.value.e - rho2.value.e};
        QSeries t = poch(rho1.value, r, order) * poch(rho2.value, r, order);
        t = t.shifted(prod.e * r).truncated(order);
        return (prod.sign < 0 && r % 2 == 1) ? t.negated() : t;
    };
    auto denom = [rho1, rho2, a](long long L, const Rat& order) {
        QSeries t = QSeries::one(order);
        for (const RhoSpec& rho : {rho1, rho2}) {
            if (rho.infinite) continue;  // (aq/rho)_L -> 1
            Monomial arg = rho.value.under_qpow(a + 1);
            t *= poch(arg, L, order).inverse(order);
        }
        return t;
    };

    BaileyPair out;
    out.a_exponent = a;
    SeriesSequence alpha = bp.alpha, beta = bp.beta;
    out.alpha = SeriesSequence([=](long long L, const Rat& order) {
        return (numer(L, order) * denom(L, order) * alpha.at(L, order))
            .truncated(order);
    });
    out.beta = SeriesSequence([=](long long L, const Rat& order) {
        QSeries acc = QSeries::zero(order, 1);
        for (long long r = 0; r <= L; ++r) {
            QSeries t = numer(r, order) * inv_poch_q(L - r, order);
            if (!rho1.infinite && !rho2.infinite) {
                Monomial prod{rho1.value.sign * rho2.value.sign,
                              a + 1 - rho1.value.e - rho2.value.e};
                t *= poch(prod, L - r, order);  // else (0)_{L-r} = 1
            }
            acc += t * beta.at(r, order);
        }
        return (acc * denom(L, order)).truncated(order);
    });
    return out;
}

QSeries bailey_sum_lhs(const BaileyPair& bp, const ConjugateBaileyPair& cbp,
                       const Rat& order, const SumConfig& cfg) {
    if (bp.a_exponent != cbp.a_exponent)
        throw DomainError("pairs are relative to different a");
    return sum_converging(over_nonneg([&](long long L) {
                              return bp.alpha.at(L, order) * cbp.gamma.at(L, order);
                          }),
                          order, cfg);
}

QSeries bailey_sum_rhs(const BaileyPair& bp, const ConjugateBaileyPair& cbp,
                       const Rat& order, const SumConfig& cfg) {
    if (bp.a_exponent != cbp.a_exponent)
        throw DomainError("pairs are relative to different a");
    return sum_converging(over_nonneg([&](long long L) {
                              return bp.beta.at(L, order) * cbp.delta.at(L, order);
                          }),
                          order, cfg);
}

IdentityReport bailey_sum_check(const BaileyPair& bp,
                                const ConjugateBaileyPair& cbp,
                                const Rat& order, const SumConfig& cfg) {
    QSeries lhs = bailey_sum_lhs(bp, cbp, order, cfg);
    QSeries rhs = bailey_sum_rhs(bp, cbp, order, cfg);
    return make_report("bailey-sum", {}, equal_to_order(lhs, rhs, order));
}

IdentityReport duality_swap_check(const SeriesSequence& beta,
                                  const SeriesSequence& delta, long long eta,
                                  long long Lmax, const Rat& order) {
    for (long long L = 0; L <= Lmax; ++L) {
        QSeries pocheta = poch_q(2 * L + eta, order);
        QSeries summand = beta.at(L, order) * delta.at(L, order);
        QSeries swapped = (delta.at(L, order) * pocheta.inverse(order)) *
                          (beta.at(L, order) * pocheta);
        auto cmp = equal_to_order(summand, swapped, order);
        if (!cmp.pass)
            return make_report("duality-swap", {{"L", std::to_string(L)}}, cmp);
    }
    return pass_report("duality-swap",
                       {{"Lmax", std::to_string(Lmax)},
                        {"eta", std::to_string(eta)}},
                       order);
}

}  // namespace qseries
