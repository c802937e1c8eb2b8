#pragma once

#include "qseries/qtools.hpp"
#include "qseries/report.hpp"

#include <memory>
#include <mutex>

namespace qseries {

/// Lazily evaluated sequence L -> series, memoized per (L, order).
class SeriesSequence {
public:
    using Eval = std::function<QSeries(long long, const Rat&)>;
    SeriesSequence() = default;
    explicit SeriesSequence(Eval eval)
        : state_(std::make_shared<State>(std::move(eval))) {}

    QSeries at(long long L, const Rat& order) const;

private:
    struct State {
        explicit State(Eval e) : eval(std::move(e)) {}
        Eval eval;
        std::mutex mu;
        std::map<std::pair<long long, Rat>, QSeries> memo;
    };
    std::shared_ptr<State> state_;
};

struct BaileyPair {
    Rat a_exponent{0};  // relative parameter a = q^eta
    SeriesSequence alpha, beta;
};

struct ConjugateBaileyPair {
    Rat a_exponent{0};
    SeriesSequence gamma, delta;
};

/// beta_L = sum_{r=0}^{L} alpha_r / ((q)_{L-r} (aq)_{L+r}) for L <= Lmax
IdentityReport verify_bailey_pair(const BaileyPair& bp, long long Lmax,
                                  const Rat& order, const SumConfig& cfg = {});
/// gamma_L = sum_{r>=L} delta_r / ((q)_{r-L} (aq)_{r+L}) for L <= Lmax
IdentityReport verify_conjugate_pair(const ConjugateBaileyPair& cbp,
                                     long long Lmax, const Rat& order,
                                     const SumConfig& cfg = {});

// --- named Bailey pairs ---------------------------------------------------
BaileyPair bp_initial();        // alpha_L = (-1)^L q^{binom(L,2)} (1+q^L), beta = delta_{L,0}
BaileyPair bp_unit(long long eta);  // its generalization relative to q^eta
BaileyPair bp_rogers_first();   // alpha_L = (-1)^L q^{L(3L-1)/2}(1+q^L), beta = 1/(q)_L
BaileyPair bp_rogers_second();  // relative to q

// --- conjugate Bailey pairs -------------------------------------------------
struct RhoSpec {
    bool infinite = true;
    Monomial value{};
    static RhoSpec inf() { return RhoSpec{}; }
    static RhoSpec at(const Monomial& m) { return RhoSpec{false, m}; }
};

/// the q-Saalschutz pair with free parameters rho1, rho2 and cutoff M
/// (M = nullopt is the M -> infinity limit)
ConjugateBaileyPair cbp_gd(const RhoSpec& rho1, const RhoSpec& rho2,
                           std::optional<long long> M, const Rat& a_exp,
                           const SumConfig& cfg = {});
/// gamma_L = a^L q^{L^2}/(aq)_inf, delta_L = a^L q^{L^2}
ConjugateBaileyPair cbp_gdinf(const Rat& a_exp);
/// the Bressoud-Singh pair at monomial r
ConjugateBaileyPair cbp_bressoud_singh(const Monomial& r, const Rat& a_exp,
                                       const SumConfig& cfg = {});
/// the q-binomial-difference pair relative to q^eta
ConjugateBaileyPair cbp_theorem41(long long eta, long long j,
                                  const SumConfig& cfg = {});
/// gamma_L = (q)_eta C_{2L+eta,l}, delta_L = X_{0,l+1}(2L+eta,1)
ConjugateBaileyPair cbp_corollary42(long long p, long long pp, long long eta,
                                    long long l, const SumConfig& cfg = {});
/// the higher-level pair built on the A_{N-1} lattice with sector sigma
ConjugateBaileyPair cbp_higher_level(long long N, int sigma, long long eta,
                                     long long l, const SumConfig& cfg = {});

/// the Bailey transform: (alpha', beta') from (alpha, beta) with parameters
/// rho1, rho2 (monomials or the infinite limit)
BaileyPair bailey_transform(const BaileyPair& bp, const RhoSpec& rho1,
                            const RhoSpec& rho2);

QSeries bailey_sum_lhs(const BaileyPair& bp, const ConjugateBaileyPair& cbp,
                       const Rat& order, const SumConfig& cfg = {});
QSeries bailey_sum_rhs(const BaileyPair& bp, const ConjugateBaileyPair& cbp,
                       const Rat& order, const SumConfig& cfg = {});
/// sum_L alpha_L gamma_L = sum_L beta_L delta_L
IdentityReport bailey_sum_check(const BaileyPair& bp,
                                const ConjugateBaileyPair& cbp,
                                const Rat& order, const SumConfig& cfg = {});

/// beta/delta exchange of the duality discussion: delta'_L = beta_L (q)_{2L+eta},
/// beta'_L = delta_L/(q)_{2L+eta} leaves every summand beta_L delta_L intact
IdentityReport duality_swap_check(const SeriesSequence& beta,
                                  const SeriesSequence& delta, long long eta,
                                  long long Lmax, const Rat& order);

}  // namespace qseries
