#include "qseries/configsum.hpp"

#include <numeric>

namespace qseries {

bool ModelParams::coprime() const { return std::gcd(p, pp) == 1; }

namespace {

void validate(const ModelParams& mp, const XIndex& ix) {
    if (!(1 <= mp.p && mp.p < mp.pp))
        throw DomainError("need 1 <= p < p'");
    if (!(1 <= ix.s && ix.s <= mp.pp - 1))
        throw DomainError("s out of range N_{p'-1}");
    if (!(1 <= ix.b && ix.b <= mp.pp - 1))
        throw DomainError("b out of range N_{p'-1}");
    if (!(0 <= ix.r && ix.r <= mp.p))
        throw DomainError("r out of range Z_{p+1}");
    if (ix.L < 0) throw DomainError("L must be nonnegative");
    if ((ix.L + ix.s + ix.b) % 2 != 0)
        throw ParityError("L+s+b must be even");
}

// j-range such that the binomial argument a - p'j lies in [0, L]
std::pair<long long, long long> jrange(long long a, long long pp, long long L) {
    // a - pp*j >= 0  =>  j <= floor(a/pp);  a - pp*j <= L  =>  j >= ceil((a-L)/pp)
    long long hi = floor_rat(Rat(a, pp));
    long long lo = -floor_rat(Rat(L - a, pp));
    return {lo, hi};
}

}  // namespace

QSeries config_sum(const ModelParams& mp, const XIndex& ix,
                   std::optional<Rat> order) {
    validate(mp, ix);
    const long long p = mp.p, pp = mp.pp;
    const long long r = ix.r, s = ix.s, b = ix.b, L = ix.L;

    auto qbin = [&](long long n, long long m) {
        return order ? qbinomial(n, m, *order) : qbinomial_exact(n, m);
    };

    QSeries acc = QSeries::zero(order, 1);
    {
        long long a = (L + s - b) / 2;
        auto [lo, hi] = jrange(a, pp, L);
        for (long long j = lo; j <= hi; ++j) {
            long long e = j * (p * pp * j + pp * r - p * s);
            QSeries t = qbin(L, a - pp * j);
            if (order && Rat(e) >= *order) continue;
            acc += t.shifted(Rat(e));
        }
    }
    {
        long long a = (L - s - b) / 2;
        auto [lo, hi] = jrange(a, pp, L);
        for (long long j = lo; j <= hi; ++j) {
            long long e = (p * j + r) * (pp * j + s);
            QSeries t = qbin(L, a - pp * j);
            if (order && Rat(e) >= *order) continue;
            acc -= t.shifted(Rat(e));
        }
    }
    return order ? acc.truncated(*order) : acc;
}

IdentityReport flip_symmetry_check(const ModelParams& mp, const XIndex& ix) {
    QSeries lhs = config_sum(mp, ix);
    QSeries rhs = config_sum(
        mp, XIndex{mp.p - ix.r, mp.pp - ix.s, mp.pp - ix.b, ix.L});
    auto rep = make_report("configsum-flip",
                           {{"p", std::to_string(mp.p)},
                            {"pp", std::to_string(mp.pp)},
                            {"r", std::to_string(ix.r)},
                            {"s", std::to_string(ix.s)},
                            {"b", std::to_string(ix.b)},
                            {"L", std::to_string(ix.L)}},
                           compare_exact(lhs, rhs));
    return rep;
}

IdentityReport dual_symmetry_check(const ModelParams& mp, const XIndex& ix) {
    QSeries lhs = config_sum(mp, ix);
    QSeries dual = config_sum(ModelParams{mp.pp - mp.p, mp.pp},
                              XIndex{ix.b - ix.r, ix.s, ix.b, ix.L});
    Rat pref(ix.L * ix.L - (ix.b - ix.s) * (ix.b - ix.s), 4);
    QSeries rhs = dual.substituted_inverse_q().shifted(pref);
    return make_report("configsum-dual",
                       {{"p", std::to_string(mp.p)},
                        {"pp", std::to_string(mp.pp)},
                        {"r", std::to_string(ix.r)},
                        {"s", std::to_string(ix.s)},
                        {"b", std::to_string(ix.b)},
                        {"L", std::to_string(ix.L)}},
                       compare_exact(lhs, rhs));
}

IdentityReport rzero_check(const ModelParams& mp, long long s, long long L) {
    QSeries lhs = config_sum(mp, XIndex{0, s, 1, L});
    QSeries rhs =
        config_sum(mp, XIndex{1, s, 1, L}).shifted(Rat(L - s + 1, 2));
    return make_report("configsum-rzero",
                       {{"p", std::to_string(mp.p)},
                        {"pp", std::to_string(mp.pp)},
                        {"s", std::to_string(s)},
                        {"L", std::to_string(L)}},
                       compare_exact(lhs, rhs));
}

}  // namespace qseries
