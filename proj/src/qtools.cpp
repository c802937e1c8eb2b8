#include "qseries/qtools.hpp"

#include <map>
#include <mutex>
#include <tuple>

namespace qseries {

namespace {

// 1 - s*q^E as an exact series
QSeries one_minus(int sign, const Rat& E) {
    QSeries t = QSeries::one();
    return t - QSeries::monomial(sign, E);
}

}  // namespace

QSeries poch(const Monomial& a, long long n, const Rat& order, long long base) {
    if (base < 1) throw DomainError("Pochhammer base must be >= 1");
    if (n < 0) {
        // (a)_{-m} = 1 / prod_{k=1}^{m} (1 - s q^{e-bk})
        long long m = -n;
        QSeries den = poch(Monomial{a.sign, a.e - Rat(base * m)}, m, order, base);
        if (den.known_zero())
            throw NonUnitError("(a)_n with n<0 has a vanishing factor (zero denominator)");
        return den.inverse(order);
    }
    QSeries acc = QSeries::one(order);
    for (long long k = 0; k < n; ++k) {
        Rat E = a.e + Rat(base * k);
        if (E > 0 && !acc.known_zero() && !(E + acc.valuation_bound() < order))
            break;  // exponents only grow from here
        acc *= one_minus(a.sign, E);
        if (acc.known_zero() && acc.exact()) return acc;  // hit a zero factor
    }
    return acc;
}

QSeries poch_inf(const Monomial& a, const Rat& order, long long base) {
    if (base < 1) throw DomainError("Pochhammer base must be >= 1");
    QSeries acc = QSeries::one(order);
    for (long long k = 0;; ++k) {
        Rat E = a.e + Rat(base * k);
        if (E > 0 && !acc.known_zero() && !(E + acc.valuation_bound() < order))
            break;
        if (acc.known_zero() && !acc.exact()) break;
        acc *= one_minus(a.sign, E);
        if (acc.known_zero() && acc.exact()) return acc;  // identically zero
    }
    return acc;
}

QSeries poch_inf_list(const std::vector<Monomial>& as, const Rat& order,
                      long long base) {
    QSeries acc = QSeries::one(order);
    for (const auto& a : as) acc *= poch_inf(a, order, base);
    return acc;
}

QSeries poch_q(long long n, const Rat& order) {
    return poch(Monomial::q(1), n, order);
}

QSeries inv_poch_q(long long n, const Rat& order) {
    return poch_q(n, order).inverse(order);
}

namespace {

std::mutex qbin_mutex;
std::map<std::tuple<long long, long long, Rat>, QSeries> qbin_cache;
std::map<std::pair<long long, long long>, QSeries> qbin_exact_cache;

}  // namespace

QSeries qbinomial(long long n, long long m, const Rat& order) {
    if (m < 0 || n < 0 || m > n) return QSeries::zero(std::nullopt);
    long long mm = std::min(m, n - m);
    if (mm == 0) return QSeries::one();
    {
        std::lock_guard<std::mutex> lk(qbin_mutex);
        auto it = qbin_cache.find({n, mm, order});
        if (it != qbin_cache.end()) return it->second;
    }
    QSeries num = poch(Monomial::q(Rat(n - mm + 1)), mm, order);
    QSeries res = num * inv_poch_q(mm, order);
    {
        std::lock_guard<std::mutex> lk(qbin_mutex);
        if (qbin_cache.size() > 60000) qbin_cache.clear();
        qbin_cache.emplace(std::make_tuple(n, mm, order), res);
    }
    return res;
}

QSeries qbinomial_exact(long long n, long long m) {
    if (m < 0 || n < 0 || m > n) return QSeries::zero(std::nullopt);
    long long mm = std::min(m, n - m);
    if (mm == 0) return QSeries::one();
    {
        std::lock_guard<std::mutex> lk(qbin_mutex);
        auto it = qbin_exact_cache.find({n, mm});
        if (it != qbin_exact_cache.end()) return it->second;
    }
    // degree m(n-m); the truncated computation at degree+1 captures it all
    Rat beyond = Rat(mm * (n - mm) + 1);
    QSeries res = qbinomial(n, mm, beyond).declared_exact();
    {
        std::lock_guard<std::mutex> lk(qbin_mutex);
        if (qbin_exact_cache.size() > 20000) qbin_exact_cache.clear();
        qbin_exact_cache.emplace(std::make_pair(n, mm), res);
    }
    return res;
}

QSeries triple_product_lhs(const Monomial& x, const Rat& order, long long base,
                           const SumConfig& cfg) {
    auto term = [&x, base, &order](long long r) {
        Int c = (r % 2 == 0) ? 1 : -1;
        if (x.sign < 0 && ((r % 2) + 2) % 2 == 1) c = -c;
        Rat e = x.e * r + Rat(base) * Rat(r * (r - 1), 2);
        return QSeries::monomial(c, e, order);
    };
    return sum_converging(over_integers(term), order, cfg);
}

QSeries triple_product_rhs(const Monomial& x, const Rat& order, long long base) {
    Monomial qb_over_x = x.under_qpow(Rat(base));
    return poch_inf(x, order, base) * poch_inf(qb_over_x, order, base) *
           poch_inf(Monomial::q(Rat(base)), order, base);
}

}  // namespace qseries
