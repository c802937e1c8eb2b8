#include "qseries/qseries.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace qseries {

std::string to_string(const Rat& r) {
    if (r.denominator() == 1) return std::to_string(r.numerator());
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

Rat parse_rat(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rat(std::stoll(s));
        long long num = std::stoll(s.substr(0, slash));
        long long den = std::stoll(s.substr(slash + 1));
        if (den == 0) throw DomainError("rational with zero denominator: " + s);
        return Rat(num, den);
    } catch (const std::invalid_argument&) {
        throw DomainError("cannot parse rational: " + s);
    }
}

long long floor_rat(const Rat& r) {
    long long q = r.numerator() / r.denominator();
    if (r.numerator() % r.denominator() != 0 && r.numerator() < 0) --q;
    return q;
}

// --- QSeries -----------------------------------------------------------

long long QSeries::key_on(const Rat& e, long long denom) {
    if (denom % e.denominator() != 0)
        throw GridError("exponent " + to_string(e) +
                        " not representable on grid 1/" + std::to_string(denom));
    return e.numerator() * (denom / e.denominator());
}

void QSeries::normalize() {
    for (auto it = terms_.begin(); it != terms_.end();) {
        bool drop = (it->second == 0);
        if (!drop && order_) drop = !(Rat(it->first, denom_) < *order_);
        it = drop ? terms_.erase(it) : std::next(it);
    }
}

QSeries QSeries::zero(std::optional<Rat> order, long long denom) {
    QSeries s;
    s.denom_ = denom;
    s.order_ = order;
    return s;
}

QSeries QSeries::monomial(Int c, const Rat& e, std::optional<Rat> order,
                          long long denom) {
    QSeries s;
    s.denom_ = denom == 0 ? e.denominator() : denom;
    s.order_ = order;
    long long k = key_on(e, s.denom_);
    if (c != 0 && (!order || e < *order)) s.terms_[k] = std::move(c);
    return s;
}

QSeries QSeries::one(std::optional<Rat> order) {
    return monomial(1, Rat(0), order, 1);
}

QSeries QSeries::from_terms(Terms terms, long long denom,
                            std::optional<Rat> order) {
    QSeries s;
    s.denom_ = denom;
    s.terms_ = std::move(terms);
    s.order_ = order;
    s.normalize();
    return s;
}

std::optional<Rat> QSeries::valuation() const {
    if (terms_.empty()) return std::nullopt;
    return Rat(terms_.begin()->first, denom_);
}

Rat QSeries::valuation_bound() const {
    if (!terms_.empty()) return Rat(terms_.begin()->first, denom_);
    if (order_) return *order_;
    throw DomainError("valuation_bound of the exact zero series");
}

Rat QSeries::degree() const {
    if (terms_.empty()) throw DomainError("degree of a series with no terms");
    return Rat(terms_.rbegin()->first, denom_);
}

Int QSeries::coeff(const Rat& e) const {
    if (denom_ % e.denominator() != 0) return 0;
    auto it = terms_.find(e.numerator() * (denom_ / e.denominator()));
    return it == terms_.end() ? Int(0) : it->second;
}

Int QSeries::leading_coeff() const {
    if (terms_.empty()) throw DomainError("leading coefficient of a zero series");
    return terms_.begin()->second;
}

QSeries QSeries::rescaled(long long newdenom) const {
    if (newdenom == denom_) return *this;
    if (newdenom % denom_ != 0)
        throw GridError("cannot rescale grid 1/" + std::to_string(denom_) +
                        " to 1/" + std::to_string(newdenom));
    long long f = newdenom / denom_;
    QSeries s;
    s.denom_ = newdenom;
    s.order_ = order_;
    for (const auto& [k, c] : terms_) s.terms_.emplace(k * f, c);
    return s;
}

QSeries QSeries::truncated(const Rat& order) const {
    QSeries s = *this;
    s.order_ = order_ ? std::min(*order_, order) : order;
    s.normalize();
    return s;
}

QSeries QSeries::shifted(const Rat& e) const {
    long long d = std::lcm(denom_, e.denominator());
    QSeries s = rescaled(d);
    long long k = key_on(e, d);
    Terms shifted;
    for (auto& [key, c] : s.terms_) shifted.emplace(key + k, std::move(c));
    s.terms_ = std::move(shifted);
    if (s.order_) s.order_ = *s.order_ + e;
    return s;
}

QSeries QSeries::scaled(const Int& c) const {
    QSeries s = *this;
    if (c == 0) {
        s.terms_.clear();
        return s;
    }
    for (auto& [k, v] : s.terms_) v *= c;
    return s;
}

QSeries QSeries::exact_div(const Int& c) const {
    if (c == 0) throw DomainError("division by zero");
    QSeries s = *this;
    for (auto& [k, v] : s.terms_) {
        if (v % c != 0)
            throw DomainError("coefficient " + v.str() + " not divisible by " +
                              c.str());
        v /= c;
    }
    return s;
}

QSeries QSeries::negated() const {
    QSeries s = *this;
    for (auto& [k, v] : s.terms_) v = -v;
    return s;
}

QSeries QSeries::declared_exact() const {
    QSeries s = *this;
    s.order_.reset();
    return s;
}

QSeries QSeries::substituted_inverse_q() const {
    if (!exact())
        throw OrderError("q -> 1/q is defined only for exact polynomials");
    QSeries s;
    s.denom_ = denom_;
    for (const auto& [k, c] : terms_) s.terms_.emplace(-k, c);
    return s;
}

QSeries operator+(const QSeries& x, const QSeries& y) {
    long long d = std::lcm(x.denom_, y.denom_);
    QSeries a = x.rescaled(d), b = y.rescaled(d);
    QSeries s;
    s.denom_ = d;
    if (a.order_ && b.order_)
        s.order_ = std::min(*a.order_, *b.order_);
    else if (a.order_)
        s.order_ = a.order_;
    else
        s.order_ = b.order_;
    s.terms_ = std::move(a.terms_);
    for (const auto& [k, c] : b.terms_) s.terms_[k] += c;
    s.normalize();
    return s;
}

QSeries operator-(const QSeries& x, const QSeries& y) { return x + y.negated(); }

QSeries operator*(const QSeries& x, const QSeries& y) {
    long long d = std::lcm(x.denom_, y.denom_);
    QSeries a = x.rescaled(d), b = y.rescaled(d);
    QSeries s;
    s.denom_ = d;

    // order = min(Ox + val y, Oy + val x); an exact operand contributes no
    // bound, an exact zero operand makes the product exactly zero
    std::optional<Rat> bound;
    auto add_bound = [&](const std::optional<Rat>& o, const QSeries& other) {
        if (!o) return;
        if (other.terms_.empty() && other.exact()) return;  // 0 * unknown = 0
        Rat cand = *o + other.valuation_bound();
        bound = bound ? std::min(*bound, cand) : cand;
    };
    if ((a.terms_.empty() && a.exact()) || (b.terms_.empty() && b.exact()))
        return QSeries::zero(std::nullopt, d);
    add_bound(a.order_, b);
    add_bound(b.order_, a);
    s.order_ = bound;

    long long cut = 0;
    bool has_cut = false;
    if (s.order_) {
        // keep keys k with k/d < order, i.e. k < order*d
        Rat lim = *s.order_ * Rat(d);
        cut = floor_rat(lim) + (lim.denominator() == 1 ? 0 : 1);
        has_cut = true;
    }
    for (const auto& [k1, c1] : a.terms_) {
        for (const auto& [k2, c2] : b.terms_) {
            long long k = k1 + k2;
            if (has_cut && k >= cut) break;  // b sorted ascending
            s.terms_[k] += c1 * c2;
        }
    }
    s.normalize();
    return s;
}

QSeries QSeries::inverse(std::optional<Rat> req_order) const {
    if (terms_.empty())
        throw NonUnitError("cannot invert a series with no known terms");
    long long vk = terms_.begin()->first;
    const Int& lead = terms_.begin()->second;
    if (lead != 1 && lead != -1)
        throw NonUnitError("leading coefficient " + lead.str() +
                           " is not a unit in Z");
    Rat v(vk, denom_);

    if (terms_.size() == 1) {  // monomial: exact inverse
        QSeries s = QSeries::monomial(lead, -v, std::nullopt, denom_);
        if (req_order) s.order_ = req_order, s.normalize();
        return s;
    }

    std::optional<Rat> propagated;
    if (order_) propagated = *order_ - Rat(2) * v;
    Rat target;
    if (req_order && propagated)
        target = std::min(*req_order, *propagated);
    else if (req_order)
        target = *req_order;
    else if (propagated)
        target = *propagated;
    else
        throw OrderError("inverting an exact non-monomial requires a target order");

    // write x = q^v * (lead + sum_{i>0} a_i q^{i/D}); then the inverse is
    // q^{-v} * sum_j b_j q^{j/D} with b_0 = lead and the usual convolution
    // recurrence b_j = -lead * sum_{i=1}^{j} a_i b_{j-i}
    Rat lim = target * Rat(denom_) + Rat(vk);  // j < lim
    long long jcount = floor_rat(lim) + (lim.denominator() == 1 ? 0 : 1);
    if (jcount <= 0) return QSeries::zero(target, denom_);
    std::vector<Int> b(static_cast<std::size_t>(jcount), 0);
    b[0] = lead;
    for (long long j = 1; j < jcount; ++j) {
        Int acc = 0;
        for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it) {
            long long i = it->first - vk;
            if (i > j) break;
            acc += it->second * b[static_cast<std::size_t>(j - i)];
        }
        if (lead == 1)
            b[static_cast<std::size_t>(j)] = -acc;
        else
            b[static_cast<std::size_t>(j)] = acc;
    }
    Terms out;
    for (long long j = 0; j < jcount; ++j)
        if (b[static_cast<std::size_t>(j)] != 0)
            out.emplace(j - vk, std::move(b[static_cast<std::size_t>(j)]));
    return QSeries::from_terms(std::move(out), denom_, target);
}

QSeries QSeries::pow(long long k, std::optional<Rat> req_order) const {
    if (k == 0) {
        std::optional<Rat> o = req_order ? req_order : order_;
        return QSeries::one(o);
    }
    if (k < 0) return inverse(req_order).pow(-k, req_order);
    QSeries base = *this;
    if (req_order && order_ && *req_order < *order_) base = truncated(*req_order);
    QSeries acc = base;
    for (long long i = 1; i < k; ++i) acc *= base;
    return acc;
}

std::string QSeries::str(std::size_t max_terms) const {
    std::ostringstream os;
    std::size_t shown = 0;
    if (terms_.empty()) os << "0";
    for (const auto& [k, c] : terms_) {
        if (max_terms && shown == max_terms) {
            os << " + ...";
            break;
        }
        Rat e(k, denom_);
        if (shown == 0) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        Int a = abs(c);
        if (e == 0)
            os << a.str();
        else {
            if (a != 1) os << a.str() << "*";
            os << "q";
            if (e != 1) os << "^" << (e.denominator() == 1 ? to_string(e) : "(" + to_string(e) + ")");
        }
        ++shown;
    }
    if (order_) os << " + O(q^" << to_string(*order_) << ")";
    return os.str();
}

// --- comparison --------------------------------------------------------

CompareResult equal_to_order(const QSeries& x, const QSeries& y,
                             const Rat& order) {
    if ((x.order() && order > *x.order()) || (y.order() && order > *y.order()))
        throw OrderError("comparison at order " + to_string(order) +
                         " exceeds the reliable order of an operand");
    long long d = std::lcm(x.denom(), y.denom());
    QSeries a = x.rescaled(d), b = y.rescaled(d);
    CompareResult r;
    r.order = order;
    auto ia = a.terms().begin(), ib = b.terms().begin();
    while (ia != a.terms().end() || ib != b.terms().end()) {
        long long k;
        Int ca = 0, cb = 0;
        if (ia != a.terms().end() &&
            (ib == b.terms().end() || ia->first <= ib->first))
            k = ia->first;
        else
            k = ib->first;
        if (ia != a.terms().end() && ia->first == k) ca = ia->second, ++ia;
        if (ib != b.terms().end() && ib->first == k) cb = ib->second, ++ib;
        if (!(Rat(k, d) < order)) break;
        if (ca != cb) {
            r.pass = false;
            r.mismatch_exponent = Rat(k, d);
            r.lhs_coeff = ca;
            r.rhs_coeff = cb;
            return r;
        }
    }
    r.pass = true;
    return r;
}

bool equal_exact(const QSeries& x, const QSeries& y) {
    return compare_exact(x, y).pass;
}

CompareResult compare_exact(const QSeries& x, const QSeries& y) {
    if (!x.exact() || !y.exact())
        throw OrderError("exact comparison requires exact operands");
    Rat beyond = Rat(1);
    if (!x.known_zero()) beyond = std::max(beyond, x.degree() + 1);
    if (!y.known_zero()) beyond = std::max(beyond, y.degree() + 1);
    return equal_to_order(x, y, beyond);
}

// --- convergent sums ---------------------------------------------------

TermGenerator over_integers(std::function<QSeries(long long)> term) {
    TermGenerator g;
    g.shell = [](long long R) {
        std::vector<TermGenerator::Index> pts;
        pts.push_back({R});
        if (R > 0) pts.push_back({-R});
        return pts;
    };
    g.term = [term = std::move(term)](const TermGenerator::Index& ix) {
        return term(ix[0]);
    };
    return g;
}

TermGenerator over_nonneg(std::function<QSeries(long long)> term) {
    TermGenerator g;
    g.shell = [](long long R) {
        return std::vector<TermGenerator::Index>{{R}};
    };
    g.term = [term = std::move(term)](const TermGenerator::Index& ix) {
        return term(ix[0]);
    };
    return g;
}

QSeries sum_converging(const TermGenerator& gen, const Rat& order,
                       const SumConfig& cfg) {
    QSeries acc = QSeries::zero(order, 1);
    int quiet = 0;
    for (long long R = 0;; ++R) {
        if (R > cfg.shell_budget)
            throw BudgetExceeded(
                "sum did not converge within " + std::to_string(cfg.shell_budget) +
                " shells (window " + std::to_string(cfg.window) + ")");
        bool contributed = false;
        for (const auto& ix : gen.shell(R)) {
            QSeries t = gen.term(ix);
            if (t.order() && *t.order() < order)
                throw OrderError("sum term reliable only to order " +
                                 to_string(*t.order()) + " < requested " +
                                 to_string(order));
            if (t.known_zero()) continue;
            if (*t.valuation() < order) {
                acc += t.truncated(order);
                contributed = true;
            }
        }
        quiet = contributed ? 0 : quiet + 1;
        if (quiet >= cfg.window) break;
    }
    return acc.truncated(order);
}

}  // namespace qseries
