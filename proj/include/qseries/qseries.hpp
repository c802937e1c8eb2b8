#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>

#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace qseries {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::rational<long long>;

std::string to_string(const Rat& r);
Rat parse_rat(const std::string& s);
long long floor_rat(const Rat& r);

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
// exponent not representable on the current grid
struct GridError : Error {
    using Error::Error;
};
// inversion of a series whose leading coefficient is not +-1 (or is absent)
struct NonUnitError : Error {
    using Error::Error;
};
// an index violates a parity precondition such as "L+s+b even"
struct ParityError : Error {
    using Error::Error;
};
// a convergent-sum enumeration ran past its shell budget
struct BudgetExceeded : Error {
    using Error::Error;
};
// a result was requested beyond the reliable order of an operand
struct OrderError : Error {
    using Error::Error;
};
// any other violated precondition
struct DomainError : Error {
    using Error::Error;
};

/// Truncated formal series in q with exact integer coefficients on the
/// exponent grid (1/denom)*Z.  Coefficients at exponents < order() are exact;
/// beyond it nothing is known.  order() == nullopt marks an exact Laurent
/// polynomial (every coefficient known).  Values are immutable after
/// construction; all operations return new series.
class QSeries {
public:
    using Terms = std::map<long long, Int>;  // key k  <->  exponent k/denom

    QSeries() = default;  // exact zero on the integer grid

    static QSeries zero(std::optional<Rat> order, long long denom = 1);
    // c * q^e; denom == 0 means "smallest grid that carries e"
    static QSeries monomial(Int c, const Rat& e,
                            std::optional<Rat> order = std::nullopt,
                            long long denom = 0);
    static QSeries one(std::optional<Rat> order = std::nullopt);
    static QSeries from_terms(Terms terms, long long denom,
                              std::optional<Rat> order);

    long long denom() const { return denom_; }
    const std::optional<Rat>& order() const { return order_; }
    bool exact() const { return !order_.has_value(); }
    const Terms& terms() const { return terms_; }
    // no nonzero coefficient is known (identically 0 below order)
    bool known_zero() const { return terms_.empty(); }
    // least exponent with nonzero coefficient; nullopt when none is known
    std::optional<Rat> valuation() const;
    // valuation if a term exists, otherwise order (the infimum of what the
    // series could still contain); must not be called on the exact zero
    Rat valuation_bound() const;
    Rat degree() const;  // largest stored exponent; requires !known_zero()
    Int coeff(const Rat& e) const;
    Int leading_coeff() const;

    QSeries rescaled(long long newdenom) const;
    QSeries truncated(const Rat& order) const;
    QSeries shifted(const Rat& e) const;  // * q^e
    QSeries scaled(const Int& c) const;   // * c
    QSeries exact_div(const Int& c) const;
    QSeries negated() const;
    // multiplicative inverse; leading coefficient must be +-1.  For exact
    // input a target order is required unless the input is a monomial.
    QSeries inverse(std::optional<Rat> req_order = std::nullopt) const;
    QSeries pow(long long k, std::optional<Rat> req_order = std::nullopt) const;
    // q -> 1/q on an exact Laurent polynomial (exponent negation)
    QSeries substituted_inverse_q() const;
    // reinterpret a truncated computation as exact; caller asserts that the
    // true object is a polynomial of degree < order()
    QSeries declared_exact() const;

    friend QSeries operator+(const QSeries& x, const QSeries& y);
    friend QSeries operator-(const QSeries& x, const QSeries& y);
    friend QSeries operator*(const QSeries& x, const QSeries& y);
    QSeries operator-() const { return negated(); }
    QSeries& operator+=(const QSeries& y) { return *this = *this + y; }
    QSeries& operator-=(const QSeries& y) { return *this = *this - y; }
    QSeries& operator*=(const QSeries& y) { return *this = *this * y; }

    std::string str(std::size_t max_terms = 12) const;

private:
    long long denom_ = 1;
    Terms terms_;
    std::optional<Rat> order_;  // nullopt: exact

    void normalize();
    static long long key_on(const Rat& e, long long denom);
};

struct CompareResult {
    bool pass = false;
    Rat order{0};
    std::optional<Rat> mismatch_exponent;
    Int lhs_coeff{0};
    Int rhs_coeff{0};
};

// coefficient-wise comparison strictly below `order`; throws OrderError if
// either operand is only reliable short of `order`
CompareResult equal_to_order(const QSeries& x, const QSeries& y,
                             const Rat& order);
// whole-polynomial equality; both operands must be exact
bool equal_exact(const QSeries& x, const QSeries& y);
CompareResult compare_exact(const QSeries& x, const QSeries& y);

// ---------------------------------------------------------------------------
// Convergent sums over an enumerable index domain.  The domain is exposed as
// shells of increasing radius; summation stops once `window` consecutive
// shells contribute nothing below the requested order, and aborts with
// BudgetExceeded once the radius passes `shell_budget` (a wrong convergence
// assumption becomes an error, never a wrong answer).

struct SumConfig {
    int window = 3;
    long long shell_budget = 10000;
};

struct TermGenerator {
    using Index = std::vector<long long>;
    // indices at radius R, for R = 0, 1, 2, ...
    std::function<std::vector<Index>(long long)> shell;
    std::function<QSeries(const Index&)> term;
};

TermGenerator over_integers(std::function<QSeries(long long)> term);
TermGenerator over_nonneg(std::function<QSeries(long long)> term);

QSeries sum_converging(const TermGenerator& gen, const Rat& order,
                       const SumConfig& cfg = {});

}  // namespace qseries
