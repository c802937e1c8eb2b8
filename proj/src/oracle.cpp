#include "qseries/oracle.hpp"

namespace qseries {

namespace {

// twice the H weight of the segment (a, b, c); heights are exact, the 1/2
// straight-segment weight is kept integral by doubling
long long twice_weight(long long p, long long pp, long long x0, long long x1,
                       long long x2) {
    if (x0 == x2) {
        long long a = x0;
        long long f = (a * (pp - p)) / pp;  // floor, a >= 0
        return (x1 < x0) ? 2 * f : -2 * f;  // minimum : maximum
    }
    return 1;  // straight through
}

void walk_paths(long long p, long long pp, long long L, long long b,
                long long c, std::vector<long long>& x, long long i,
                long long twice_w, QSeries::Terms& acc) {
    if (i == L + 1) {
        if (x[static_cast<std::size_t>(L)] != b) return;
        // final segment weight involves x_{L+1} = c
        long long w = twice_w;
        if (L >= 1)
            w += L * twice_weight(p, pp, x[static_cast<std::size_t>(L - 1)],
                                  x[static_cast<std::size_t>(L)], c);
        acc[w] += 1;
        return;
    }
    for (long long step : {-1, 1}) {
        long long nx = x[static_cast<std::size_t>(i - 1)] + step;
        bool interior_ok = (1 <= nx && nx <= pp - 1);
        if (i <= L && !interior_ok) continue;
        x[static_cast<std::size_t>(i)] = nx;
        long long add = 0;
        if (i >= 2) {
            // weight of segment at position i-1 is now determined
            long long pos = i - 1;
            add = pos * twice_weight(p, pp, x[static_cast<std::size_t>(i - 2)],
                                     x[static_cast<std::size_t>(i - 1)], nx);
        }
        walk_paths(p, pp, L, b, c, x, i + 1, twice_w + add, acc);
    }
}

}  // namespace

QSeries path_generating_fn(long long p, long long pp, long long s, long long b,
                           long long c, long long L) {
    if (!(1 <= p && p < pp)) throw DomainError("need 1 <= p < p'");
    if (!(1 <= s && s <= pp - 1)) throw DomainError("s out of range");
    if (!(1 <= b && b <= pp - 1)) throw DomainError("b out of range");
    if (!(0 <= c && c <= pp)) throw DomainError("c out of range");
    if (std::abs(b - c) != 1) throw DomainError("|b-c| must be 1");
    if (L < 0 || L > 24) throw BudgetExceeded("path enumeration limited to L <= 24");

    QSeries::Terms acc;
    std::vector<long long> x(static_cast<std::size_t>(L) + 1);
    x[0] = s;
    if (L == 0) {
        if (s == b) acc[0] += 1;
    } else {
        walk_paths(p, pp, L, b, c, x, 1, 0, acc);
    }
    return QSeries::from_terms(std::move(acc), 2, std::nullopt);
}

long long path_r_value(long long p, long long pp, long long b, long long c) {
    auto kr = [&]() { return (b + c - 1) / 2 - (c * (pp - p)) / pp; };
    auto kr2 = [&]() { return (b - c + 1) / 2 + (c * p) / pp; };
    if (c == 0) return kr();
    if (c == pp) return kr2();
    long long r1 = kr(), r2 = kr2();
    if (r1 != r2)
        throw DomainError("the two r-expressions disagree at c=" +
                          std::to_string(c));
    return r1;
}

IdentityReport path_vs_configsum(long long p, long long pp, long long s,
                                 long long b, long long c, long long L) {
    QSeries d = path_generating_fn(p, pp, s, b, c, L);
    long long r = path_r_value(p, pp, b, c);
    Rat pref = Rat(L * (c - b) * (c + b - 1 - 2 * r), 4) +
               Rat((s - b) * (s + b - 1 - 2 * r), 4);
    QSeries x = config_sum(ModelParams{p, pp}, XIndex{r, s, b, L});
    QSeries rhs = x.shifted(pref);
    return make_report("oracle-paths",
                       {{"p", std::to_string(p)},
                        {"pp", std::to_string(pp)},
                        {"s", std::to_string(s)},
                        {"b", std::to_string(b)},
                        {"c", std::to_string(c)},
                        {"L", std::to_string(L)},
                        {"r", std::to_string(r)}},
                       compare_exact(d, rhs));
}

namespace {

struct HookWindow {
    long long p, pp, r, s;
    bool side_condition = false;  // r = 0: largest part must exceed (L-s-b)/2
    long long side_bound = 0;
};

bool hooks_ok(const std::vector<long long>& lambda,
              const std::vector<long long>& conj, const HookWindow& w) {
    // hook difference at node (i,j) of the diagram is lambda_i - lambda'_j;
    // diagonal d carries the nodes (i, i-d)
    long long len = static_cast<long long>(lambda.size());
    auto check_diag = [&](long long d, bool lower, long long bound) {
        for (long long i = 1; i <= len; ++i) {
            long long j = i - d;
            long long row = lambda[static_cast<std::size_t>(i - 1)];
            if (j < 1 || j > row) continue;  // node not in the diagram
            long long hd = row - conj[static_cast<std::size_t>(j - 1)];
            if (lower && hd < bound) return false;
            if (!lower && hd > bound) return false;
        }
        return true;
    };
    return check_diag(1 - w.r, true, w.r - w.s + 1) &&
           check_diag(w.p - w.r - 1, false, w.pp - w.p + w.r - w.s - 1);
}

void enumerate_partitions(long long maxparts, long long maxpart,
                          std::vector<long long>& lambda, long long total,
                          const std::function<void(const std::vector<long long>&,
                                                   long long)>& emit) {
    emit(lambda, total);
    if (static_cast<long long>(lambda.size()) == maxparts) return;
    long long cap = lambda.empty() ? maxpart : lambda.back();
    for (long long next = 1; next <= cap; ++next) {
        lambda.push_back(next);
        enumerate_partitions(maxparts, maxpart, lambda, total + next, emit);
        lambda.pop_back();
    }
}

std::vector<long long> conjugate(const std::vector<long long>& lambda) {
    std::vector<long long> conj;
    if (lambda.empty()) return conj;
    conj.assign(static_cast<std::size_t>(lambda.front()), 0);
    for (long long part : lambda)
        for (long long j = 0; j < part; ++j) ++conj[static_cast<std::size_t>(j)];
    return conj;
}

}  // namespace

QSeries hook_partition_gen_fn(long long p, long long pp, long long r,
                              long long s, long long b, long long L) {
    if ((L + s + b) % 2 != 0) throw ParityError("L+s+b must be even");
    if (r == 0) {
        if (!(0 <= b && b <= pp - p)) throw DomainError("need 0 <= b <= p'-p");
    } else if (!(1 <= r && r <= p - 1 && 0 <= b - r && b - r <= pp - p)) {
        throw DomainError("need 1 <= r <= p-1 and 0 <= b-r <= p'-p");
    }
    long long maxparts = (L + s - b) / 2;
    long long maxpart = (L - s + b) / 2;
    if (maxparts < 0 || maxpart < 0)
        return QSeries::zero(std::nullopt, 1);
    if (maxparts * maxpart > 400)
        throw BudgetExceeded("hook partition box too large to enumerate");

    HookWindow w{p, pp, r, s, r == 0, (L - s - b) / 2};
    QSeries::Terms acc;
    std::vector<long long> lambda;
    enumerate_partitions(
        maxparts, maxpart, lambda, 0,
        [&](const std::vector<long long>& lam, long long total) {
            if (w.side_condition) {
                long long largest = lam.empty() ? 0 : lam.front();
                if (largest <= w.side_bound) return;
            }
            if (hooks_ok(lam, conjugate(lam), w)) acc[total] += 1;
        });
    return QSeries::from_terms(std::move(acc), 1, std::nullopt);
}

IdentityReport hook_vs_configsum(long long p, long long pp, long long r,
                                 long long s, long long b, long long L) {
    QSeries lhs = hook_partition_gen_fn(p, pp, r, s, b, L);
    QSeries rhs = config_sum(ModelParams{p, pp}, XIndex{r, s, b, L});
    return make_report("oracle-hooks",
                       {{"p", std::to_string(p)},
                        {"pp", std::to_string(pp)},
                        {"r", std::to_string(r)},
                        {"s", std::to_string(s)},
                        {"b", std::to_string(b)},
                        {"L", std::to_string(L)}},
                       compare_exact(lhs, rhs));
}

QSeries partition_count_products(long long modulus,
                                 const std::vector<long long>& residues,
                                 const Rat& order) {
    long long limit = floor_rat(order) + 1;
    std::vector<Int> ways(static_cast<std::size_t>(std::max<long long>(limit, 1)), 0);
    ways[0] = 1;
    for (long long part = 1; part < limit; ++part) {
        bool allowed = false;
        for (long long res : residues)
            allowed = allowed || (((part - res) % modulus + modulus) % modulus == 0);
        if (!allowed) continue;
        for (long long n = part; n < limit; ++n)
            ways[static_cast<std::size_t>(n)] +=
                ways[static_cast<std::size_t>(n - part)];
    }
    QSeries::Terms t;
    for (long long n = 0; n < limit; ++n)
        if (ways[static_cast<std::size_t>(n)] != 0 && Rat(n) < order)
            t[n] = ways[static_cast<std::size_t>(n)];
    return QSeries::from_terms(std::move(t), 1, order);
}

QSeries partition_count_distinct(long long modulus,
                                 const std::vector<long long>& residues,
                                 const Rat& order) {
    long long limit = floor_rat(order) + 1;
    std::vector<Int> ways(static_cast<std::size_t>(std::max<long long>(limit, 1)), 0);
    ways[0] = 1;
    for (long long part = 1; part < limit; ++part) {
        bool allowed = false;
        for (long long res : residues)
            allowed = allowed || (((part - res) % modulus + modulus) % modulus == 0);
        if (!allowed) continue;
        for (long long n = limit - 1; n >= part; --n)
            ways[static_cast<std::size_t>(n)] +=
                ways[static_cast<std::size_t>(n - part)];
    }
    QSeries::Terms t;
    for (long long n = 0; n < limit; ++n)
        if (ways[static_cast<std::size_t>(n)] != 0 && Rat(n) < order)
            t[n] = ways[static_cast<std::size_t>(n)];
    return QSeries::from_terms(std::move(t), 1, order);
}

}  // namespace qseries
