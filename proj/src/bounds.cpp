#include "elbound/bounds.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "elbound/special.hpp"

namespace elbound::bounds {

namespace {

void validate(const BoundQuery& q) {
    if (q.k < 1) throw std::invalid_argument("BoundQuery: k must be >= 1");
    if (q.n < 1) throw std::invalid_argument("BoundQuery: n must be >= 1");
    if (q.n > (1L << 24)) throw std::invalid_argument("BoundQuery: n too large");
}

double round4(double v) { return std::round(v * 1e4) / 1e4; }

} // namespace

BigUint ExactProbability::value_numerator() const {
    return BigUint::pow2(static_cast<std::uint64_t>(log2_denominator)) - tail_numerator;
}

ExactProbability exact_bound(const BoundQuery& q) {
    validate(q);
    const std::uint64_t n = static_cast<std::uint64_t>(q.n);
    const std::uint64_t k = static_cast<std::uint64_t>(q.k);

    // tail = sum_{i=0}^{k-1} C(n-1, i); terms with i > n-1 vanish, which makes
    // the formula total: for n <= k the sum is the full 2^(n-1) and the bound
    // is exactly zero.
    BigUint tail;
    BigUint term(1);
    for (std::uint64_t i = 0; i < k; ++i) {
        if (i > 0) {
            if (i > n - 1) break; // C(n-1, i) = 0 from here on
            term.mul_small(static_cast<std::uint32_t>(n - i));
            term.divmod_small(static_cast<std::uint32_t>(i));
        }
        tail += term;
    }

    ExactProbability out;
    out.tail_numerator = tail;
    out.log2_denominator = q.n - 1;
    out.value = out.value_numerator().ratio_pow2(static_cast<std::uint64_t>(q.n - 1));
    return out;
}

BoundTable bound_table(std::span<const long> k_list, std::span<const double> ratio_list) {
    BoundTable t;
    t.k_values.assign(k_list.begin(), k_list.end());
    t.ratios.assign(ratio_list.begin(), ratio_list.end());
    for (long k : k_list) {
        if (k < 1) throw std::invalid_argument("bound_table: k must be >= 1");
        std::vector<long> ns;
        std::vector<double> row;
        for (double r : ratio_list) {
            if (!(r >= 2.0)) throw std::invalid_argument("bound_table: ratio must be >= 2");
            const double n_real = r * static_cast<double>(k);
            const double n_round = std::round(n_real);
            if (std::fabs(n_real - n_round) > 1e-9 * n_round)
                throw std::invalid_argument("bound_table: r*k is not an integer");
            const long n = static_cast<long>(n_round);
            ns.push_back(n);
            row.push_back(round4(exact_bound({k, n}).value));
        }
        t.n_values.push_back(std::move(ns));
        t.values.push_back(std::move(row));
    }
    return t;
}

BoundTable default_bound_table() {
    const long ks[] = {1, 2, 5};
    const double rs[] = {2, 3, 4, 5, 6, 7, 8};
    return bound_table(ks, rs);
}

std::string BoundTable::to_csv() const {
    std::string out = "k,r,n,bound\n";
    char buf[96];
    for (std::size_t i = 0; i < k_values.size(); ++i) {
        for (std::size_t j = 0; j < ratios.size(); ++j) {
            std::snprintf(buf, sizeof buf, "%ld,%g,%ld,%.4f\n", k_values[i], ratios[j],
                          n_values[i][j], values[i][j]);
            out += buf;
        }
    }
    return out;
}

long floor_strict(double x) {
    const double r = std::round(x);
    if (std::fabs(x - r) <= 1e-9 * std::fmax(1.0, std::fabs(x)))
        return static_cast<long>(r) - 1;
    return static_cast<long>(std::floor(x));
}

NormalApproxBound normal_approx_bound(double eps, long n) {
    if (!(eps > 0.0) || !(eps < 0.5))
        throw std::invalid_argument("normal_approx_bound: eps must lie in (0, 0.5)");
    if (n < 1) throw std::invalid_argument("normal_approx_bound: n must be >= 1");
    const long k = floor_strict(eps * static_cast<double>(n));
    if (k < 1 || k >= n)
        throw std::invalid_argument("normal_approx_bound: need n > [eps*n] >= 1");

    NormalApproxBound out;
    out.k = k;
    const double nm1 = static_cast<double>(n - 1);
    const double z = (static_cast<double>(k) - 1.0 - nm1 / 2.0) / (std::sqrt(nm1) / 2.0);
    out.approx = 1.0 - special::normal_cdf(z);
    out.exact = exact_bound({k, n}).value;
    return out;
}

LevelVerdict check_level(const BoundQuery& q, double level) {
    if (!(level > 0.0) || !(level < 1.0))
        throw std::invalid_argument("check_level: level must lie in (0, 1)");
    LevelVerdict v;
    v.requested_level = level;
    v.bound = exact_bound(q);
    v.achievable = level < v.bound.value;
    return v;
}

} // namespace elbound::bounds
