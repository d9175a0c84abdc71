#ifndef ELBOUND_BOUNDS_HPP
#define ELBOUND_BOUNDS_HPP

#include <span>
#include <string>
#include <vector>

#include "elbound/bigint.hpp"

namespace elbound::bounds {

// Query for the least upper bound on the coverage probability of an
// empirical likelihood ratio confidence region built from a k-dimensional
// estimating function and n observations.
struct BoundQuery {
    long k = 1; // dimension of the estimating function, >= 1
    long n = 1; // sample size, >= 1
};

// The bound as an exact dyadic rational: 1 - tail_numerator / 2^(n-1).
// For n <= k the tail numerator equals 2^(n-1) and the bound is exactly 0
// (fewer than k+1 points in R^k cannot strictly surround the origin).
struct ExactProbability {
    BigUint tail_numerator;      // sum_{i<k} C(n-1, i), in [0, 2^(n-1)]
    long log2_denominator = 0;   // n - 1
    double value = 0.0;          // 1 - tail * 2^-(n-1), rounded once

    // Exact complement numerator: 2^(n-1) - tail_numerator.
    BigUint value_numerator() const;
};

struct LevelVerdict {
    double requested_level = 0.0;
    ExactProbability bound;
    bool achievable = false; // requested_level < bound.value
};

// b(k, n) = 1 - [C(n-1,0) + ... + C(n-1,k-1)] * 2^-(n-1), Wendel's formula
// for the probability that the origin lies in the interior of the convex
// hull of n i.i.d. symmetric points in R^k. Exact for k <= 2; for k >= 3 the
// identification of this value with the supremum over all continuous laws is
// conjectural (the symmetric case attains it, no asymmetric case is known to
// exceed it). Total on k >= 1, n >= 1; returns exactly 0 when n <= k.
ExactProbability exact_bound(const BoundQuery& q);

// Rectangular sweep of exact_bound over k values and sample-size ratios
// r = n/k. Ratios may be fractional as long as r*k is an integer.
struct BoundTable {
    std::vector<long> k_values;
    std::vector<double> ratios;
    std::vector<std::vector<long>> n_values;  // [ki][ri]
    std::vector<std::vector<double>> values;  // rounded to 4 decimals

    // Header "k,r,n,bound", one row per cell, 4-decimal fixed-point bounds.
    std::string to_csv() const;
};

BoundTable bound_table(std::span<const long> k_list, std::span<const double> ratio_list);

// Default table: k in {1, 2, 5}, r in {2, ..., 8}.
BoundTable default_bound_table();

// Normal approximation to b([eps*n], n) from the binomial-tail form
// 1 - P{Bin(n-1, 1/2) <= [eps*n] - 1}, where [x] is the largest integer
// strictly smaller than x (note: [3] = 2, unlike floor). Returns the
// approximation alongside the exact value for comparison.
struct NormalApproxBound {
    long k = 0;       // [eps * n]
    double approx = 0.0;
    double exact = 0.0;
};

NormalApproxBound normal_approx_bound(double eps, long n);

// Largest integer strictly smaller than x, with a relative snap of 1e-9 so
// that products like 0.3 * 10 land on their intended integer first.
long floor_strict(double x);

// Guard for practitioners: is the requested confidence level attainable at
// all for this (k, n)?
LevelVerdict check_level(const BoundQuery& q, double level);

} // namespace elbound::bounds

#endif
