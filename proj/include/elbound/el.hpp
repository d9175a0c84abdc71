#ifndef ELBOUND_EL_HPP
#define ELBOUND_EL_HPP

#include <optional>
#include <span>
#include <vector>

#include "elbound/geometry.hpp"

namespace elbound::el {

// Estimating-function values m(Y_i, theta) at the theta under test,
// one row per observation.
struct ELInput {
    geom::PointCloud m_values;
};

enum class ELStatus { Interior, OutsideHull };

// Result of maximizing prod(n w_i) subject to sum(w_i m_i) = 0 on the
// probability simplex. OutsideHull encodes log_ratio = +infinity: no
// weights can reconstruct the origin.
struct ELEvaluation {
    ELStatus status = ELStatus::OutsideHull;
    std::vector<double> lambda;  // length k, Interior only
    std::vector<double> weights; // length n, Interior only
    double log_ratio = 0.0;      // -2 log R(theta); +inf when OutsideHull
    int iterations = 0;

    bool interior() const { return status == ELStatus::Interior; }
};

// Confidence region parameters: {theta : l(theta) < radius}.
struct RegionSpec {
    double radius = 0.0;
    std::optional<double> level; // the level radius was derived from, if any
};

// Evaluates the empirical log likelihood ratio l(theta) = -2 log R(theta).
//
// Runs the hull test first so that OutsideHull is a geometric verdict, then
// solves the convex dual: damped Newton on lambda with the feasibility
// margin 1 + lambda'm_i >= 1/n, started at lambda = 0, gradient tolerance
// 1e-10, at most 100 iterations. Throws SolverError (with the residual norm)
// on non-convergence, which is distinct from OutsideHull.
ELEvaluation el_logratio(const ELInput& input);

// l(theta) < radius, with OutsideHull never in the region.
bool in_region(const ELInput& input, const RegionSpec& spec);

// Chi-square quantile with k degrees of freedom: the default asymptotic
// calibration radius for a k-dimensional estimating function.
double chisq_radius(long k, double level);

// The built-in mean functional m(Y, theta) = Y - theta.
geom::PointCloud mean_functional(const geom::PointCloud& y, std::span<const double> theta);

} // namespace elbound::el

#endif
