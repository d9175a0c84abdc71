#ifndef ELBOUND_CIRCLE_HPP
#define ELBOUND_CIRCLE_HPP

#include <array>
#include <iosfwd>
#include <string>
#include <vector>

namespace elbound::circle {

// A probability density on the circle [0, 2*pi), extended periodically.
// Either parametric (uniform, von Mises, cardioid) or tabulated as a
// piecewise-linear interpolant of (angle, value) samples.
//
// Construction verifies nonnegativity and unit mass (within 1e-8).
class CircularDensity {
public:
    static CircularDensity uniform();
    static CircularDensity von_mises(double kappa, double mu = 0.0);
    static CircularDensity cardioid(double a);
    // Angles must be strictly increasing in [0, 2*pi); the interpolant wraps
    // from the last node back to the first. Values must be nonnegative.
    static CircularDensity tabulated(std::vector<double> angles, std::vector<double> values);
    // CSV rows "angle,value".
    static CircularDensity tabulated_from_csv(std::istream& in);
    static CircularDensity load_csv(const std::string& path);

    // f(x), evaluated periodically.
    double operator()(double x) const;

    // G(x) = integral of f over the half circle (x, x + pi). Parametric
    // densities integrate adaptively; tabulated ones use an exact cumulative
    // table. G(x) + G(x - pi) = 1 for every density.
    double half_circle_mass(double x) const;

    const std::string& descriptor() const { return descriptor_; }

private:
    CircularDensity() = default;
    void check_normalization();

    enum class Kind { Uniform, VonMises, Cardioid, Tabulated } kind_ = Kind::Uniform;
    double kappa_ = 0.0, mu_ = 0.0, log_i0_ = 0.0; // von Mises
    double a_ = 0.0;                               // cardioid
    std::vector<double> angles_, values_, cumulative_;
    std::string descriptor_;
};

// P{origin interior to the hull of n sign variables}: 1 - p^n - (1-p)^n,
// maximized at p = 1/2. The k = 1 analytic branch.
double line_prob(double p, long n);

// P{origin NOT in the hull of n i.i.d. angles with density d}: the k = 2
// analytic branch, n * integral of f(x) G(x)^(n-1). Also evaluated through
// the mirrored and averaged forms; the three must agree within 1e-7 or a
// NumericalError is raised.
double circle_outside_prob(const CircularDensity& d, long n);

// The three integral forms individually (primary, mirrored, averaged).
std::array<double, 3> circle_outside_prob_forms(const CircularDensity& d, long n);

// P{origin in hull} for any circularly symmetric law: 1 - n * 2^-(n-1).
double symmetric_prob(long n);

} // namespace elbound::circle

#endif
