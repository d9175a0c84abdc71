#include "elbound/circle.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "elbound/errors.hpp"
#include "elbound/quadrature.hpp"
#include "elbound/special.hpp"

namespace elbound::circle {

namespace {

constexpr double kTwoPi = 2.0 * M_PI;
constexpr double kMassTol = 1e-12;   // G(x) quadrature tolerance
constexpr double kOuterTol = 1e-10;  // outside-probability quadrature tolerance
constexpr double kFormsTol = 1e-7;   // cross-form agreement requirement

double wrap_angle(double x) {
    double r = std::fmod(x, kTwoPi);
    if (r < 0.0) r += kTwoPi;
    return r;
}

} // namespace

CircularDensity CircularDensity::uniform() {
    CircularDensity d;
    d.kind_ = Kind::Uniform;
    d.descriptor_ = "uniform";
    d.check_normalization();
    return d;
}

CircularDensity CircularDensity::von_mises(double kappa, double mu) {
    if (!(kappa >= 0.0)) throw std::invalid_argument("von_mises: kappa must be >= 0");
    CircularDensity d;
    d.kind_ = Kind::VonMises;
    d.kappa_ = kappa;
    d.mu_ = mu;
    d.log_i0_ = special::log_bessel_i0(kappa);
    char buf[64];
    std::snprintf(buf, sizeof buf, "von-mises(kappa=%g,mu=%g)", kappa, mu);
    d.descriptor_ = buf;
    d.check_normalization();
    return d;
}

CircularDensity CircularDensity::cardioid(double a) {
    if (!(std::fabs(a) <= 1.0))
        throw std::invalid_argument("cardioid: |a| must be <= 1 for a nonnegative density");
    CircularDensity d;
    d.kind_ = Kind::Cardioid;
    d.a_ = a;
    char buf[48];
    std::snprintf(buf, sizeof buf, "cardioid(a=%g)", a);
    d.descriptor_ = buf;
    d.check_normalization();
    return d;
}

CircularDensity CircularDensity::tabulated(std::vector<double> angles, std::vector<double> values) {
    if (angles.size() != values.size() || angles.size() < 3)
        throw std::invalid_argument("tabulated: need at least 3 matching (angle, value) samples");
    for (std::size_t i = 0; i < angles.size(); ++i) {
        if (!(angles[i] >= 0.0) || !(angles[i] < kTwoPi))
            throw std::invalid_argument("tabulated: angles must lie in [0, 2*pi)");
        if (i > 0 && !(angles[i] > angles[i - 1]))
            throw std::invalid_argument("tabulated: angles must be strictly increasing");
        if (!(values[i] >= 0.0))
            throw std::invalid_argument("tabulated: density values must be nonnegative");
    }
    CircularDensity d;
    d.kind_ = Kind::Tabulated;
    d.angles_ = std::move(angles);
    d.values_ = std::move(values);
    // Exact cumulative integral of the piecewise-linear interpolant at each
    // node, plus the wrap segment back to angles_[0] + 2*pi.
    d.cumulative_.assign(d.angles_.size() + 1, 0.0);
    for (std::size_t i = 1; i < d.angles_.size(); ++i) {
        const double seg = 0.5 * (d.values_[i] + d.values_[i - 1]) * (d.angles_[i] - d.angles_[i - 1]);
        d.cumulative_[i] = d.cumulative_[i - 1] + seg;
    }
    const double wrap_len = d.angles_[0] + kTwoPi - d.angles_.back();
    d.cumulative_.back() =
        d.cumulative_[d.angles_.size() - 1] + 0.5 * (d.values_.front() + d.values_.back()) * wrap_len;
    char buf[48];
    std::snprintf(buf, sizeof buf, "tabulated(%zu nodes)", d.angles_.size());
    d.descriptor_ = buf;
    const double total = d.cumulative_.back();
    if (std::fabs(total - 1.0) > 1e-8)
        throw std::invalid_argument("tabulated: density does not integrate to 1 (got " +
                                    std::to_string(total) + ")");
    return d;
}

CircularDensity CircularDensity::tabulated_from_csv(std::istream& in) {
    std::vector<double> angles, values;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        std::stringstream ss(line);
        std::string a, v;
        if (!std::getline(ss, a, ',') || !std::getline(ss, v))
            throw std::invalid_argument("tabulated CSV: expected 'angle,value' rows");
        try {
            angles.push_back(std::stod(a));
            values.push_back(std::stod(v));
        } catch (const std::exception&) {
            throw std::invalid_argument("tabulated CSV: bad row '" + line + "'");
        }
    }
    return tabulated(std::move(angles), std::move(values));
}

CircularDensity CircularDensity::load_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("tabulated CSV: cannot open '" + path + "'");
    return tabulated_from_csv(in);
}

void CircularDensity::check_normalization() {
    const double total = quad::integrate([this](double x) { return (*this)(x); }, 0.0, kTwoPi, 1e-10);
    if (std::fabs(total - 1.0) > 1e-8)
        throw NumericalError(descriptor_ + ": density integrates to " + std::to_string(total));
}

double CircularDensity::operator()(double x) const {
    x = wrap_angle(x);
    switch (kind_) {
    case Kind::Uniform:
        return 1.0 / kTwoPi;
    case Kind::VonMises:
        return std::exp(kappa_ * std::cos(x - mu_) - log_i0_) / kTwoPi;
    case Kind::Cardioid:
        return (1.0 + a_ * std::cos(x)) / kTwoPi;
    case Kind::Tabulated: {
        // Segment lookup; x in [angles_[i], angles_[i+1]) or the wrap segment.
        const auto it = std::upper_bound(angles_.begin(), angles_.end(), x);
        if (it == angles_.begin()) {
            // before the first node: inside the wrap segment, seen from the left
            const double x0 = angles_.back() - kTwoPi;
            const double t = (x - x0) / (angles_.front() - x0);
            return values_.back() + t * (values_.front() - values_.back());
        }
        const std::size_t i = static_cast<std::size_t>(it - angles_.begin()) - 1;
        if (i + 1 == angles_.size()) {
            const double x1 = angles_.front() + kTwoPi;
            const double t = (x - angles_.back()) / (x1 - angles_.back());
            return values_.back() + t * (values_.front() - values_.back());
        }
        const double t = (x - angles_[i]) / (angles_[i + 1] - angles_[i]);
        return values_[i] + t * (values_[i + 1] - values_[i]);
    }
    }
    return 0.0;
}

double CircularDensity::half_circle_mass(double x) const {
    if (kind_ == Kind::Tabulated) {
        // cumulative_ is exact for the interpolant; extend by periodicity.
        const auto cum_at = [this](double y) {
            double base = 0.0;
            y -= angles_.front();
            const double period_mass = cumulative_.back();
            const double span = std::floor(y / kTwoPi);
            base += span * period_mass;
            y -= span * kTwoPi;
            y += angles_.front();
            // y now in [angles_[0], angles_[0] + 2*pi)
            std::size_t i;
            double x0, x1, v0, v1, c0;
            const auto it = std::upper_bound(angles_.begin(), angles_.end(), y);
            if (it == angles_.end()) {
                i = angles_.size() - 1;
                x0 = angles_.back();
                x1 = angles_.front() + kTwoPi;
                v0 = values_.back();
                v1 = values_.front();
                c0 = cumulative_[i];
            } else {
                i = static_cast<std::size_t>(it - angles_.begin()) - 1;
                x0 = angles_[i];
                x1 = angles_[i + 1];
                v0 = values_[i];
                v1 = values_[i + 1];
                c0 = cumulative_[i];
            }
            const double t = (y - x0) / (x1 - x0);
            const double vy = v0 + t * (v1 - v0);
            return base + c0 + 0.5 * (v0 + vy) * (y - x0);
        };
        return cum_at(x + M_PI) - cum_at(x);
    }
    // Split at the 2*pi wrap point as the integrand is defined on [0, 2*pi).
    const double x0 = wrap_angle(x);
    const double hi = x0 + M_PI;
    const auto f = [this](double y) { return (*this)(y); };
    if (hi <= kTwoPi) return quad::integrate(f, x0, hi, kMassTol);
    return quad::integrate(f, x0, kTwoPi, 0.5 * kMassTol) +
           quad::integrate(f, 0.0, hi - kTwoPi, 0.5 * kMassTol);
}

double line_prob(double p, long n) {
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("line_prob: p must lie in [0, 1]");
    if (n < 1) throw std::invalid_argument("line_prob: n must be >= 1");
    return 1.0 - std::pow(p, static_cast<double>(n)) - std::pow(1.0 - p, static_cast<double>(n));
}

std::array<double, 3> circle_outside_prob_forms(const CircularDensity& d, long n) {
    if (n < 1) throw std::invalid_argument("circle_outside_prob: n must be >= 1");
    const double nn = static_cast<double>(n);
    const double e = nn - 1.0;
    const auto primary = [&](double x) { return d(x) * std::pow(d.half_circle_mass(x), e); };
    const auto mirrored = [&](double x) {
        return d(x) * std::pow(d.half_circle_mass(x - M_PI), e);
    };
    const auto averaged = [&](double x) {
        return d(x) * 0.5 *
               (std::pow(d.half_circle_mass(x), e) + std::pow(d.half_circle_mass(x - M_PI), e));
    };
    return {
        nn * quad::integrate(primary, 0.0, kTwoPi, kOuterTol),
        nn * quad::integrate(mirrored, 0.0, kTwoPi, kOuterTol),
        nn * quad::integrate(averaged, 0.0, kTwoPi, kOuterTol),
    };
}

double circle_outside_prob(const CircularDensity& d, long n) {
    const auto forms = circle_outside_prob_forms(d, n);
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            if (std::fabs(forms[i] - forms[j]) > kFormsTol)
                throw NumericalError("circle_outside_prob: integral forms disagree beyond 1e-7");
    return forms[0];
}

double symmetric_prob(long n) {
    if (n < 1) throw std::invalid_argument("symmetric_prob: n must be >= 1");
    if (n > 1100) return 1.0; // n * 2^-(n-1) underflows to zero long before this
    return 1.0 - std::ldexp(static_cast<double>(n), static_cast<int>(-(n - 1)));
}

} // namespace elbound::circle
