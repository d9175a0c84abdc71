#include "elbound/samplers.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace elbound::geom {

SamplerSpec SamplerSpec::uniform_sphere(int k) {
    SamplerSpec s;
    s.kind = Kind::UniformSphere;
    s.k = k;
    return s;
}

SamplerSpec SamplerSpec::sign_bernoulli(double p) {
    SamplerSpec s;
    s.kind = Kind::SignBernoulli;
    s.k = 1;
    s.p = p;
    return s;
}

SamplerSpec SamplerSpec::von_mises(double kappa, double mu) {
    SamplerSpec s;
    s.kind = Kind::VonMisesCircle;
    s.k = 2;
    s.kappa = kappa;
    s.mu = mu;
    return s;
}

SamplerSpec SamplerSpec::cardioid(double a) {
    SamplerSpec s;
    s.kind = Kind::CardioidCircle;
    s.k = 2;
    s.a = a;
    return s;
}

SamplerSpec SamplerSpec::shifted_gaussian(std::vector<double> shift) {
    SamplerSpec s;
    s.kind = Kind::ShiftedGaussian;
    s.k = static_cast<int>(shift.size());
    s.shift = std::move(shift);
    return s;
}

void SamplerSpec::validate() const {
    switch (kind) {
    case Kind::UniformSphere:
        if (k < 1) throw std::invalid_argument("UniformSphere: k must be >= 1");
        break;
    case Kind::SignBernoulli:
        if (k != 1) throw std::invalid_argument("SignBernoulli: k must be 1");
        if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("SignBernoulli: p must lie in [0, 1]");
        break;
    case Kind::VonMisesCircle:
        if (k != 2) throw std::invalid_argument("VonMisesCircle: k must be 2");
        if (!(kappa >= 0.0)) throw std::invalid_argument("VonMisesCircle: kappa must be >= 0");
        break;
    case Kind::CardioidCircle:
        if (k != 2) throw std::invalid_argument("CardioidCircle: k must be 2");
        if (!(std::fabs(a) <= 1.0))
            throw std::invalid_argument("CardioidCircle: |a| must be <= 1 for a nonnegative density");
        break;
    case Kind::ShiftedGaussian:
        if (k < 1 || shift.size() != static_cast<std::size_t>(k))
            throw std::invalid_argument("ShiftedGaussian: shift dimension mismatch");
        break;
    }
}

std::string SamplerSpec::describe() const {
    char buf[128];
    switch (kind) {
    case Kind::UniformSphere:
        std::snprintf(buf, sizeof buf, "uniform-sphere(k=%d)", k);
        return buf;
    case Kind::SignBernoulli:
        std::snprintf(buf, sizeof buf, "sign-bernoulli(p=%g)", p);
        return buf;
    case Kind::VonMisesCircle:
        std::snprintf(buf, sizeof buf, "von-mises(kappa=%g,mu=%g)", kappa, mu);
        return buf;
    case Kind::CardioidCircle:
        std::snprintf(buf, sizeof buf, "cardioid(a=%g)", a);
        return buf;
    case Kind::ShiftedGaussian: {
        std::string out = "shifted-gaussian(shift=";
        for (std::size_t i = 0; i < shift.size(); ++i) {
            std::snprintf(buf, sizeof buf, "%s%g", i ? "," : "", shift[i]);
            out += buf;
        }
        return out + ")";
    }
    }
    return "?";
}

std::vector<double> SamplerSpec::mean() const {
    if (kind == Kind::ShiftedGaussian) return shift;
    if (kind == Kind::SignBernoulli) return {2.0 * p - 1.0};
    if (kind == Kind::VonMisesCircle || kind == Kind::CardioidCircle || kind == Kind::UniformSphere) {
        // Symmetric kinds are used with theta_0 = 0; the circular laws with
        // nonzero concentration have a nonzero mean, but the experiments only
        // use them for hull-probability runs, not coverage ones.
        return std::vector<double>(static_cast<std::size_t>(k), 0.0);
    }
    return {};
}

double cardioid_quantile(double a, double u) {
    if (!(std::fabs(a) <= 1.0)) throw std::invalid_argument("cardioid_quantile: |a| must be <= 1");
    if (!(u >= 0.0 && u <= 1.0)) throw std::invalid_argument("cardioid_quantile: u must lie in [0, 1]");
    // F(x) = (x + a sin x) / (2 pi) is nondecreasing on [0, 2 pi].
    const double target = 2.0 * M_PI * u;
    double lo = 0.0, hi = 2.0 * M_PI;
    double x = target; // good starting guess: exact for a = 0
    for (int i = 0; i < 200; ++i) {
        const double f = x + a * std::sin(x) - target;
        if (f > 0.0)
            hi = x;
        else
            lo = x;
        const double fp = 1.0 + a * std::cos(x);
        double next = fp > 1e-12 ? x - f / fp : 0.5 * (lo + hi);
        if (next <= lo || next >= hi) next = 0.5 * (lo + hi);
        if (std::fabs(next - x) < 1e-13) return next;
        x = next;
        if (hi - lo < 1e-13) break;
    }
    return x;
}

namespace {

// Best-Fisher rejection sampler for the von Mises law.
double von_mises_angle(double kappa, double mu, rng::Stream& rng) {
    if (kappa < 1e-10) return rng.next_angle();
    const double tau = 1.0 + std::sqrt(1.0 + 4.0 * kappa * kappa);
    const double rho = (tau - std::sqrt(2.0 * tau)) / (2.0 * kappa);
    const double r = (1.0 + rho * rho) / (2.0 * rho);
    while (true) {
        const double u1 = rng.next_uniform();
        const double u2 = rng.next_uniform();
        const double z = std::cos(M_PI * u1);
        const double f = (1.0 + r * z) / (r + z);
        const double c = kappa * (r - f);
        if (c * (2.0 - c) - u2 > 0.0 || std::log(c / u2) + 1.0 - c >= 0.0) {
            const double u3 = rng.next_uniform();
            double angle = mu + (u3 < 0.5 ? -1.0 : 1.0) * std::acos(f);
            angle = std::fmod(angle, 2.0 * M_PI);
            if (angle < 0.0) angle += 2.0 * M_PI;
            return angle;
        }
    }
}

} // namespace

double sample_angle(const SamplerSpec& spec, rng::Stream& rng) {
    switch (spec.kind) {
    case SamplerSpec::Kind::VonMisesCircle:
        return von_mises_angle(spec.kappa, spec.mu, rng);
    case SamplerSpec::Kind::CardioidCircle:
        return cardioid_quantile(spec.a, rng.next_uniform());
    case SamplerSpec::Kind::UniformSphere:
        if (spec.k == 2) return rng.next_angle();
        [[fallthrough]];
    default:
        throw std::invalid_argument("sample_angle: not a circular sampler");
    }
}

PointCloud sample(const SamplerSpec& spec, std::size_t n, std::uint64_t seed,
                  std::uint64_t stream) {
    spec.validate();
    if (n < 1) throw std::invalid_argument("sample: n must be >= 1");
    rng::Stream rng(seed, stream);
    PointCloud cloud(n, static_cast<std::size_t>(spec.k));

    switch (spec.kind) {
    case SamplerSpec::Kind::UniformSphere:
        for (std::size_t i = 0; i < n; ++i) {
            double norm2 = 0.0;
            do {
                norm2 = 0.0;
                for (int j = 0; j < spec.k; ++j) {
                    const double g = rng.next_gaussian();
                    cloud(i, static_cast<std::size_t>(j)) = g;
                    norm2 += g * g;
                }
            } while (norm2 < 1e-24);
            const double inv = 1.0 / std::sqrt(norm2);
            for (int j = 0; j < spec.k; ++j) cloud(i, static_cast<std::size_t>(j)) *= inv;
        }
        break;
    case SamplerSpec::Kind::SignBernoulli:
        for (std::size_t i = 0; i < n; ++i)
            cloud(i, 0) = rng.next_uniform() < spec.p ? 1.0 : -1.0;
        break;
    case SamplerSpec::Kind::VonMisesCircle:
    case SamplerSpec::Kind::CardioidCircle:
        for (std::size_t i = 0; i < n; ++i) {
            const double x = sample_angle(spec, rng);
            cloud(i, 0) = std::cos(x);
            cloud(i, 1) = std::sin(x);
        }
        break;
    case SamplerSpec::Kind::ShiftedGaussian:
        for (std::size_t i = 0; i < n; ++i)
            for (int j = 0; j < spec.k; ++j)
                cloud(i, static_cast<std::size_t>(j)) =
                    rng.next_gaussian() + spec.shift[static_cast<std::size_t>(j)];
        break;
    }
    return cloud;
}

} // namespace elbound::geom
