#ifndef ELBOUND_SAMPLERS_HPP
#define ELBOUND_SAMPLERS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "elbound/geometry.hpp"
#include "elbound/rng.hpp"

namespace elbound::geom {

// The point-cloud distributions the experiments need. Circular kinds emit
// k = 2 points on the unit circle; SignBernoulli emits +-1 in R^1.
struct SamplerSpec {
    enum class Kind {
        UniformSphere,   // uniform on the unit sphere in R^k
        SignBernoulli,   // +1 with probability p, else -1 (k = 1)
        VonMisesCircle,  // angle density prop. exp(kappa cos(x - mu))
        CardioidCircle,  // angle density (1 + a cos x) / (2 pi), |a| <= 1
        ShiftedGaussian, // standard normal in R^k plus a fixed shift
    };

    Kind kind = Kind::UniformSphere;
    int k = 1;
    double p = 0.5;               // SignBernoulli
    double kappa = 0.0, mu = 0.0; // VonMisesCircle
    double a = 0.0;               // CardioidCircle
    std::vector<double> shift;    // ShiftedGaussian

    static SamplerSpec uniform_sphere(int k);
    static SamplerSpec sign_bernoulli(double p);
    static SamplerSpec von_mises(double kappa, double mu = 0.0);
    static SamplerSpec cardioid(double a);
    static SamplerSpec shifted_gaussian(std::vector<double> shift);

    void validate() const; // throws std::invalid_argument
    std::string describe() const;

    // Mean of the distribution, where the experiments need a known theta_0.
    // Zero for the symmetric kinds, the shift for ShiftedGaussian.
    std::vector<double> mean() const;
};

// n i.i.d. draws, bit-reproducible for fixed (spec, n, seed, stream).
// Concurrent simulations must give each replicate its own stream id rather
// than share a generator.
PointCloud sample(const SamplerSpec& spec, std::size_t n, std::uint64_t seed,
                  std::uint64_t stream = 0);

// One draw of the angular coordinate for the circular kinds (also used by
// goodness-of-fit tests). Requires a circular or k=1 kind.
double sample_angle(const SamplerSpec& spec, rng::Stream& rng);

// Inverse CDF of the cardioid law: solves (x + a sin x) / (2 pi) = u on
// [0, 2 pi) to absolute tolerance 1e-12.
double cardioid_quantile(double a, double u);

} // namespace elbound::geom

#endif
