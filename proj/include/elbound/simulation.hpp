#ifndef ELBOUND_SIMULATION_HPP
#define ELBOUND_SIMULATION_HPP

#include <cstdint>
#include <iosfwd>
#include <limits>
#include <string>
#include <vector>

#include "elbound/samplers.hpp"

namespace elbound::sim {

// Binomial Monte Carlo summary. Reproducible exactly from (configuration,
// seed): replicate r always draws from stream r of the counter-based
// generator, so the thread count never changes the counts.
struct MCReport {
    std::uint64_t replicates = 0;
    std::uint64_t hits = 0;
    double estimate = 0.0;
    double std_error = 0.0;
    double wilson_lo = 0.0;
    double wilson_hi = 0.0;
    std::uint64_t seed = 0;
};

MCReport make_report(std::uint64_t hits, std::uint64_t replicates, std::uint64_t seed);

// A coverage experiment: draw n observations Y_i from the sampler, form
// m(Y_i, theta_0) = Y_i - theta_0 with the known true parameter, and test
// region membership.
struct CoverageProblem {
    geom::SamplerSpec sampler;
    std::vector<double> true_theta;
    std::size_t n = 0;
};

// Sentinel radius for the r -> infinity limit: counts the hull event itself.
inline constexpr double kInfiniteRadius = std::numeric_limits<double>::infinity();

// 0 means "use default_thread_count()".
std::uint64_t verify_projection_invariance(const geom::SamplerSpec& spec, std::size_t n,
                                           std::uint64_t replicates, std::uint64_t seed,
                                           unsigned threads = 0);

MCReport estimate_hull_prob(const geom::SamplerSpec& spec, std::size_t n,
                            std::uint64_t replicates, std::uint64_t seed,
                            double tol = 1e-9, unsigned threads = 0);

MCReport estimate_coverage(const CoverageProblem& problem, double radius,
                           std::uint64_t replicates, std::uint64_t seed,
                           unsigned threads = 0);

struct ConjectureEntry {
    geom::SamplerSpec spec;
    MCReport report;
    double bound = 0.0; // exact_bound(k, n)
    double gap = 0.0;   // bound - estimate
};

// Hull-probability scan across candidate samplers of dimension k, reporting
// each estimate against the symmetric-case bound. For k >= 3 the bound's
// extremality is conjectural; gaps significantly below zero would be
// counterexamples.
std::vector<ConjectureEntry> conjecture_scan(int k, std::size_t n,
                                             const std::vector<geom::SamplerSpec>& specs,
                                             std::uint64_t replicates, std::uint64_t seed,
                                             unsigned threads = 0);

// ELBOUND_THREADS environment variable, else hardware concurrency.
unsigned default_thread_count();

} // namespace elbound::sim

#endif
