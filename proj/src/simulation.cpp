#include "elbound/simulation.hpp"

#include <atomic>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "elbound/bounds.hpp"
#include "elbound/el.hpp"
#include "elbound/errors.hpp"

namespace elbound::sim {

namespace {

constexpr double kZ95 = 1.959963984540054; // two-sided 95% normal quantile

// Runs `body` over replicate indices [0, N), partitioned contiguously over
// workers, and sums the per-replicate 0/1 outcomes. Exceptions from any
// replicate are rethrown on the calling thread.
std::uint64_t parallel_hits(std::uint64_t replicates, unsigned threads,
                            const std::function<bool(std::uint64_t)>& body) {
    if (threads == 0) threads = default_thread_count();
    const unsigned workers =
        static_cast<unsigned>(std::min<std::uint64_t>(threads, std::max<std::uint64_t>(replicates, 1)));
    if (workers <= 1) {
        std::uint64_t hits = 0;
        for (std::uint64_t r = 0; r < replicates; ++r) hits += body(r) ? 1 : 0;
        return hits;
    }
    std::vector<std::uint64_t> partial(workers, 0);
    std::vector<std::thread> pool;
    std::atomic<bool> failed{false};
    std::exception_ptr error;
    std::mutex error_mutex;
    for (unsigned w = 0; w < workers; ++w) {
        const std::uint64_t lo = replicates * w / workers;
        const std::uint64_t hi = replicates * (w + 1) / workers;
        pool.emplace_back([&, w, lo, hi] {
            std::uint64_t local = 0;
            try {
                for (std::uint64_t r = lo; r < hi && !failed.load(std::memory_order_relaxed); ++r)
                    local += body(r) ? 1 : 0;
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!error) error = std::current_exception();
                failed.store(true, std::memory_order_relaxed);
            }
            partial[w] = local;
        });
    }
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
    std::uint64_t hits = 0;
    for (std::uint64_t h : partial) hits += h;
    return hits;
}

} // namespace

unsigned default_thread_count() {
    if (const char* env = std::getenv("ELBOUND_THREADS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v >= 1 && v <= 256) return static_cast<unsigned>(v);
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw ? hw : 1;
}

MCReport make_report(std::uint64_t hits, std::uint64_t replicates, std::uint64_t seed) {
    if (replicates < 1) throw std::invalid_argument("make_report: need replicates >= 1");
    if (hits > replicates) throw std::invalid_argument("make_report: hits exceed replicates");
    MCReport r;
    r.replicates = replicates;
    r.hits = hits;
    r.seed = seed;
    const double n = static_cast<double>(replicates);
    const double p = static_cast<double>(hits) / n;
    r.estimate = p;
    r.std_error = std::sqrt(p * (1.0 - p) / n);
    const double z2 = kZ95 * kZ95;
    const double denom = 1.0 + z2 / n;
    const double center = (p + z2 / (2.0 * n)) / denom;
    const double half = kZ95 * std::sqrt(p * (1.0 - p) / n + z2 / (4.0 * n * n)) / denom;
    // clamp against rounding so 0 <= lo <= estimate <= hi <= 1 holds exactly
    r.wilson_lo = std::min(p, std::max(0.0, center - half));
    r.wilson_hi = std::max(p, std::min(1.0, center + half));
    return r;
}

std::uint64_t verify_projection_invariance(const geom::SamplerSpec& spec, std::size_t n,
                                           std::uint64_t replicates, std::uint64_t seed,
                                           unsigned threads) {
    spec.validate();
    const std::uint64_t mismatches = parallel_hits(replicates, threads, [&](std::uint64_t r) {
        const geom::PointCloud cloud = geom::sample(spec, n, seed, r);
        const geom::HullVerdict raw = geom::contains_origin(cloud);
        const geom::HullVerdict projected = geom::contains_origin(geom::project_to_sphere(cloud));
        return raw.status != projected.status;
    });
    return mismatches;
}

MCReport estimate_hull_prob(const geom::SamplerSpec& spec, std::size_t n,
                            std::uint64_t replicates, std::uint64_t seed, double tol,
                            unsigned threads) {
    spec.validate();
    if (n < 1 || replicates < 1)
        throw std::invalid_argument("estimate_hull_prob: need n >= 1 and replicates >= 1");
    const std::uint64_t hits = parallel_hits(replicates, threads, [&](std::uint64_t r) {
        const geom::PointCloud cloud = geom::sample(spec, n, seed, r);
        return geom::contains_origin(cloud, tol).interior();
    });
    return make_report(hits, replicates, seed);
}

MCReport estimate_coverage(const CoverageProblem& problem, double radius,
                           std::uint64_t replicates, std::uint64_t seed, unsigned threads) {
    problem.sampler.validate();
    if (problem.true_theta.size() != static_cast<std::size_t>(problem.sampler.k))
        throw std::invalid_argument("estimate_coverage: theta dimension mismatch");
    if (problem.n < 1 || replicates < 1)
        throw std::invalid_argument("estimate_coverage: need n >= 1 and replicates >= 1");
    const bool hull_limit = std::isinf(radius);
    if (!hull_limit && !(radius > 0.0))
        throw std::invalid_argument("estimate_coverage: radius must be positive");

    const std::uint64_t hits = parallel_hits(replicates, threads, [&](std::uint64_t r) {
        const geom::PointCloud y = geom::sample(problem.sampler, problem.n, seed, r);
        const geom::PointCloud m = el::mean_functional(y, problem.true_theta);
        if (hull_limit) return geom::contains_origin(m).interior();
        try {
            return el::in_region({m}, {radius, std::nullopt});
        } catch (const SolverError& e) {
            throw SolverError("replicate " + std::to_string(r) + ": " + e.what(),
                              e.residual_norm, e.iterations);
        }
    });
    return make_report(hits, replicates, seed);
}

std::vector<ConjectureEntry> conjecture_scan(int k, std::size_t n,
                                             const std::vector<geom::SamplerSpec>& specs,
                                             std::uint64_t replicates, std::uint64_t seed,
                                             unsigned threads) {
    if (n <= static_cast<std::size_t>(k))
        throw std::invalid_argument("conjecture_scan: need n > k");
    std::vector<ConjectureEntry> out;
    const double bound = bounds::exact_bound({k, static_cast<long>(n)}).value;
    for (const auto& spec : specs) {
        if (spec.k != k) throw std::invalid_argument("conjecture_scan: sampler dimension mismatch");
        ConjectureEntry e;
        e.spec = spec;
        e.report = estimate_hull_prob(spec, n, replicates, seed, 1e-9, threads);
        e.bound = bound;
        e.gap = bound - e.report.estimate;
        out.push_back(std::move(e));
    }
    return out;
}

} // namespace elbound::sim
