// Acceptance suite: one criterion per function, one PASS/FAIL line each.
// Exit code is the number of failed criteria.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "elbound/bigint.hpp"
#include "elbound/bounds.hpp"
#include "elbound/circle.hpp"
#include "elbound/el.hpp"
#include "elbound/geometry.hpp"
#include "elbound/rng.hpp"
#include "elbound/samplers.hpp"
#include "elbound/simulation.hpp"
#include "support/oracles.hpp"

using namespace elbound;
using geom::SamplerSpec;

namespace {

struct Check {
    bool ok = true;
    std::string detail;

    void require(bool cond, const std::string& msg) {
        if (!cond && ok) {
            ok = false;
            detail = msg;
        }
    }

    void summary(const std::string& s) {
        if (ok) detail = s;
    }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

// ---- criterion 1: default table matches the published values, < 1 s ------
Check criterion_table() {
    Check c;
    const auto t0 = std::chrono::steady_clock::now();
    const std::string got = bounds::default_bound_table().to_csv();
    const std::string expected =
        "k,r,n,bound\n"
        "1,2,2,0.5000\n1,3,3,0.7500\n1,4,4,0.8750\n1,5,5,0.9375\n"
        "1,6,6,0.9688\n1,7,7,0.9844\n1,8,8,0.9922\n"
        "2,2,4,0.5000\n2,3,6,0.8125\n2,4,8,0.9375\n2,5,10,0.9805\n"
        "2,6,12,0.9941\n2,7,14,0.9983\n2,8,16,0.9995\n"
        "5,2,10,0.5000\n5,3,15,0.9102\n5,4,20,0.9904\n5,5,25,0.9992\n"
        "5,6,30,0.9999\n5,7,35,1.0000\n5,8,40,1.0000\n";
    const double elapsed = seconds_since(t0);
    c.require(got == expected, "table output deviates from the published 21 entries");
    c.require(elapsed < 1.0, "table generation took " + fmt(elapsed) + " s (limit 1 s)");
    c.summary("21/21 cells, " + fmt(elapsed) + " s");
    return c;
}

// ---- criterion 2: exact identities ---------------------------------------
Check criterion_identities() {
    Check c;
    for (long k = 1; k <= 20; ++k) {
        const auto b = bounds::exact_bound({k, 2 * k});
        BigUint twice = b.tail_numerator;
        twice += b.tail_numerator;
        c.require(twice == BigUint::pow2(static_cast<std::uint64_t>(2 * k - 1)),
                  "b(k,2k) != 1/2 exactly at k=" + std::to_string(k));
        c.require(b.value == 0.5, "b(k,2k) float view != 0.5 at k=" + std::to_string(k));
    }
    for (long n = 2; n <= 60; ++n) {
        const auto b1 = bounds::exact_bound({1, n});
        c.require(b1.tail_numerator == BigUint(1), "b(1,n) tail != 1 at n=" + std::to_string(n));
        c.require(b1.value == 1.0 - std::ldexp(1.0, -static_cast<int>(n - 1)),
                  "b(1,n) != 1-2^-(n-1) at n=" + std::to_string(n));
        c.require(std::fabs(circle::symmetric_prob(n) - bounds::exact_bound({2, n}).value) <= 1e-12,
                  "symmetric_prob(n) != b(2,n) at n=" + std::to_string(n));
        c.require(std::fabs(circle::line_prob(0.5, n) - b1.value) <= 1e-12,
                  "line_prob(1/2,n) != b(1,n) at n=" + std::to_string(n));
    }
    c.summary("k=1..20 half points, n=2..60 closed forms");
    return c;
}

// ---- criterion 3: strict monotonicity over 1 <= k < n <= 64, < 5 s -------
Check criterion_monotonicity() {
    Check c;
    const auto t0 = std::chrono::steady_clock::now();
    int pairs = 0;
    for (long k = 1; k < 64; ++k) {
        for (long n = k + 1; n <= 64; ++n) {
            const BigUint tail = bounds::exact_bound({k, n}).tail_numerator;
            BigUint doubled = tail;
            doubled += tail;
            c.require(bounds::exact_bound({k, n + 1}).tail_numerator < doubled,
                      "b(k,n+1) <= b(k,n) at k=" + std::to_string(k) + ", n=" + std::to_string(n));
            c.require(tail < bounds::exact_bound({k + 1, n}).tail_numerator,
                      "b(k,n) <= b(k+1,n) at k=" + std::to_string(k) + ", n=" + std::to_string(n));
            ++pairs;
        }
    }
    const double elapsed = seconds_since(t0);
    c.require(elapsed < 5.0, "monotonicity sweep took " + fmt(elapsed) + " s (limit 5 s)");
    c.summary(std::to_string(pairs) + " (k,n) pairs, exact comparisons, " + fmt(elapsed) + " s");
    return c;
}

// ---- criterion 4: projection invariance, 1e4 replicates each, < 30 s -----
Check criterion_lemma1() {
    Check c;
    const auto t0 = std::chrono::steady_clock::now();
    const struct {
        int k;
        std::size_t n;
        std::vector<double> shift;
    } configs[] = {
        {1, 4, {0.5}},
        {2, 6, {0.5, -0.3}},
        {3, 8, {0.4, 0.4, 0.0}},
        {5, 12, {0.3, 0.0, 0.0, 0.3, -0.2}},
    };
    for (const auto& cfg : configs) {
        const auto mism = sim::verify_projection_invariance(
            SamplerSpec::shifted_gaussian(cfg.shift), cfg.n, 10000, 1040 + cfg.k);
        c.require(mism == 0, "k=" + std::to_string(cfg.k) + ": " + std::to_string(mism) +
                                 " mismatches in 10000 replicates");
    }
    const double elapsed = seconds_since(t0);
    c.require(elapsed < 30.0, "lemma sweep took " + fmt(elapsed) + " s (limit 30 s)");
    c.summary("4 x 10000 replicates, 0 mismatches, " + fmt(elapsed) + " s");
    return c;
}

// ---- criterion 5: MC matches the exact bound for uniform sphere, < 2 min -
Check criterion_mc_vs_formula() {
    Check c;
    const auto t0 = std::chrono::steady_clock::now();
    const std::pair<int, std::size_t> cases[] = {{1, 5}, {2, 6}, {3, 8}, {5, 10}};
    std::string gaps;
    for (const auto& [k, n] : cases) {
        const auto rep =
            sim::estimate_hull_prob(SamplerSpec::uniform_sphere(k), n, 200000, 2000 + k);
        const double want = bounds::exact_bound({k, static_cast<long>(n)}).value;
        const double dev = std::fabs(rep.estimate - want);
        c.require(dev <= 3.0 * rep.std_error,
                  "k=" + std::to_string(k) + ", n=" + std::to_string(n) + ": |" +
                      fmt(rep.estimate) + " - " + fmt(want) + "| > 3se=" + fmt(3 * rep.std_error));
        gaps += (gaps.empty() ? "" : ", ") + std::to_string(k) + ":" + fmt(dev / rep.std_error) + "se";
    }
    const double elapsed = seconds_since(t0);
    c.require(elapsed < 120.0, "MC sweep took " + fmt(elapsed) + " s (limit 120 s)");
    c.summary("N=2e5 each; deviations " + gaps + "; " + fmt(elapsed) + " s");
    return c;
}

// ---- criterion 6: k = 2 analytic branch ----------------------------------
Check criterion_circle_branch() {
    Check c;
    const struct {
        SamplerSpec sampler;
        circle::CircularDensity density;
        const char* tag;
    } configs[] = {
        {SamplerSpec::von_mises(1.0, 0.0), circle::CircularDensity::von_mises(1.0, 0.0), "vm"},
        {SamplerSpec::cardioid(1.0), circle::CircularDensity::cardioid(1.0), "cardioid"},
    };
    for (const auto& cfg : configs) {
        for (long n = 3; n <= 8; ++n) {
            const auto forms = circle::circle_outside_prob_forms(cfg.density, n);
            for (int i = 0; i < 3; ++i)
                for (int j = i + 1; j < 3; ++j)
                    c.require(std::fabs(forms[i] - forms[j]) <= 1e-7,
                              std::string(cfg.tag) + " n=" + std::to_string(n) +
                                  ": integral forms disagree beyond 1e-7");
            const double inside = 1.0 - circle::circle_outside_prob(cfg.density, n);
            c.require(inside < circle::symmetric_prob(n),
                      std::string(cfg.tag) + " n=" + std::to_string(n) +
                          ": inside prob not strictly below the symmetric value");
            const auto rep = sim::estimate_hull_prob(cfg.sampler, static_cast<std::size_t>(n),
                                                     200000, 6000 + n);
            c.require(std::fabs(rep.estimate - inside) <= 3.0 * rep.std_error,
                      std::string(cfg.tag) + " n=" + std::to_string(n) + ": MC " +
                          fmt(rep.estimate) + " vs quadrature " + fmt(inside) + " beyond 3se");
        }
    }
    const double inside3 = 1.0 - circle::circle_outside_prob(circle::CircularDensity::cardioid(1.0), 3);
    const double closed = 0.25 - 1.5 / (M_PI * M_PI);
    c.require(std::fabs(inside3 - closed) <= 1e-7,
              "cardioid n=3 inside prob " + fmt(inside3) + " != closed form " + fmt(closed));
    c.summary("vm(1), cardioid(1), n=3..8, forms within 1e-7, MC within 3se");
    return c;
}

// ---- criterion 7: k = 1 analytic branch ----------------------------------
Check criterion_line_branch() {
    Check c;
    for (double p : {0.1, 0.3, 0.45}) {
        for (long n = 2; n <= 12; ++n) {
            const double lp = circle::line_prob(p, n);
            c.require(lp < circle::line_prob(0.5, n),
                      "p=" + fmt(p) + ", n=" + std::to_string(n) + ": not below the p=1/2 value");
            const auto rep = sim::estimate_hull_prob(SamplerSpec::sign_bernoulli(p),
                                                     static_cast<std::size_t>(n), 200000,
                                                     7000 + n + static_cast<long>(p * 100));
            c.require(std::fabs(rep.estimate - lp) <= 3.0 * rep.std_error,
                      "p=" + fmt(p) + ", n=" + std::to_string(n) + ": MC " + fmt(rep.estimate) +
                          " vs formula " + fmt(lp) + " beyond 3se");
        }
    }
    c.summary("p in {0.1, 0.3, 0.45}, n=2..12, N=2e5 each");
    return c;
}

// ---- criterion 8: conjecture scan at k = 3, < 2 min -----------------------
Check criterion_conjecture() {
    Check c;
    const auto t0 = std::chrono::steady_clock::now();
    const std::vector<SamplerSpec> specs = {
        SamplerSpec::uniform_sphere(3),
        SamplerSpec::shifted_gaussian({0.0, 0.0, 0.0}),
        SamplerSpec::shifted_gaussian({1.0, 0.0, 0.0}),
        SamplerSpec::shifted_gaussian({0.5, 0.5, 0.0}),
        SamplerSpec::shifted_gaussian({0.4, 0.4, 0.4}),
    };
    const auto entries = sim::conjecture_scan(3, 8, specs, 200000, 8080);
    c.require(entries.size() == 5, "expected 5 scan entries");
    c.require(entries[0].bound == 0.7734375, "exact_bound(3,8) != 0.7734375");
    for (std::size_t i = 0; i < entries.size(); ++i)
        c.require(entries[i].gap >= -3.0 * entries[i].report.std_error,
                  entries[i].spec.describe() + " exceeds the bound beyond 3se");
    for (std::size_t i : {std::size_t{0}, std::size_t{1}})
        c.require(std::fabs(entries[i].gap) <= 3.0 * entries[i].report.std_error,
                  entries[i].spec.describe() + " does not attain the bound within 3se");
    for (std::size_t i : {std::size_t{2}, std::size_t{3}, std::size_t{4}})
        c.require(entries[i].gap > 3.0 * entries[i].report.std_error,
                  entries[i].spec.describe() + " not below the bound beyond 3se (gap " +
                      fmt(entries[i].gap) + ")");
    const double elapsed = seconds_since(t0);
    c.require(elapsed < 120.0, "conjecture scan took " + fmt(elapsed) + " s (limit 120 s)");
    c.summary("2 symmetric attain, 3 shifted fall below; " + fmt(elapsed) + " s");
    return c;
}

// ---- criterion 9: EL dual vs brute force ----------------------------------
Check criterion_el_oracle() {
    Check c;
    rng::Stream rng(909090, 0);
    int tested = 0;
    double worst = 0.0;
    while (tested < 200) {
        const std::size_t k = 1 + rng.next_u32() % 2;
        const std::size_t n = k + 1 + rng.next_u32() % (6 - k);
        geom::PointCloud m(n, k);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < k; ++j) m(i, j) = rng.next_gaussian();
        const bool interior =
            k == 1 ? oracles::hull_interior_1d(m) : oracles::hull_interior_2d(m);
        if (!interior) continue;
        const auto oracle = oracles::el_logratio_bruteforce(m);
        if (!oracle) continue;
        const auto ev = el::el_logratio({m});
        c.require(ev.interior(), "dual solver reports OutsideHull on an interior instance");
        if (!ev.interior()) break;
        const double err = std::fabs(ev.log_ratio - *oracle);
        worst = std::max(worst, err);
        c.require(err <= 1e-6, "instance " + std::to_string(tested) + ": |dual - brute force| = " +
                                   fmt(err) + " > 1e-6");
        ++tested;
    }
    const auto probe = el::el_logratio({geom::PointCloud::from_rows({{-1.0}, {1.0}, {1.0}})});
    c.require(probe.interior() &&
                  std::fabs(probe.log_ratio - (-2.0 * std::log(27.0 / 32.0))) <= 1e-9,
              "(-1,1,1) instance does not give -2 log(27/32) within 1e-9");
    c.summary("200 instances, worst |dual - oracle| = " + fmt(worst));
    return c;
}

// ---- criterion 10: coverage sandwich and the r -> infinity limit ----------
Check criterion_sandwich() {
    Check c;
    sim::CoverageProblem prob{SamplerSpec::shifted_gaussian({0.0}), {0.0}, 5};
    const std::uint64_t N = 100000, seed = 1010;
    const auto hull = sim::estimate_coverage(prob, sim::kInfiniteRadius, N, seed);
    const auto calibrated = sim::estimate_coverage(prob, el::chisq_radius(1, 0.95), N, seed);
    c.require(calibrated.hits < hull.hits,
              "coverage at the chi-square radius is not strictly below the hull rate");
    std::uint64_t prev = 0;
    sim::MCReport last;
    for (double r : {5.0, 10.0, 20.0, 40.0}) {
        last = sim::estimate_coverage(prob, r, N, seed);
        c.require(last.hits >= prev, "coverage not nondecreasing at r=" + fmt(r));
        c.require(last.hits <= hull.hits, "coverage exceeds the hull rate at r=" + fmt(r));
        prev = last.hits;
    }
    const double pooled =
        std::sqrt(last.std_error * last.std_error + hull.std_error * hull.std_error);
    c.require(std::fabs(last.estimate - hull.estimate) <= 3.0 * pooled,
              "r=40 coverage does not meet the hull rate within 3 pooled se");
    c.require(std::fabs(hull.estimate - 0.9375) <= 3.0 * hull.std_error,
              "hull rate " + fmt(hull.estimate) + " misses b(1,5)=0.9375 beyond 3se");
    c.summary("hull " + fmt(hull.estimate) + ", chi2 cov " + fmt(calibrated.estimate) +
               ", r=40 gap " + fmt(hull.estimate - last.estimate));
    return c;
}

// ---- criterion 11: extreme regimes of the bound, < 1 s --------------------
Check criterion_degenerate() {
    Check c;
    const auto t0 = std::chrono::steady_clock::now();
    const double lo = bounds::exact_bound({150, 200}).value;
    const double hi = bounds::exact_bound({50, 200}).value;
    const double elapsed = seconds_since(t0);
    c.require(lo < 1e-6, "b(150,200) = " + fmt(lo) + " not below 1e-6");
    c.require(hi > 0.999999, "b(50,200) = " + fmt(hi) + " not above 0.999999");
    c.require(elapsed < 1.0, "evaluation took " + fmt(elapsed) + " s (limit 1 s)");
    c.summary("b(150,200)=" + fmt(lo) + ", b(50,200)=" + fmt(hi) + ", " + fmt(elapsed) + " s");
    return c;
}

} // namespace

int main() {
    const struct {
        const char* name;
        std::function<Check()> run;
    } criteria[] = {
        {"1 table reproduction", criterion_table},
        {"2 exact identities", criterion_identities},
        {"3 monotonicity in n and k", criterion_monotonicity},
        {"4 projection invariance", criterion_lemma1},
        {"5 MC vs exact bound", criterion_mc_vs_formula},
        {"6 circle analytic branch (k=2)", criterion_circle_branch},
        {"7 line analytic branch (k=1)", criterion_line_branch},
        {"8 conjecture scan (k=3)", criterion_conjecture},
        {"9 EL dual vs brute force", criterion_el_oracle},
        {"10 coverage sandwich and limit", criterion_sandwich},
        {"11 degenerate regimes", criterion_degenerate},
    };

    int failures = 0;
    for (const auto& crit : criteria) {
        Check c;
        try {
            c = crit.run();
        } catch (const std::exception& e) {
            c.ok = false;
            c.detail = std::string("exception: ") + e.what();
        }
        std::printf("[%s] criterion %s — %s\n", c.ok ? "PASS" : "FAIL", crit.name,
                    c.detail.c_str());
        std::fflush(stdout);
        if (!c.ok) ++failures;
    }
    if (failures) std::printf("%d criterion(s) failed\n", failures);
    else std::printf("all 11 criteria passed\n");
    return failures;
}
