#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "elbound/el.hpp"
#include "elbound/geometry.hpp"
#include "elbound/rng.hpp"
#include "support/oracles.hpp"

using namespace elbound;
using geom::PointCloud;

TEST_CASE("balanced values give uniform weights and zero log ratio") {
    const el::ELEvaluation ev = el::el_logratio({PointCloud::from_rows({{-1.0}, {0.5}, {0.5}})});
    REQUIRE(ev.interior());
    CHECK(ev.log_ratio == doctest::Approx(0.0).scale(1).epsilon(1e-12));
    for (double w : ev.weights) CHECK(w == doctest::Approx(1.0 / 3).epsilon(1e-9));
    CHECK(ev.iterations == 0);
}

TEST_CASE("all-positive values are outside the hull") {
    const el::ELEvaluation ev = el::el_logratio({PointCloud::from_rows({{1.0}, {2.0}, {3.0}})});
    CHECK(ev.status == el::ELStatus::OutsideHull);
    CHECK(std::isinf(ev.log_ratio));
    CHECK(ev.weights.empty());
}

TEST_CASE("the (-1, 1, 1) instance in closed form") {
    const el::ELEvaluation ev = el::el_logratio({PointCloud::from_rows({{-1.0}, {1.0}, {1.0}})});
    REQUIRE(ev.interior());
    // lambda = 1/3, weights (1/2, 1/4, 1/4), l = -2 log(27/32)
    CHECK(ev.lambda[0] == doctest::Approx(1.0 / 3).epsilon(1e-9));
    CHECK(ev.weights[0] == doctest::Approx(0.5).epsilon(1e-9));
    CHECK(ev.weights[1] == doctest::Approx(0.25).epsilon(1e-9));
    CHECK(ev.weights[2] == doctest::Approx(0.25).epsilon(1e-9));
    CHECK(ev.log_ratio == doctest::Approx(-2.0 * std::log(27.0 / 32.0)).epsilon(1e-9));
}

TEST_CASE("symmetric four-point cross in the plane") {
    const auto m = PointCloud::from_rows({{0.7, 0.0}, {-0.7, 0.0}, {0.0, 1.3}, {0.0, -1.3}});
    const el::ELEvaluation ev = el::el_logratio({m});
    REQUIRE(ev.interior());
    CHECK(ev.log_ratio == doctest::Approx(0.0).scale(1).epsilon(1e-12));
    for (double w : ev.weights) CHECK(w == doctest::Approx(0.25).epsilon(1e-9));
}

TEST_CASE("evaluation invariants on random interior instances") {
    rng::Stream rng(314, 0);
    int tested = 0;
    while (tested < 300) {
        const std::size_t k = 1 + rng.next_u32() % 3;
        const std::size_t n = k + 2 + rng.next_u32() % 6;
        PointCloud m(n, k);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < k; ++j) m(i, j) = rng.next_gaussian();
        const el::ELEvaluation ev = el::el_logratio({m});
        if (!ev.interior()) {
            CHECK(std::isinf(ev.log_ratio));
            continue;
        }
        ++tested;
        CHECK(ev.log_ratio >= 0.0);
        double sum = 0.0;
        std::vector<double> combo(k, 0.0);
        double log_prod = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            CHECK(ev.weights[i] > 0.0);
            sum += ev.weights[i];
            log_prod += std::log(static_cast<double>(n) * ev.weights[i]);
            for (std::size_t j = 0; j < k; ++j) combo[j] += ev.weights[i] * m(i, j);
        }
        CHECK(sum == doctest::Approx(1.0).epsilon(1e-10));
        double resid = 0.0;
        for (double c : combo) resid += c * c;
        CHECK(std::sqrt(resid) <= 1e-8);
        // dual-primal consistency: prod(n w) = exp(-l/2)
        CHECK(log_prod == doctest::Approx(-0.5 * ev.log_ratio).scale(1).epsilon(1e-8));
        // l = -2 sum log(n w_i)
        CHECK(ev.log_ratio == doctest::Approx(-2.0 * log_prod).scale(1).epsilon(1e-8));
    }
}

TEST_CASE("log ratio is zero iff the row mean vanishes") {
    rng::Stream rng(500, 0);
    for (int rep = 0; rep < 50; ++rep) {
        const std::size_t n = 5, k = 2;
        PointCloud m(n, k);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < k; ++j) m(i, j) = rng.next_gaussian();
        // center: mean exactly zero -> l = 0
        for (std::size_t j = 0; j < k; ++j) {
            double mean = 0.0;
            for (std::size_t i = 0; i < n; ++i) mean += m(i, j) / n;
            for (std::size_t i = 0; i < n; ++i) m(i, j) -= mean;
        }
        const auto ev = el::el_logratio({m});
        REQUIRE(ev.interior());
        CHECK(ev.log_ratio <= 1e-12);
        // shift one row so the mean moves off zero -> l > 0
        m(0, 0) += 0.5;
        const auto ev2 = el::el_logratio({m});
        if (ev2.interior()) CHECK(ev2.log_ratio > 1e-6);
    }
}

TEST_CASE("dual solution agrees with the brute-force primal oracle") {
    rng::Stream rng(777, 0);
    int tested = 0;
    while (tested < 200) {
        const std::size_t k = 1 + rng.next_u32() % 2;
        const std::size_t n = k + 1 + rng.next_u32() % (6 - k);
        PointCloud m(n, k);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < k; ++j) m(i, j) = rng.next_gaussian();
        // gate on the independent sign/angle oracles, not on the LP
        const bool interior = k == 1 ? oracles::hull_interior_1d(m) : oracles::hull_interior_2d(m);
        if (!interior) continue;
        const auto oracle = oracles::el_logratio_bruteforce(m);
        if (!oracle) continue;
        const auto ev = el::el_logratio({m});
        REQUIRE(ev.interior());
        CHECK(ev.log_ratio == doctest::Approx(*oracle).scale(1).epsilon(1e-6));
        ++tested;
    }
}

TEST_CASE("linear invariance under invertible maps of the estimating function") {
    rng::Stream rng(901, 0);
    for (int rep = 0; rep < 60; ++rep) {
        const std::size_t k = 1 + rng.next_u32() % 3;
        const std::size_t n = k + 2 + rng.next_u32() % 5;
        PointCloud m(n, k);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < k; ++j) m(i, j) = rng.next_gaussian();
        const auto ev = el::el_logratio({m});
        if (!ev.interior()) continue;

        // random rotation times a diagonal stretch: invertible by construction
        auto q = oracles::random_rotation(k, rng);
        std::vector<double> stretch(k);
        for (auto& s : stretch) s = 0.25 + 3.0 * rng.next_uniform();
        PointCloud am(n, k);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t r = 0; r < k; ++r) {
                double v = 0.0;
                for (std::size_t s = 0; s < k; ++s) v += q[r * k + s] * m(i, s);
                am(i, r) = stretch[r] * v;
            }
        const auto ev2 = el::el_logratio({am});
        REQUIRE(ev2.interior());
        CHECK(ev2.log_ratio == doctest::Approx(ev.log_ratio).scale(1).epsilon(1e-8));
    }
}

TEST_CASE("region membership") {
    const el::ELInput balanced{PointCloud::from_rows({{-1.0}, {0.5}, {0.5}})};
    CHECK(el::in_region(balanced, {1e-9, std::nullopt}));
    const el::ELInput outside{PointCloud::from_rows({{1.0}, {2.0}, {3.0}})};
    CHECK_FALSE(el::in_region(outside, {1e12, std::nullopt}));

    const el::ELInput probe{PointCloud::from_rows({{-1.0}, {1.0}, {1.0}})};
    CHECK_FALSE(el::in_region(probe, {0.3, std::nullopt}));
    CHECK(el::in_region(probe, {0.4, std::nullopt}));

    // monotone membership in the radius
    const double l = el::el_logratio(probe).log_ratio;
    bool prev = false;
    for (double r : {0.01, 0.1, l * 0.999, l * 1.001, 5.0, 100.0}) {
        const bool now = el::in_region(probe, {r, std::nullopt});
        CHECK((!prev || now)); // once true, stays true
        prev = now;
    }

    CHECK_THROWS_AS((void)el::in_region(probe, {0.0, std::nullopt}), std::invalid_argument);
    CHECK_THROWS_AS(
        (void)el::in_region(probe, {std::numeric_limits<double>::infinity(), std::nullopt}),
        std::invalid_argument);
}

TEST_CASE("region membership implies the hull event") {
    rng::Stream rng(123, 0);
    for (int rep = 0; rep < 200; ++rep) {
        const std::size_t n = 4 + rng.next_u32() % 4;
        PointCloud m(n, 2);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < 2; ++j) m(i, j) = rng.next_gaussian() + 0.4;
        if (el::in_region({m}, {5.99, std::nullopt}))
            CHECK(geom::contains_origin(m).interior());
    }
}

TEST_CASE("chisq_radius spot values") {
    CHECK(el::chisq_radius(1, 0.95) == doctest::Approx(3.8415).epsilon(2e-5));
    CHECK(el::chisq_radius(2, 0.90) == doctest::Approx(4.6052).epsilon(2e-5));
    CHECK(el::chisq_radius(3, 1e-12) < 1e-3);
    CHECK_THROWS_AS((void)el::chisq_radius(2, 0.0), std::invalid_argument);
    CHECK_THROWS_AS((void)el::chisq_radius(2, 1.0), std::invalid_argument);
}

TEST_CASE("mean functional") {
    const auto y = PointCloud::from_rows({{1.0, 2.0}, {3.0, 4.0}});
    const double theta[] = {1.0, 1.5};
    const auto m = el::mean_functional(y, theta);
    CHECK(m(0, 0) == 0.0);
    CHECK(m(0, 1) == 0.5);
    CHECK(m(1, 0) == 2.0);
    CHECK(m(1, 1) == 2.5);
    const double bad[] = {1.0};
    CHECK_THROWS_AS((void)el::mean_functional(y, bad), std::invalid_argument);
}
