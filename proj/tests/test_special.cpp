#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "elbound/special.hpp"
#include "support/oracles.hpp"

using namespace elbound;

TEST_CASE("normal cdf reference points") {
    CHECK(special::normal_cdf(0.0) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(special::normal_cdf(1.959963984540054) == doctest::Approx(0.975).epsilon(1e-12));
    CHECK(special::normal_cdf(-1.0) == doctest::Approx(0.15865525393145707).epsilon(1e-12));
    CHECK(special::normal_cdf(6.0) == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("log I0 against series and known values") {
    // I0(0) = 1
    CHECK(special::log_bessel_i0(0.0) == doctest::Approx(0.0).epsilon(1e-15));
    // I0(1) = 1.2660658777520083
    CHECK(std::exp(special::log_bessel_i0(1.0)) == doctest::Approx(1.2660658777520083).epsilon(1e-13));
    // I0(2) = 2.2795853023360673
    CHECK(std::exp(special::log_bessel_i0(2.0)) == doctest::Approx(2.2795853023360673).epsilon(1e-13));
    // series side and asymptotic side of the x = 20 switch, reference values
    // from 30-digit arithmetic
    CHECK(special::log_bessel_i0(15.0) == doctest::Approx(12.7356691094769063).epsilon(1e-12));
    CHECK(special::log_bessel_i0(19.999999) == doctest::Approx(17.5896094535737660).epsilon(1e-12));
    CHECK(special::log_bessel_i0(20.000001) == doctest::Approx(17.5896114029147838).epsilon(1e-12));
    CHECK(special::log_bessel_i0(50.0) == doctest::Approx(47.1275755018718046).epsilon(1e-12));
}

TEST_CASE("chi-square cdf agrees with the recurrence oracle") {
    for (long k : {1L, 2L, 3L, 4L, 5L, 8L, 13L})
        for (double x : {0.5, 1.0, 2.0, 3.84, 7.0, 15.0, 40.0})
            CHECK(special::chisq_cdf(k, x) ==
                  doctest::Approx(oracles::chisq_cdf_recurrence(k, x)).epsilon(1e-12));
}

TEST_CASE("chi-square quantiles") {
    CHECK(special::chisq_quantile(1, 0.95) == doctest::Approx(3.841458820694124).epsilon(1e-11));
    CHECK(special::chisq_quantile(2, 0.90) == doctest::Approx(4.605170185988091).epsilon(1e-11));
    CHECK(special::chisq_quantile(2, 0.90) == doctest::Approx(-2.0 * std::log(0.10)).epsilon(1e-12));
    CHECK(special::chisq_quantile(3, 1e-15) < 1e-4);
    CHECK(special::chisq_quantile(4, 0.0) == 0.0);

    for (long k : {1L, 2L, 3L, 4L, 5L, 6L, 7L, 8L})
        for (double level : {0.05, 0.5, 0.9, 0.95, 0.99, 0.999}) {
            const double q = special::chisq_quantile(k, level);
            const double oracle = oracles::chisq_quantile_bisect(k, level);
            CHECK(q == doctest::Approx(oracle).epsilon(1e-9));
            // round trip through the CDF
            CHECK(special::chisq_cdf(k, q) == doctest::Approx(level).epsilon(1e-10));
        }

    CHECK_THROWS_AS((void)special::chisq_quantile(1, 1.0), std::invalid_argument);
    CHECK_THROWS_AS((void)special::chisq_quantile(0, 0.5), std::invalid_argument);
}
