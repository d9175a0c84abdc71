#include "elbound/special.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "elbound/errors.hpp"

namespace elbound::special {

double normal_cdf(double z) {
    return 0.5 * std::erfc(-z / std::sqrt(2.0));
}

double log_bessel_i0(double x) {
    x = std::fabs(x);
    if (x < 20.0) {
        // I0(x) = sum_m (x^2/4)^m / (m!)^2
        const double q = 0.25 * x * x;
        double term = 1.0, sum = 1.0;
        for (int m = 1; m < 200; ++m) {
            term *= q / (static_cast<double>(m) * m);
            sum += term;
            if (term < sum * 1e-17) break;
        }
        return std::log(sum);
    }
    // I0(x) ~ e^x / sqrt(2 pi x) * (1 + 1/(8x) + 9/(2!(8x)^2) + ...)
    const double ix = 1.0 / (8.0 * x);
    double term = 1.0, sum = 1.0;
    for (int m = 1; m <= 12; ++m) {
        const double odd = 2.0 * m - 1.0;
        term *= odd * odd * ix / m;
        sum += term;
    }
    return x - 0.5 * std::log(2.0 * M_PI * x) + std::log(sum);
}

namespace {

// Series expansion of P(a, x), effective for x < a + 1.
double gamma_p_series(double a, double x) {
    double ap = a;
    double term = 1.0 / a;
    double sum = term;
    for (int i = 0; i < 1000; ++i) {
        ap += 1.0;
        term *= x / ap;
        sum += term;
        if (std::fabs(term) < std::fabs(sum) * 1e-16)
            return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
    }
    throw NumericalError("incomplete gamma series did not converge");
}

// Continued fraction for Q(a, x) = 1 - P(a, x), effective for x >= a + 1.
// Modified Lentz algorithm.
double gamma_q_cf(double a, double x) {
    const double tiny = std::numeric_limits<double>::min() / 1e-30;
    double b = x + 1.0 - a;
    double c = 1.0 / tiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i < 1000; ++i) {
        const double an = -static_cast<double>(i) * (i - a);
        b += 2.0;
        d = an * d + b;
        if (std::fabs(d) < tiny) d = tiny;
        c = b + an / c;
        if (std::fabs(c) < tiny) c = tiny;
        d = 1.0 / d;
        const double del = d * c;
        h *= del;
        if (std::fabs(del - 1.0) < 1e-16)
            return h * std::exp(-x + a * std::log(x) - std::lgamma(a));
    }
    throw NumericalError("incomplete gamma continued fraction did not converge");
}

} // namespace

double regularized_gamma_p(double a, double x) {
    if (!(a > 0.0) || !(x >= 0.0))
        throw std::invalid_argument("regularized_gamma_p: need a > 0, x >= 0");
    if (x == 0.0) return 0.0;
    if (x < a + 1.0) return gamma_p_series(a, x);
    return 1.0 - gamma_q_cf(a, x);
}

double chisq_cdf(long k, double x) {
    if (k < 1) throw std::invalid_argument("chisq_cdf: k must be >= 1");
    if (x <= 0.0) return 0.0;
    return regularized_gamma_p(0.5 * static_cast<double>(k), 0.5 * x);
}

double chisq_quantile(long k, double level) {
    if (k < 1) throw std::invalid_argument("chisq_quantile: k must be >= 1");
    if (!(level >= 0.0) || level >= 1.0)
        throw std::invalid_argument("chisq_quantile: level must lie in [0, 1)");
    if (level == 0.0) return 0.0;

    // Bracket the root, then bisect with Newton polish. The CDF is strictly
    // increasing, so the bracket is safe.
    double lo = 0.0;
    double hi = static_cast<double>(k) + 10.0;
    while (chisq_cdf(k, hi) < level) {
        lo = hi;
        hi *= 2.0;
        if (hi > 1e9) throw NumericalError("chisq_quantile: bracket expansion failed");
    }
    for (int i = 0; i < 200 && hi - lo > 1e-12 * (1.0 + hi); ++i) {
        const double mid = 0.5 * (lo + hi);
        if (chisq_cdf(k, mid) < level)
            lo = mid;
        else
            hi = mid;
    }
    double x = 0.5 * (lo + hi);
    // Newton refinement against the density.
    const double a = 0.5 * static_cast<double>(k);
    for (int i = 0; i < 8; ++i) {
        const double f = chisq_cdf(k, x) - level;
        const double pdf =
            std::exp((a - 1.0) * std::log(0.5 * x) - 0.5 * x - std::lgamma(a)) * 0.5;
        if (pdf <= 0.0) break;
        const double step = f / pdf;
        const double next = x - step;
        if (next <= lo || next >= hi) break;
        x = next;
        if (std::fabs(step) < 1e-11) break;
    }
    return x;
}

} // namespace elbound::special
