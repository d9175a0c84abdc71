#ifndef ELBOUND_SPECIAL_HPP
#define ELBOUND_SPECIAL_HPP

namespace elbound::special {

// Standard normal CDF via the complementary error function.
double normal_cdf(double z);

// log I0(x), modified Bessel function of the first kind, order zero.
// Power series for small x, asymptotic expansion for large x.
double log_bessel_i0(double x);

// Regularized lower incomplete gamma P(a, x), a > 0, x >= 0.
double regularized_gamma_p(double a, double x);

// Chi-square CDF with k degrees of freedom.
double chisq_cdf(long k, double x);

// Chi-square quantile with k degrees of freedom, absolute tolerance 1e-10.
// level must lie in [0, 1); level = 0 returns 0.
double chisq_quantile(long k, double level);

} // namespace elbound::special

#endif
