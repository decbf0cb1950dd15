#pragma once

namespace ccorder {

/// Largest degrees-of-freedom value the chi-square routines accept.
/// Covers 2*(r_max)^2 for any rank cap up to 512.
inline constexpr int kMaxChi2Dof = 524288;

/// Regularized lower incomplete gamma P(a, x) for a > 0, x >= 0.
/// Series expansion below the a+1 crossover, continued fraction above it.
double regularized_gamma_p(double a, double x);

/// Natural log of the gamma function for positive arguments (Lanczos).
double log_gamma(double z);

/**
 * Chi-square CDF with nu degrees of freedom.
 *
 * @throws ArgumentError for x < 0 or nu outside [1, kMaxChi2Dof].
 */
double chi2_cdf(double x, int nu);

/**
 * Chi-square quantile (inverse CDF): the x with chi2_cdf(x, nu) = q.
 *
 * Newton iteration from a Wilson-Hilferty seed, with a bisection bracket
 * as safety net; the result reproduces q through chi2_cdf to 1e-9.
 *
 * @throws ArgumentError for q outside (0,1) or nu outside [1, kMaxChi2Dof].
 */
double chi2_quantile(double q, int nu);

} // namespace ccorder
