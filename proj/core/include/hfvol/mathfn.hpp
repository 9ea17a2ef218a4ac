#pragma once

#include <cstddef>
#include <vector>

namespace hfvol {

/// Standard normal CDF, accurate to full double precision via erfc.
double normal_cdf(double x);

/// Regularized lower incomplete gamma P(a, x); Q(a, x) = 1 - P(a, x).
/// Series for x < a + 1, continued fraction otherwise; ~1e-14 accuracy.
double gamma_p(double a, double x);
double gamma_q(double a, double x);

double chi2_cdf(double x, double dof);
double chi2_sf(double x, double dof);

/// p-quantile of the chi-square distribution, solved to ~1e-12 relative.
double chi2_quantile(double p, double dof);

/// Two-sided p-value for a Pearson correlation via the Fisher z transform.
double correlation_p_value(double r, std::size_t n);

// --- small vector helpers shared across modules --------------------------

double mean(const std::vector<double>& x);
/// Sample variance with the n-1 denominator.
double sample_variance(const std::vector<double>& x);
/// Pearson correlation; returns NaN when either series is constant.
double correlation(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace hfvol
