#pragma once

// Distribution functions used for every p-value in the toolkit.

namespace tsecon {

/// Regularized lower incomplete gamma P(a, x).
double regularized_gamma_p(double a, double x);
/// Regularized upper incomplete gamma Q(a, x) = 1 − P(a, x), computed directly.
double regularized_gamma_q(double a, double x);
/// Regularized incomplete beta I_x(a, b).
double regularized_beta(double x, double a, double b);

/// P(χ²_df > x).
double chi2_sf(double x, double df);
/// P(F_{df1,df2} > x).
double f_sf(double x, double df1, double df2);
/// P(T_df > x) for Student's t.
double t_sf(double x, double df);
double normal_cdf(double x);
/// Inverse of normal_cdf, accurate to about 1e-9 relative on (0, 1).
double normal_quantile(double p);

}  // namespace tsecon
