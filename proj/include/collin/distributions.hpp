#pragma once

namespace collin {

/// Regularized incomplete beta I_x(a, b), continued-fraction evaluation.
double incomplete_beta(double x, double a, double b);

/// Student-t cumulative distribution function.
double t_cdf(double x, double df);
/// P(|T| >= |t|), evaluated without cancellation for large |t|.
double t_two_sided_p(double t, double df);

/// F cumulative distribution function and its upper tail.
double f_cdf(double x, double d1, double d2);
double f_sf(double x, double d1, double d2);

}  // namespace collin
