#pragma once

#include <functional>

// Test-only reference computations. None of these call into the library's
// fitting, interval or divergence code.
namespace oracle {

/// log of the Beta(a, b) density, from std::lgamma.
double beta_log_pdf(double a, double b, double x);

/// Integral of f over [lo, hi] by tanh-sinh quadrature, split at the given
/// interior points.
double integrate(const std::function<double(double)>& f, double lo, double hi,
                 std::initializer_list<double> splits = {});

/// CDF by quadrature of the density.
double beta_cdf(double a, double b, double x);

/// Quantile by bisection on beta_cdf.
double beta_quantile(double a, double b, double p);

/// KL(p || q) by quadrature of p (q/p - 1 - log(q/p)).
double kl_divergence(double a1, double b1, double a2, double b2);

struct Interval {
  double lower;
  double upper;
};

/// Highest density interval of a unimodal Beta as a level set: bisection on
/// the density level h, each side of the mode found by bisection on
/// pdf(x) = h, and mass from the regularised incomplete beta.
Interval beta_hdi(double a, double b, double mass);

/// Beta with mode `mode` and concentration `kappa`.
void mode_concentration(double mode, double kappa, double& a, double& b);

/// Concentration whose HDI puts the lower endpoint at `lower`, by bisection
/// on log kappa.
double kappa_for_lower_endpoint(double mode, double lower, double mass);

/// Concentration minimising the summed squared HDI endpoint error over a
/// dense log grid, refined by a second grid around the best point.
double kappa_by_sweep(double mode, double lower, double upper, double mass);

}  // namespace oracle
