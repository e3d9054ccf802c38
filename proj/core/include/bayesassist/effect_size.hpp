#pragma once

#include "bayesassist/regression.hpp"

namespace bayesassist {

/// Normal summary of a condition's aggregated log-KLD posterior predictive.
struct AggregatedDistribution {
  double mean = 0.0;
  double sd = 1.0;
};

struct EffectSize {
  /// (mean_reference - mean_condition) / pooled SD. Positive when the
  /// condition has lower log KLD than the reference.
  double cohens_d = 0.0;
  double cles = 0.5;
  AggregatedDistribution reference;
  AggregatedDistribution condition;
};

/// Phi(d / sqrt(2)): probability that a draw from the reference exceeds a
/// draw from the condition when both are normal with equal SD.
double cles_from_d(double d);

/// Mixes Normal(mu_int + mu_c, exp(sigma_int + sigma_c)) over the posterior
/// draws and returns the mixture's mean and SD.
AggregatedDistribution aggregated_log_kld(const RegressionFit& fit, const ConditionCode& code);

/// Throws NotConverged unless fit.converged.
EffectSize effect_size(const RegressionFit& fit, const ConditionCode& condition,
                       const ConditionCode& reference = ConditionCode::reference());

}  // namespace bayesassist
