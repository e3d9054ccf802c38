#include "bayesassist/effect_size.hpp"

#include <cmath>

#include "bayesassist/errors.hpp"
#include "bayesassist/stats.hpp"

namespace bayesassist {

double cles_from_d(double d) {
  if (std::isnan(d)) throw InvalidInput("Cohen's d must not be NaN");
  return standard_normal_cdf(d / std::sqrt(2.0));
}

AggregatedDistribution aggregated_log_kld(const RegressionFit& fit, const ConditionCode& code) {
  if (fit.draws.empty()) throw InvalidInput("regression fit has no draws");
  const int cell = code.cell();
  const double n = static_cast<double>(fit.draws.size());
  double sum_mean = 0.0, sum_var = 0.0;
  for (const auto& d : fit.draws) {
    const double mu = d[0] + (cell > 0 ? d[cell] : 0.0);
    const double log_sigma = d[4] + (cell > 0 ? d[4 + cell] : 0.0);
    sum_mean += mu;
    sum_var += std::exp(2.0 * log_sigma);
  }
  const double mean = sum_mean / n;
  double spread = 0.0;
  for (const auto& d : fit.draws) {
    const double mu = d[0] + (cell > 0 ? d[cell] : 0.0);
    spread += (mu - mean) * (mu - mean);
  }
  return {mean, std::sqrt(sum_var / n + spread / n)};
}

EffectSize effect_size(const RegressionFit& fit, const ConditionCode& condition,
                       const ConditionCode& reference) {
  if (!fit.converged) {
    throw NotConverged("effect sizes need a converged regression fit");
  }
  EffectSize out;
  out.reference = aggregated_log_kld(fit, reference);
  out.condition = aggregated_log_kld(fit, condition);
  const double pooled = std::sqrt(
      (out.reference.sd * out.reference.sd + out.condition.sd * out.condition.sd) / 2.0);
  out.cohens_d = (out.reference.mean - out.condition.mean) / pooled;
  out.cles = cles_from_d(out.cohens_d);
  return out;
}

}  // namespace bayesassist
