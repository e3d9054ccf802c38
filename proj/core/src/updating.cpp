#include "bayesassist/updating.hpp"

#include <cmath>

#include "bayesassist/errors.hpp"

namespace bayesassist {

BetaBelief likelihood_belief(const ObservedData& data) {
  data.validate();
  return BetaBelief(static_cast<double>(data.successes) + 1.0,
                    static_cast<double>(data.failures()) + 1.0);
}

BetaBelief posterior_update(const BetaBelief& prior, const ObservedData& data) {
  data.validate();
  return BetaBelief(prior.alpha() + static_cast<double>(data.successes),
                    prior.beta() + static_cast<double>(data.failures()));
}

NormalBelief normal_posterior_update(double prior_mean, double prior_precision,
                                     double data_mean, double data_precision) {
  if (!std::isfinite(prior_mean) || !std::isfinite(data_mean)) {
    throw InvalidInput("means must be finite");
  }
  if (!(prior_precision > 0.0) || !(data_precision > 0.0) || !std::isfinite(prior_precision) ||
      !std::isfinite(data_precision)) {
    throw InvalidInput("precisions must be finite and strictly positive");
  }
  const double precision = prior_precision + data_precision;
  return {(prior_precision * prior_mean + data_precision * data_mean) / precision, precision};
}

}  // namespace bayesassist
