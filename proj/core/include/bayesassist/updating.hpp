#pragma once

#include "bayesassist/beta_belief.hpp"

namespace bayesassist {

/// Beta form of the binomial likelihood: Beta(s + 1, n - s + 1).
BetaBelief likelihood_belief(const ObservedData& data);

/// Normative (conjugate) posterior: Beta(alpha + s, beta + n - s).
BetaBelief posterior_update(const BetaBelief& prior, const ObservedData& data);

struct NormalBelief {
  double mean = 0.0;
  double precision = 1.0;
};

/// Precision-weighted average of prior and data means; precisions add.
/// Throws InvalidInput if either precision is not strictly positive.
NormalBelief normal_posterior_update(double prior_mean, double prior_precision,
                                     double data_mean, double data_precision);

}  // namespace bayesassist
