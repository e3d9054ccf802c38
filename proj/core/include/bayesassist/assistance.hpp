#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "bayesassist/beta_belief.hpp"
#include "bayesassist/density.hpp"
#include "bayesassist/interval.hpp"
#include "bayesassist/text_catalog.hpp"

namespace bayesassist {

/// Which side carries more information (the larger concentration).
enum class InformationReference { prior_richer, data_richer };

std::string_view to_string(InformationReference reference);

/// Uncertainty analogy comparing the information in a prior with the
/// information in observed data.
struct Analogy {
  InformationReference reference = InformationReference::data_richer;
  /// max(kappa_prior, kappa_data) / min(kappa_prior, kappa_data).
  double multiplier = 1.0;
  std::string display_multiplier;
  std::string sentence;
  std::string explanation;
  double prior_concentration = 2.0;
  double data_concentration = 2.0;
};

/// Predicted-posterior visualisation payload.
struct PosteriorVisPayload {
  BetaBelief posterior = BetaBelief::uniform();
  std::vector<DensityPoint> density_points;
  CredibleInterval interval_95;
  /// Posterior mean.
  double point_estimate = 0.5;
  std::string explanation;
};

/// kappa of the data side: the concentration of likelihood_belief(data),
/// i.e. sample_size + 2.
double data_concentration(const ObservedData& data);

/// Nearest integer for multipliers >= 10, one decimal below that.
std::string format_multiplier(double multiplier);

/// Ties (equal concentrations) report data_richer with multiplier 1 and the
/// equal-information sentence.
Analogy make_analogy(const BetaBelief& prior, const ObservedData& data,
                     const TextCatalog& text = TextCatalog::defaults());

PosteriorVisPayload make_posterior_vis(const BetaBelief& prior, const ObservedData& data,
                                       const TextCatalog& text = TextCatalog::defaults());

}  // namespace bayesassist
