#pragma once

#include <span>
#include <string_view>

#include "bayesassist/beta_belief.hpp"

namespace bayesassist {

enum class LocationType {
  near_normative,
  overweight_prior,
  overweight_data,
  updated_away_from_data,
  overshoot_data,
};

enum class VarianceType { much_smaller, smaller, close, larger, much_larger };

std::string_view to_string(LocationType type);
std::string_view to_string(VarianceType type);
LocationType parse_location_type(std::string_view text);
VarianceType parse_variance_type(std::string_view text);

/// Half-width of the near-normative window, on the proportion scale.
inline constexpr double kNearNormativeWindow = 0.02;
/// Means closer than this count as equal when compared with the prior or
/// likelihood mean, so fitting noise cannot push a belief past either.
inline constexpr double kMeanTieTolerance = 1e-6;

struct UpdateClassification {
  LocationType location_type = LocationType::near_normative;
  VarianceType variance_type = VarianceType::close;
};

struct DeviationScore {
  double kld = 0.0;
  /// Natural log of kld; -infinity when kld is exactly zero.
  double log_kld = 0.0;
};

/// KL(p || q) for Betas in closed form (log-Beta and digamma terms). The
/// evaluation convention is p = normative posterior, q = elicited posterior.
/// Rounding noise below zero is clamped to 0. Throws InvalidInput if the
/// result is not finite.
double kl_divergence(const BetaBelief& p, const BetaBelief& q);

DeviationScore deviation_score(const BetaBelief& normative, const BetaBelief& elicited);

/// Means of the four beliefs involved in a location classification.
struct LocationMeans {
  double prior = 0.0;
  double likelihood = 0.0;
  double normative = 0.0;
  double elicited = 0.0;
};

/// Classifies assuming nothing about orientation. `complements` must hold
/// 1 - each mean; when the prior lies above the likelihood the decision is
/// made on the complements so reflected inputs classify identically.
LocationType classify_location(const LocationMeans& means, const LocationMeans& complements);

/// Convenience overload: complements computed as 1 - mean.
LocationType classify_location(const LocationMeans& means);

LocationType classify_location(const BetaBelief& prior, const BetaBelief& likelihood,
                               const BetaBelief& elicited_posterior,
                               const BetaBelief& normative_posterior);

/// Bins r = var(elicited) / var(normative): r < 0.5, [0.5, 0.9), [0.9, 1.1],
/// (1.1, 1.5], r > 1.5.
VarianceType classify_variance_ratio(double ratio);
VarianceType classify_variance(const BetaBelief& elicited, const BetaBelief& normative);

struct LogKldSummary {
  double mean = 0.0;
  double median = 0.0;
  /// Q3 - Q1 with linearly interpolated quartiles.
  double iqr = 0.0;
  std::size_t count = 0;
};

/// Throws InvalidInput on an empty list.
LogKldSummary summarize_log_kld(std::span<const DeviationScore> scores);
LogKldSummary summarize_values(std::span<const double> log_klds);

}  // namespace bayesassist
