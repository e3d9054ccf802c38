#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "bayesassist/beta_belief.hpp"
#include "bayesassist/study.hpp"

namespace bayesassist {

/// Elicited priors needed before a common prior is considered stable.
inline constexpr std::size_t kMinElicitedPriors = 30;

/// Single Beta with the mean and variance of the equal-weight mixture of
/// `components`. Throws InvalidInput on an empty list or a mixture whose
/// variance no Beta can match.
BetaBelief moment_match_mixture(std::span<const BetaBelief> components);

struct BootstrapInterval {
  double lower = 0.0;
  double upper = 0.0;
};

/// Percentile interval of the mean over `resamples` resamples with
/// replacement.
BootstrapInterval bootstrap_mean_interval(std::span<const double> values, std::size_t resamples,
                                          std::uint64_t seed, double level = 0.95);

struct GroupLogKld {
  std::size_t count = 0;
  double mean_log_kld = 0.0;
  BootstrapInterval interval;
  std::vector<double> log_klds;
};

struct AggregateReport {
  BetaBelief common_prior = BetaBelief::uniform();
  BetaBelief common_normative = BetaBelief::uniform();
  GroupLogKld elicited;
  GroupLogKld non_elicited;
};

struct AggregateConfig {
  std::size_t resamples = 10000;
  std::uint64_t seed = 0;
};

/// Elicited participants are scored against the normative posterior of their
/// own prior; non-elicited participants against that of the common prior
/// moment-matched from the elicited priors. Throws InvalidInput with fewer
/// than kMinElicitedPriors elicited records, records without a prior in the
/// elicited list, or records whose dataset does not match `data`.
AggregateReport aggregate_elicitation_analysis(std::span<const TrialRecord> elicited,
                                               std::span<const TrialRecord> non_elicited,
                                               const ObservedData& data,
                                               const AggregateConfig& config);

}  // namespace bayesassist
