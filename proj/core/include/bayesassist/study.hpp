#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bayesassist/beta_belief.hpp"

namespace bayesassist {

enum class Condition {
  no_elicit_point,
  no_elicit_uncertainty,
  point_estimate,
  uncertainty_vis,
  analogy,
  posterior_vis,
};

inline constexpr std::array<Condition, 6> kAllConditions{
    Condition::no_elicit_point, Condition::no_elicit_uncertainty, Condition::point_estimate,
    Condition::uncertainty_vis, Condition::analogy,               Condition::posterior_vis};

enum class Dataset { dementia_small, dementia_large, abortion_small, abortion_large };

inline constexpr std::array<Dataset, 4> kAllDatasets{
    Dataset::dementia_small, Dataset::dementia_large, Dataset::abortion_small,
    Dataset::abortion_large};

enum class ExclusionAnswer { below_30, between_30_60, above_60 };

std::string_view to_string(Condition condition);
std::string_view to_string(Dataset dataset);
std::string_view to_string(ExclusionAnswer answer);
Condition parse_condition(std::string_view text);
Dataset parse_dataset(std::string_view text);
ExclusionAnswer parse_exclusion_answer(std::string_view text);

/// Conditions that elicit a prior before showing the data.
bool is_elicitation_condition(Condition condition) noexcept;
/// Conditions that reveal Bayesian assistance after the data.
bool is_assistance_condition(Condition condition) noexcept;
/// Conditions that show the data as a point with sample size only.
bool is_point_condition(Condition condition) noexcept;

/// Fixed stimulus parameters of a dataset.
struct DatasetSpec {
  Dataset dataset;
  std::string_view topic;  // "dementia" or "abortion"
  double proportion;
  std::uint64_t sample_size;

  std::uint64_t successes() const;
  ObservedData observed() const;
};

DatasetSpec dataset_spec(Dataset dataset);

/// An elicited interval together with the Beta fitted to it.
struct ElicitedBelief {
  ElicitedInterval interval;
  BetaBelief fitted = BetaBelief::uniform();
};

/// Fits `interval` with fit_beta().
ElicitedBelief elicit(const ElicitedInterval& interval);

struct Demographics {
  std::string gender;
  std::string education;
  std::string age_band;
};

inline constexpr int kTrustMin = 1;
inline constexpr int kTrustMax = 5;

/// One participant's completed session.
struct TrialRecord {
  std::string participant_id;
  Condition condition = Condition::uncertainty_vis;
  Dataset dataset = Dataset::dementia_small;
  std::optional<ElicitedBelief> prior;
  ElicitedBelief posterior;
  int trust_rating = kTrustMin;
  Demographics demographics;
  ExclusionAnswer exclusion_answer = ExclusionAnswer::between_30_60;
  /// (step name, epoch milliseconds), in protocol order.
  std::vector<std::pair<std::string, std::int64_t>> timestamps;

  /// Both stimuli lie between 30% and 60%, so any other answer excludes.
  bool excluded() const noexcept { return exclusion_answer != ExclusionAnswer::between_30_60; }

  /// Throws InvalidInput if a record invariant is broken (prior presence vs
  /// condition, trust range, interval validity).
  void validate() const;
};

}  // namespace bayesassist
