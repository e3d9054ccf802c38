#include "bayesassist/study.hpp"

#include <string>

#include "bayesassist/errors.hpp"
#include "bayesassist/fit.hpp"

namespace bayesassist {

namespace {

constexpr std::array<std::string_view, 6> kConditionNames{
    "no_elicit_point", "no_elicit_uncertainty", "point_estimate",
    "uncertainty_vis", "analogy",               "posterior_vis"};
constexpr std::array<std::string_view, 4> kDatasetNames{"dementia_small", "dementia_large",
                                                        "abortion_small", "abortion_large"};
constexpr std::array<std::string_view, 3> kExclusionNames{"below_30", "between_30_60",
                                                          "above_60"};

template <typename Enum, std::size_t N>
Enum parse_enum(const std::array<std::string_view, N>& names, std::string_view text,
                const char* what) {
  for (std::size_t i = 0; i < N; ++i) {
    if (names[i] == text) return static_cast<Enum>(i);
  }
  throw InvalidInput(std::string("unknown ") + what + " '" + std::string(text) + "'");
}

constexpr double kDementiaProportion = 0.42;
constexpr double kAbortionProportion = 0.37;
constexpr std::uint64_t kSmallSample = 158;
constexpr std::uint64_t kLargeSample = 5208;

}  // namespace

std::string_view to_string(Condition c) { return kConditionNames[static_cast<int>(c)]; }
std::string_view to_string(Dataset d) { return kDatasetNames[static_cast<int>(d)]; }
std::string_view to_string(ExclusionAnswer a) { return kExclusionNames[static_cast<int>(a)]; }

Condition parse_condition(std::string_view text) {
  return parse_enum<Condition>(kConditionNames, text, "condition");
}
Dataset parse_dataset(std::string_view text) {
  return parse_enum<Dataset>(kDatasetNames, text, "dataset");
}
ExclusionAnswer parse_exclusion_answer(std::string_view text) {
  return parse_enum<ExclusionAnswer>(kExclusionNames, text, "exclusion answer");
}

bool is_elicitation_condition(Condition c) noexcept {
  return c != Condition::no_elicit_point && c != Condition::no_elicit_uncertainty;
}

bool is_assistance_condition(Condition c) noexcept {
  return c == Condition::analogy || c == Condition::posterior_vis;
}

bool is_point_condition(Condition c) noexcept {
  return c == Condition::no_elicit_point || c == Condition::point_estimate;
}

std::uint64_t DatasetSpec::successes() const {
  return round_half_up_count(proportion, sample_size);
}

ObservedData DatasetSpec::observed() const {
  return make_observed_data(successes(), sample_size, std::string(to_string(dataset)),
                            std::string(topic));
}

DatasetSpec dataset_spec(Dataset dataset) {
  switch (dataset) {
    case Dataset::dementia_small:
      return {dataset, "dementia", kDementiaProportion, kSmallSample};
    case Dataset::dementia_large:
      return {dataset, "dementia", kDementiaProportion, kLargeSample};
    case Dataset::abortion_small:
      return {dataset, "abortion", kAbortionProportion, kSmallSample};
    case Dataset::abortion_large:
      return {dataset, "abortion", kAbortionProportion, kLargeSample};
  }
  throw InvalidInput("unknown dataset");
}

ElicitedBelief elicit(const ElicitedInterval& interval) {
  return {interval, fit_beta(interval)};
}

void TrialRecord::validate() const {
  if (participant_id.empty()) throw InvalidInput("participant_id must not be empty");
  if (prior.has_value() != is_elicitation_condition(condition)) {
    throw InvalidInput("record " + participant_id + ": prior must be present exactly in "
                       "elicitation conditions (condition " + std::string(to_string(condition)) +
                       ")");
  }
  if (prior) prior->interval.validate();
  posterior.interval.validate();
  if (trust_rating < kTrustMin || trust_rating > kTrustMax) {
    throw InvalidInput("record " + participant_id + ": trust rating must be 1-5");
  }
}

}  // namespace bayesassist
