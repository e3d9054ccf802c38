#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "bayesassist/beta_belief.hpp"
#include "bayesassist/study.hpp"

namespace bayesassist {

/// Synthetic updating behaviour.
///   bayesian             report the normative posterior
///   ignore_prior         report the likelihood
///   ignore_data          report the prior unchanged
///   overshoot(g)         mode moved past the likelihood mode by g times the
///                        prior-to-likelihood distance, normative concentration
///   variance_inflate(r)  normative mode, variance r times the normative one
struct UpdateRule {
  enum class Kind { bayesian, ignore_prior, ignore_data, overshoot, variance_inflate };
  Kind kind = Kind::bayesian;
  double parameter = 0.0;
};

/// Parses "bayesian", "overshoot(0.5)", "variance_inflate(2)", ...
UpdateRule parse_update_rule(std::string_view text);
std::string to_string(const UpdateRule& rule);

/// The belief a participant following `rule` holds after seeing `data`.
BetaBelief apply_update_rule(const UpdateRule& rule, const BetaBelief& prior,
                             const ObservedData& data);

/// What such a participant enters on the widget: the mode and 95% HDI of
/// `belief` (the full range for a uniform belief).
ElicitedInterval report_belief(const BetaBelief& belief, double mass = kDefaultMass);

struct SimulationConfig {
  UpdateRule rule;
  std::size_t participants = 100;
  Dataset dataset = Dataset::dementia_small;
  Condition condition = Condition::uncertainty_vis;
  std::uint64_t seed = 0;
  double mass = kDefaultMass;
};

/// Synthetic elicitation-condition records. Priors have mode ~ U(0.05, 0.95)
/// and concentration log-uniform on [4, 200]; each is reported as an interval
/// and refitted, and the rule is applied to the refitted prior.
std::vector<TrialRecord> simulate_population(const SimulationConfig& config);

}  // namespace bayesassist
