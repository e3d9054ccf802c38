#include "bayesassist/simulation.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <random>

#include <boost/math/tools/roots.hpp>

#include "bayesassist/errors.hpp"
#include "bayesassist/fit.hpp"
#include "bayesassist/interval.hpp"
#include "bayesassist/updating.hpp"

namespace bayesassist {

namespace {

constexpr double kPriorModeLow = 0.05;
constexpr double kPriorModeHigh = 0.95;
constexpr double kPriorKappaLow = 4.0;
constexpr double kPriorKappaHigh = 200.0;
constexpr double kModeMargin = 0.001;

double mode_of(const BetaBelief& b) {
  if (b.has_interior_mode()) return b.mode();
  // Boundary modes of monotone densities.
  if (b.alpha() <= 1.0 && b.beta() > 1.0) return 0.0;
  if (b.beta() <= 1.0 && b.alpha() > 1.0) return 1.0;
  return b.mean();
}

double mode_variance(double mode, double kappa) {
  return BetaBelief::from_mode_concentration(mode, kappa).variance();
}

// Concentration at which the mode-pinned Beta has the requested variance.
double kappa_for_variance(double mode, double target) {
  if (target >= mode_variance(mode, kMinConcentration)) return kMinConcentration;
  if (target <= mode_variance(mode, kMaxConcentration)) return kMaxConcentration;
  const auto f = [&](double log_kappa) {
    return std::log(mode_variance(mode, std::exp(log_kappa))) - std::log(target);
  };
  std::uintmax_t iters = 200;
  const auto [lo, hi] = boost::math::tools::toms748_solve(
      f, std::log(kMinConcentration), std::log(kMaxConcentration),
      boost::math::tools::eps_tolerance<double>(50), iters);
  return std::exp(0.5 * (lo + hi));
}

}  // namespace

UpdateRule parse_update_rule(std::string_view text) {
  const auto open = text.find('(');
  const std::string_view name = text.substr(0, open);
  UpdateRule rule;
  if (name == "bayesian") rule.kind = UpdateRule::Kind::bayesian;
  else if (name == "ignore_prior") rule.kind = UpdateRule::Kind::ignore_prior;
  else if (name == "ignore_data") rule.kind = UpdateRule::Kind::ignore_data;
  else if (name == "overshoot") rule.kind = UpdateRule::Kind::overshoot;
  else if (name == "variance_inflate") rule.kind = UpdateRule::Kind::variance_inflate;
  else throw InvalidInput("unknown update rule '" + std::string(text) + "'");

  const bool parametric =
      rule.kind == UpdateRule::Kind::overshoot || rule.kind == UpdateRule::Kind::variance_inflate;
  if (open == std::string_view::npos) {
    if (parametric) throw InvalidInput("update rule '" + std::string(name) + "' needs a parameter");
    return rule;
  }
  if (!parametric || text.back() != ')') {
    throw InvalidInput("malformed update rule '" + std::string(text) + "'");
  }
  const std::string_view arg = text.substr(open + 1, text.size() - open - 2);
  const auto [end, ec] = std::from_chars(arg.data(), arg.data() + arg.size(), rule.parameter);
  if (ec != std::errc{} || end != arg.data() + arg.size() || !std::isfinite(rule.parameter)) {
    throw InvalidInput("malformed update rule parameter in '" + std::string(text) + "'");
  }
  if (rule.kind == UpdateRule::Kind::variance_inflate && !(rule.parameter > 0.0)) {
    throw InvalidInput("variance_inflate needs a positive ratio");
  }
  return rule;
}

std::string to_string(const UpdateRule& rule) {
  char buf[64];
  switch (rule.kind) {
    case UpdateRule::Kind::bayesian: return "bayesian";
    case UpdateRule::Kind::ignore_prior: return "ignore_prior";
    case UpdateRule::Kind::ignore_data: return "ignore_data";
    case UpdateRule::Kind::overshoot:
      std::snprintf(buf, sizeof buf, "overshoot(%g)", rule.parameter);
      return buf;
    case UpdateRule::Kind::variance_inflate:
      std::snprintf(buf, sizeof buf, "variance_inflate(%g)", rule.parameter);
      return buf;
  }
  return "bayesian";
}

BetaBelief apply_update_rule(const UpdateRule& rule, const BetaBelief& prior,
                             const ObservedData& data) {
  data.validate();
  const BetaBelief normative = posterior_update(prior, data);
  switch (rule.kind) {
    case UpdateRule::Kind::bayesian: return normative;
    case UpdateRule::Kind::ignore_prior: return likelihood_belief(data);
    case UpdateRule::Kind::ignore_data: return prior;
    case UpdateRule::Kind::overshoot: {
      const double target = mode_of(likelihood_belief(data));
      double mode = target + rule.parameter * (target - mode_of(prior));
      mode = std::clamp(mode, kModeMargin, 1.0 - kModeMargin);
      return BetaBelief::from_mode_concentration(mode, normative.concentration());
    }
    case UpdateRule::Kind::variance_inflate: {
      const double mode = mode_of(normative);
      const double kappa = kappa_for_variance(mode, rule.parameter * normative.variance());
      return BetaBelief::from_mode_concentration(mode, kappa);
    }
  }
  return normative;
}

ElicitedInterval report_belief(const BetaBelief& belief, double mass) {
  ElicitedInterval e;
  e.mass = mass;
  e.point_estimate = mode_of(belief);
  if (belief.concentration() <= kMinConcentration + kDegenerateConcentrationSlack) {
    e.lower = 0.0;
    e.upper = 1.0;
    return e;
  }
  const CredibleInterval ci = hdi(belief, mass);
  e.lower = std::min(ci.lower, e.point_estimate);
  e.upper = std::max(ci.upper, e.point_estimate);
  return e;
}

std::vector<TrialRecord> simulate_population(const SimulationConfig& config) {
  if (!is_elicitation_condition(config.condition)) {
    throw InvalidInput("simulated participants need an elicitation condition");
  }
  const ObservedData data = dataset_spec(config.dataset).observed();
  std::mt19937_64 rng(config.seed);
  std::uniform_real_distribution<double> mode_dist(kPriorModeLow, kPriorModeHigh);
  std::uniform_real_distribution<double> log_kappa_dist(std::log(kPriorKappaLow),
                                                        std::log(kPriorKappaHigh));
  std::vector<TrialRecord> out;
  out.reserve(config.participants);
  const int width = std::max<int>(4, static_cast<int>(std::to_string(config.participants).size()));
  for (std::size_t i = 0; i < config.participants; ++i) {
    const double mode = mode_dist(rng);
    const double kappa = std::exp(log_kappa_dist(rng));
    const BetaBelief held = BetaBelief::from_mode_concentration(mode, kappa);

    TrialRecord r;
    char id[32];
    std::snprintf(id, sizeof id, "sim-%0*zu", width, i + 1);
    r.participant_id = id;
    r.condition = config.condition;
    r.dataset = config.dataset;
    r.prior = elicit(report_belief(held, config.mass));
    r.posterior = elicit(report_belief(apply_update_rule(config.rule, r.prior->fitted, data),
                                       config.mass));
    r.trust_rating = 3;
    r.exclusion_answer = ExclusionAnswer::between_30_60;
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace bayesassist
