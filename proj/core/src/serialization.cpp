#include "bayesassist/serialization.hpp"

#include <cmath>
#include <string>

namespace bayesassist {

namespace {

const Json& require(const Json& j, std::string_view key) {
  if (!j.is_object()) throw InvalidInput("expected a JSON object");
  const auto it = j.find(key);
  if (it == j.end()) throw InvalidInput("missing field '" + std::string(key) + "'");
  return *it;
}

}  // namespace

std::string_view to_string(IntervalKind kind) {
  switch (kind) {
    case IntervalKind::highest_density: return "highest_density";
    case IntervalKind::one_sided_lower: return "one_sided_lower";
    case IntervalKind::one_sided_upper: return "one_sided_upper";
    case IntervalKind::equal_tailed_fallback: return "equal_tailed_fallback";
  }
  return "highest_density";
}

double require_number(const Json& j, std::string_view key) {
  const Json& v = require(j, key);
  if (!v.is_number()) throw InvalidInput("field '" + std::string(key) + "' must be a number");
  return v.get<double>();
}

std::string require_string(const Json& j, std::string_view key) {
  const Json& v = require(j, key);
  if (!v.is_string()) throw InvalidInput("field '" + std::string(key) + "' must be a string");
  return v.get<std::string>();
}

std::uint64_t require_count(const Json& j, std::string_view key) {
  const Json& v = require(j, key);
  if (!v.is_number_integer() || (!v.is_number_unsigned() && v.get<std::int64_t>() < 0)) {
    throw InvalidInput("field '" + std::string(key) + "' must be a non-negative integer");
  }
  return v.get<std::uint64_t>();
}

void to_json(Json& j, const BetaBelief& b) { j = Json{{"alpha", b.alpha()}, {"beta", b.beta()}}; }

void to_json(Json& j, const ObservedData& d) {
  j = Json{{"successes", d.successes},
           {"sample_size", d.sample_size},
           {"label", d.label},
           {"source_description", d.source_description}};
}

void to_json(Json& j, const ElicitedInterval& e) {
  j = Json{{"point_estimate", e.point_estimate},
           {"lower", e.lower},
           {"upper", e.upper},
           {"mass", e.mass}};
}

void to_json(Json& j, const CredibleInterval& c) {
  j = Json{{"lower", c.lower}, {"upper", c.upper}, {"kind", to_string(c.kind)}};
}

void to_json(Json& j, const DensityPoint& p) { j = Json{{"x", p.x}, {"density", p.density}}; }

void to_json(Json& j, const ElicitationState& s) {
  j = Json{{"point_estimate", s.point_estimate},
           {"lower", s.lower},
           {"upper", s.upper},
           {"kappa", s.kappa},
           {"fitted", s.fitted},
           {"summary_text", s.summary_text}};
}

void to_json(Json& j, const Analogy& a) {
  j = Json{{"reference", to_string(a.reference)},
           {"multiplier", a.multiplier},
           {"display_multiplier", a.display_multiplier},
           {"sentence", a.sentence},
           {"explanation", a.explanation},
           {"prior_concentration", a.prior_concentration},
           {"data_concentration", a.data_concentration}};
}

void to_json(Json& j, const PosteriorVisPayload& p) {
  j = Json{{"posterior", p.posterior},
           {"density_points", p.density_points},
           {"interval_95", p.interval_95},
           {"point_estimate", p.point_estimate},
           {"explanation", p.explanation}};
}

void to_json(Json& j, const DeviationScore& s) {
  j = Json{{"kld", s.kld}};
  if (std::isfinite(s.log_kld)) j["log_kld"] = s.log_kld;
  else j["log_kld"] = nullptr;
}

void to_json(Json& j, const CoefficientSummary& c) {
  j = Json{{"name", c.name}, {"mean", c.mean},   {"sd", c.sd},  {"lower95", c.lower},
           {"upper95", c.upper}, {"rhat", c.rhat}, {"ess", c.ess}};
}

void to_json(Json& j, const RegressionFit& f) {
  Json acceptance = Json::array();
  for (const auto& row : f.acceptance) acceptance.push_back(row);
  j = Json{{"converged", f.converged},
           {"chains", f.chains},
           {"draws_per_chain", f.draws_per_chain},
           {"observations", f.observations},
           {"coefficients", f.coefficients},
           {"acceptance", acceptance}};
}

BetaBelief beta_from_json(const Json& j) {
  return BetaBelief(require_number(j, "alpha"), require_number(j, "beta"));
}

ObservedData observed_from_json(const Json& j) {
  ObservedData d;
  d.successes = require_count(j, "successes");
  d.sample_size = require_count(j, "sample_size");
  if (j.contains("label") && j["label"].is_string()) d.label = j["label"].get<std::string>();
  if (j.contains("source_description") && j["source_description"].is_string()) {
    d.source_description = j["source_description"].get<std::string>();
  }
  d.validate();
  return d;
}

ElicitedInterval interval_from_json(const Json& j) {
  ElicitedInterval e;
  e.point_estimate = require_number(j, "point_estimate");
  e.lower = require_number(j, "lower");
  e.upper = require_number(j, "upper");
  if (j.contains("mass")) e.mass = require_number(j, "mass");
  e.validate();
  return e;
}

Json elicitation_response(const ElicitationState& state) {
  Json j = state;
  j["density_points"] = density_on_unit_grid(state.fitted);
  return j;
}

Json error_json(std::string_view code, std::string_view message) {
  return Json{{"error", {{"code", code}, {"message", message}}}};
}

}  // namespace bayesassist
