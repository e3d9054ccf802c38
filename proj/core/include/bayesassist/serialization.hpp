#pragma once

#include <nlohmann/json.hpp>

#include "bayesassist/assistance.hpp"
#include "bayesassist/beta_belief.hpp"
#include "bayesassist/density.hpp"
#include "bayesassist/elicitation.hpp"
#include "bayesassist/errors.hpp"
#include "bayesassist/evaluation.hpp"
#include "bayesassist/interval.hpp"
#include "bayesassist/regression.hpp"

// JSON wire forms. Proportions are decimals in [0, 1]. Parsing functions
// throw InvalidInput on missing or mistyped fields.
namespace bayesassist {

using Json = nlohmann::json;

std::string_view to_string(IntervalKind kind);

void to_json(Json& j, const BetaBelief& b);
void to_json(Json& j, const ObservedData& d);
void to_json(Json& j, const ElicitedInterval& e);
void to_json(Json& j, const CredibleInterval& c);
void to_json(Json& j, const DensityPoint& p);
void to_json(Json& j, const ElicitationState& s);
void to_json(Json& j, const Analogy& a);
void to_json(Json& j, const PosteriorVisPayload& p);
void to_json(Json& j, const DeviationScore& s);
void to_json(Json& j, const CoefficientSummary& c);
void to_json(Json& j, const RegressionFit& f);

BetaBelief beta_from_json(const Json& j);
ObservedData observed_from_json(const Json& j);
ElicitedInterval interval_from_json(const Json& j);

/// Elicitation state plus its 257-point density on [0, 1], as returned by the
/// drag endpoint.
Json elicitation_response(const ElicitationState& state);

/// {"error": {"code": ..., "message": ...}}
Json error_json(std::string_view code, std::string_view message);

/// Field access with InvalidInput on absence or wrong type.
double require_number(const Json& j, std::string_view key);
std::string require_string(const Json& j, std::string_view key);
std::uint64_t require_count(const Json& j, std::string_view key);

}  // namespace bayesassist
