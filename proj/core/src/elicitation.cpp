#include "bayesassist/elicitation.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>

#include <boost/math/tools/roots.hpp>

#include "bayesassist/errors.hpp"
#include "bayesassist/fit.hpp"
#include "bayesassist/interval.hpp"

namespace bayesassist {

namespace {

constexpr double kNoOpTolerance = 1e-9;
// Just above the uniform concentration; below this hdi() reports the uniform
// fallback, so the solver bracket starts here.
constexpr double kSolverFloor = 2.0 + 1e-6;

ElicitationState make_state(double point, double kappa, const TextCatalog& text) {
  ElicitationState s;
  s.point_estimate = point;
  s.kappa = kappa;
  s.fitted = BetaBelief::from_mode_concentration(point, kappa);
  if (kappa <= kMinConcentration) {
    s.lower = 0.0;
    s.upper = 1.0;
  } else {
    const CredibleInterval interval = hdi(s.fitted, kDefaultMass);
    s.lower = std::min(interval.lower, point);
    s.upper = std::max(interval.upper, point);
  }
  s.summary_text = summary_sentence(s.point_estimate, s.lower, s.upper, text);
  return s;
}

double handle_position(double point, double kappa, Handle which) {
  const CredibleInterval interval =
      hdi(BetaBelief::from_mode_concentration(point, kappa), kDefaultMass);
  return which == Handle::lower ? interval.lower : interval.upper;
}

// Distance of the handle from the mode; shrinks as kappa grows.
double handle_gap(double point, double kappa, Handle which) {
  const double pos = handle_position(point, kappa, which);
  return which == Handle::lower ? point - pos : pos - point;
}

// Concentration placing `which` at `target`. Targets wider than any peaked
// Beta reaches give kMinConcentration (uniform); targets tighter than the
// cap allows give kMaxConcentration.
double solve_concentration(double point, Handle which, double target) {
  const double wanted_gap = which == Handle::lower ? point - target : target - point;
  const double gap_floor = handle_gap(point, kSolverFloor, which);
  if (wanted_gap >= gap_floor) return kMinConcentration;
  const double gap_cap = handle_gap(point, kMaxConcentration, which);
  if (wanted_gap <= gap_cap) return kMaxConcentration;

  const auto residual = [&](double log_kappa) {
    return handle_gap(point, std::exp(log_kappa), which) - wanted_gap;
  };
  std::uintmax_t max_iter = 200;
  const auto [a, b] = boost::math::tools::toms748_solve(
      residual, std::log(kSolverFloor), std::log(kMaxConcentration), gap_floor - wanted_gap,
      gap_cap - wanted_gap, boost::math::tools::eps_tolerance<double>(45), max_iter);
  if (max_iter >= 200) throw NotConverged("handle root-finding did not converge");
  return std::clamp(std::exp(0.5 * (a + b)), kMinConcentration, kMaxConcentration);
}

void check_proportion(double x, const char* what) {
  if (!std::isfinite(x) || x < 0.0 || x > 1.0) {
    throw InvalidInput(std::string(what) + " must be a proportion in [0, 1]");
  }
}

}  // namespace

Handle parse_handle(std::string_view text) {
  if (text == "lower") return Handle::lower;
  if (text == "upper") return Handle::upper;
  throw InvalidInput("handle must be 'lower' or 'upper'");
}

std::string_view to_string(Handle handle) {
  return handle == Handle::lower ? "lower" : "upper";
}

std::string summary_sentence(double point_estimate, double lower, double upper,
                             const TextCatalog& text) {
  return text.render("elicitation.summary", {{"lower", format_percent(lower)},
                                             {"upper", format_percent(upper)},
                                             {"point", format_percent(point_estimate)}});
}

ElicitationState begin_elicitation(double point_estimate, const TextCatalog& text) {
  check_proportion(point_estimate, "point estimate");
  return make_state(point_estimate, kMinConcentration, text);
}

ElicitationState restore_elicitation(double point_estimate, double kappa,
                                     const TextCatalog& text) {
  check_proportion(point_estimate, "point estimate");
  if (!std::isfinite(kappa) || kappa < kMinConcentration || kappa > kMaxConcentration) {
    throw InvalidInput("kappa must lie in [2, 1e6]");
  }
  return make_state(point_estimate, kappa, text);
}

ElicitationState drag_handle(const ElicitationState& state, Handle which, double new_value,
                             const TextCatalog& text) {
  check_proportion(new_value, "handle position");
  const double current = which == Handle::lower ? state.lower : state.upper;
  if (std::abs(new_value - current) <= kNoOpTolerance) return state;

  const double point = state.point_estimate;
  double target = std::clamp(std::round(new_value / kDragResolution) * kDragResolution, 0.0, 1.0);

  if (which == Handle::lower) {
    if (point <= 0.0) return state;  // pinned at the boundary mode
    if (new_value < point && target >= point) return make_state(point, kMaxConcentration, text);
    if (target >= point) target = std::max(0.0, point - kHandleClamp);
    if (target <= 0.0) return make_state(point, kMinConcentration, text);
  } else {
    if (point >= 1.0) return state;
    if (new_value > point && target <= point) return make_state(point, kMaxConcentration, text);
    if (target <= point) target = std::min(1.0, point + kHandleClamp);
    if (target >= 1.0) return make_state(point, kMinConcentration, text);
  }

  return make_state(point, solve_concentration(point, which, target), text);
}

}  // namespace bayesassist
