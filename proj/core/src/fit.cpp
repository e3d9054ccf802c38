#include "bayesassist/fit.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <limits>

#include <boost/math/tools/minima.hpp>

#include "bayesassist/interval.hpp"

namespace bayesassist {

namespace {

constexpr int kScanPoints = 64;
constexpr std::uintmax_t kMaxBrentIterations = 200;

}  // namespace

ElicitedInterval widen_degenerate_interval(const ElicitedInterval& elicited) {
  ElicitedInterval out = elicited;
  if (out.upper - out.lower >= kMinIntervalWidth) return out;
  const double half = 0.5 * kMinIntervalWidth;
  out.lower = out.point_estimate - half;
  out.upper = out.point_estimate + half;
  if (out.lower < 0.0) {
    out.lower = 0.0;
    out.upper = kMinIntervalWidth;
  } else if (out.upper > 1.0) {
    out.upper = 1.0;
    out.lower = 1.0 - kMinIntervalWidth;
  }
  return out;
}

double fit_objective(const ElicitedInterval& elicited, double kappa) {
  const BetaBelief candidate = BetaBelief::from_mode_concentration(elicited.point_estimate, kappa);
  const CredibleInterval interval = hdi(candidate, elicited.mass);
  const double dl = interval.lower - elicited.lower;
  const double du = interval.upper - elicited.upper;
  return dl * dl + du * du;
}

BetaBelief fit_beta(const ElicitedInterval& raw) {
  raw.validate();
  if (raw.is_full_width()) return BetaBelief::uniform();

  const ElicitedInterval elicited = widen_degenerate_interval(raw);
  const double lo = std::log(kMinConcentration);
  const double hi = std::log(kMaxConcentration);
  const auto objective = [&](double log_kappa) {
    return fit_objective(elicited, std::clamp(std::exp(log_kappa), kMinConcentration,
                                              kMaxConcentration));
  };

  // Coarse scan first; the squared error can be flat near kappa = 2, so
  // Brent only runs inside the bracket around the best grid point.
  std::array<double, kScanPoints> values{};
  int best = 0;
  for (int i = 0; i < kScanPoints; ++i) {
    const double x = lo + (hi - lo) * i / (kScanPoints - 1);
    values[i] = objective(x);
    if (values[i] < values[best]) best = i;
  }
  const auto grid = [&](int i) { return lo + (hi - lo) * std::clamp(i, 0, kScanPoints - 1) / (kScanPoints - 1); };
  const double best_kappa = std::exp(grid(best));
  if (!std::isfinite(values[best])) {
    throw FitFailure("fit objective is not finite anywhere on the concentration grid",
                     BetaBelief::from_mode_concentration(elicited.point_estimate, best_kappa));
  }

  std::uintmax_t iterations = kMaxBrentIterations;
  const auto [x, fx] = boost::math::tools::brent_find_minima(
      objective, grid(best - 1), grid(best + 1), std::numeric_limits<double>::digits / 2,
      iterations);
  double kappa = std::clamp(std::exp(x), kMinConcentration, kMaxConcentration);
  if (values[best] < fx) kappa = best_kappa;
  const BetaBelief fitted = BetaBelief::from_mode_concentration(elicited.point_estimate, kappa);
  if (iterations >= kMaxBrentIterations) {
    throw FitFailure("concentration search did not converge", fitted);
  }
  return fitted;
}

}  // namespace bayesassist
