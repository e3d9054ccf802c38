#pragma once

#include "bayesassist/beta_belief.hpp"
#include "bayesassist/errors.hpp"

namespace bayesassist {

inline constexpr double kMinConcentration = 2.0;
inline constexpr double kMaxConcentration = 1e6;
/// Elicited intervals narrower than this are widened to it before fitting.
inline constexpr double kMinIntervalWidth = 0.002;

/// Thrown when the concentration search does not settle; carries the best
/// candidate seen.
class FitFailure : public Error {
 public:
  FitFailure(const std::string& message, BetaBelief best)
      : Error(ErrorCode::fit_failure, message), best_(best) {}
  const BetaBelief& best_candidate() const noexcept { return best_; }

 private:
  BetaBelief best_;
};

/// Fits a Beta to an elicited interval. The mode is pinned at the point
/// estimate; the concentration kappa in [2, 1e6] minimises the summed squared
/// distance between the Beta's HDI (at the interval's mass) and [lower, upper].
/// A full-width interval yields Beta(1, 1).
BetaBelief fit_beta(const ElicitedInterval& elicited);

/// The interval actually fitted: zero or near-zero widths widened to
/// kMinIntervalWidth around the point, kept inside [0, 1].
ElicitedInterval widen_degenerate_interval(const ElicitedInterval& elicited);

/// Squared endpoint error between hdi(Beta(mode, kappa)) and the interval.
double fit_objective(const ElicitedInterval& elicited, double kappa);

}  // namespace bayesassist
