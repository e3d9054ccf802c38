#pragma once

#include "bayesassist/beta_belief.hpp"

namespace bayesassist {

/// How an interval returned by hdi() was obtained.
enum class IntervalKind {
  /// Narrowest interval; interior peak (alpha > 1 and beta > 1).
  highest_density,
  /// Density is monotone decreasing, so the HDI is [0, q(mass)].
  one_sided_lower,
  /// Density is monotone increasing, so the HDI is [q(1 - mass), 1].
  one_sided_upper,
  /// No single-interval HDI (uniform or U-shaped): equal-tailed interval.
  equal_tailed_fallback,
};

struct CredibleInterval {
  double lower = 0.0;
  double upper = 1.0;
  IntervalKind kind = IntervalKind::highest_density;

  double width() const noexcept { return upper - lower; }
  bool is_fallback() const noexcept { return kind == IntervalKind::equal_tailed_fallback; }
};

/// Concentrations at or below 2 + this are treated as uniform by hdi().
inline constexpr double kDegenerateConcentrationSlack = 1e-9;

/// Interval [q((1 - mass) / 2), q((1 + mass) / 2)].
CredibleInterval equal_tailed_interval(const BetaBelief& belief, double mass = kDefaultMass);

/// Narrowest interval holding `mass` probability. For interior-mode Betas the
/// lower-tail offset t in [0, 1 - mass] is the root of
/// log pdf(q(t)) = log pdf(q(t + mass)); symmetric Betas short-circuit to the
/// equal-tailed interval. See IntervalKind for the remaining shapes.
CredibleInterval hdi(const BetaBelief& belief, double mass = kDefaultMass);

}  // namespace bayesassist
