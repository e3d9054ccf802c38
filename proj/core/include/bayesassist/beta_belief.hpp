#pragma once

#include <cstdint>
#include <string>

namespace bayesassist {

/// Probability mass conventionally used for elicited and displayed intervals.
inline constexpr double kDefaultMass = 0.95;

/// A Beta(alpha, beta) belief about a proportion. Used for priors, for the
/// Beta form of a binomial likelihood, and for posteriors.
///
/// alpha - 1 and beta - 1 read as pseudo-counts of successes and failures, so
/// the concentration alpha + beta acts as an implied sample size.
class BetaBelief {
 public:
  /// Throws InvalidInput unless both parameters are finite and positive.
  BetaBelief(double alpha, double beta);

  /// Beta with the given mode and concentration:
  /// alpha = 1 + mode (kappa - 2), beta = 1 + (1 - mode)(kappa - 2).
  /// Requires mode in [0, 1] and kappa >= 2.
  static BetaBelief from_mode_concentration(double mode, double kappa);

  static BetaBelief uniform() { return BetaBelief(1.0, 1.0); }

  double alpha() const noexcept { return alpha_; }
  double beta() const noexcept { return beta_; }
  double concentration() const noexcept { return alpha_ + beta_; }

  double mean() const noexcept { return alpha_ / (alpha_ + beta_); }
  /// beta / (alpha + beta); computed directly rather than as 1 - mean() so
  /// that reflect() maps it bit-for-bit onto mean().
  double complement_mean() const noexcept { return beta_ / (alpha_ + beta_); }
  double variance() const noexcept;

  /// True when alpha > 1 and beta > 1, i.e. the density has an interior peak.
  bool has_interior_mode() const noexcept { return alpha_ > 1.0 && beta_ > 1.0; }

  /// (alpha - 1) / (alpha + beta - 2). Throws InvalidInput unless
  /// has_interior_mode().
  double mode() const;

  double pdf(double x) const;
  double log_pdf(double x) const;
  double cdf(double x) const;
  double quantile(double p) const;

  /// Beta(beta, alpha): the same belief about 1 - theta.
  BetaBelief reflect() const noexcept { return BetaBelief(beta_, alpha_, Unchecked{}); }

  friend bool operator==(const BetaBelief&, const BetaBelief&) = default;

 private:
  struct Unchecked {};
  BetaBelief(double alpha, double beta, Unchecked) noexcept : alpha_(alpha), beta_(beta) {}

  double alpha_;
  double beta_;
};

/// A sample proportion: `successes` out of `sample_size`.
struct ObservedData {
  std::uint64_t successes = 0;
  std::uint64_t sample_size = 1;
  std::string label;
  std::string source_description;

  /// Throws InvalidInput if sample_size is zero or successes exceeds it.
  void validate() const;
  double proportion() const noexcept {
    return static_cast<double>(successes) / static_cast<double>(sample_size);
  }
  std::uint64_t failures() const noexcept { return sample_size - successes; }
};

ObservedData make_observed_data(std::uint64_t successes, std::uint64_t sample_size,
                                std::string label = {}, std::string source_description = {});

/// round(proportion * sample_size) with halves rounded up.
std::uint64_t round_half_up_count(double proportion, std::uint64_t sample_size);

/// A point estimate with an interval around it, as entered on the elicitation
/// widget. Proportions are decimals in [0, 1].
struct ElicitedInterval {
  double point_estimate = 0.5;
  double lower = 0.0;
  double upper = 1.0;
  double mass = kDefaultMass;

  /// Throws InvalidInput on non-finite values, values outside [0, 1],
  /// lower > point_estimate, point_estimate > upper, or mass outside (0, 1).
  void validate() const;
  bool is_full_width() const noexcept { return lower <= 0.0 && upper >= 1.0; }
};

}  // namespace bayesassist
