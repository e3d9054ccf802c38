#include "bayesassist/beta_belief.hpp"

#include <cmath>
#include <limits>

#include <boost/math/special_functions/beta.hpp>
#include <boost/math/special_functions/gamma.hpp>

#include "bayesassist/errors.hpp"

namespace bayesassist {

namespace {

bool is_proportion(double x) { return std::isfinite(x) && x >= 0.0 && x <= 1.0; }

std::string fmt(double x) { return std::to_string(x); }

}  // namespace

BetaBelief::BetaBelief(double alpha, double beta) : alpha_(alpha), beta_(beta) {
  if (!std::isfinite(alpha) || !std::isfinite(beta) || alpha <= 0.0 || beta <= 0.0) {
    throw InvalidInput("Beta parameters must be finite and positive, got alpha=" + fmt(alpha) +
                       " beta=" + fmt(beta));
  }
}

BetaBelief BetaBelief::from_mode_concentration(double mode, double kappa) {
  if (!is_proportion(mode)) throw InvalidInput("mode must lie in [0, 1], got " + fmt(mode));
  if (!std::isfinite(kappa) || kappa < 2.0) {
    throw InvalidInput("concentration must be finite and >= 2, got " + fmt(kappa));
  }
  const double excess = kappa - 2.0;
  return BetaBelief(1.0 + mode * excess, 1.0 + (1.0 - mode) * excess);
}

double BetaBelief::variance() const noexcept {
  const double k = alpha_ + beta_;
  return alpha_ * beta_ / (k * k * (k + 1.0));
}

double BetaBelief::mode() const {
  if (!has_interior_mode()) {
    throw InvalidInput("mode is only defined for alpha > 1 and beta > 1");
  }
  return (alpha_ - 1.0) / (alpha_ + beta_ - 2.0);
}

double BetaBelief::log_pdf(double x) const {
  if (!(x >= 0.0 && x <= 1.0)) return -std::numeric_limits<double>::infinity();
  const double log_norm = boost::math::lgamma(alpha_ + beta_) - boost::math::lgamma(alpha_) -
                          boost::math::lgamma(beta_);
  double result = log_norm;
  if (alpha_ != 1.0) {
    if (x == 0.0) return alpha_ > 1.0 ? -std::numeric_limits<double>::infinity()
                                      : std::numeric_limits<double>::infinity();
    result += (alpha_ - 1.0) * std::log(x);
  }
  if (beta_ != 1.0) {
    if (x == 1.0) return beta_ > 1.0 ? -std::numeric_limits<double>::infinity()
                                     : std::numeric_limits<double>::infinity();
    result += (beta_ - 1.0) * std::log1p(-x);
  }
  return result;
}

double BetaBelief::pdf(double x) const { return std::exp(log_pdf(x)); }

double BetaBelief::cdf(double x) const {
  if (x <= 0.0) return 0.0;
  if (x >= 1.0) return 1.0;
  return boost::math::ibeta(alpha_, beta_, x);
}

double BetaBelief::quantile(double p) const {
  if (!(p >= 0.0 && p <= 1.0)) throw InvalidInput("quantile probability must lie in [0, 1]");
  if (p == 0.0) return 0.0;
  if (p == 1.0) return 1.0;
  return boost::math::ibeta_inv(alpha_, beta_, p);
}

void ObservedData::validate() const {
  if (sample_size == 0) throw InvalidInput("sample_size must be positive");
  if (successes > sample_size) {
    throw InvalidInput("successes (" + std::to_string(successes) + ") exceed sample_size (" +
                       std::to_string(sample_size) + ")");
  }
}

ObservedData make_observed_data(std::uint64_t successes, std::uint64_t sample_size,
                                std::string label, std::string source_description) {
  ObservedData data{successes, sample_size, std::move(label), std::move(source_description)};
  data.validate();
  return data;
}

std::uint64_t round_half_up_count(double proportion, std::uint64_t sample_size) {
  if (!is_proportion(proportion)) throw InvalidInput("proportion must lie in [0, 1]");
  return static_cast<std::uint64_t>(
      std::floor(proportion * static_cast<double>(sample_size) + 0.5));
}

void ElicitedInterval::validate() const {
  if (!is_proportion(point_estimate) || !is_proportion(lower) || !is_proportion(upper)) {
    throw InvalidInput("elicited values must be finite proportions in [0, 1]");
  }
  if (lower > point_estimate || point_estimate > upper) {
    throw InvalidInput("elicited interval must satisfy lower <= point_estimate <= upper, got [" +
                       fmt(lower) + ", " + fmt(point_estimate) + ", " + fmt(upper) + "]");
  }
  if (!(mass > 0.0 && mass < 1.0)) throw InvalidInput("interval mass must lie in (0, 1)");
}

}  // namespace bayesassist
