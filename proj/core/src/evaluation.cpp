#include "bayesassist/evaluation.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include <boost/math/special_functions/digamma.hpp>
#include <boost/math/special_functions/gamma.hpp>
#include <boost/math/special_functions/polygamma.hpp>
#include <boost/math/special_functions/trigamma.hpp>

#include "bayesassist/errors.hpp"
#include "bayesassist/stats.hpp"

namespace bayesassist {

namespace {

constexpr std::array<std::string_view, 5> kLocationNames{
    "near_normative", "overweight_prior", "overweight_data", "updated_away_from_data",
    "overshoot_data"};
constexpr std::array<std::string_view, 5> kVarianceNames{"much_smaller", "smaller", "close",
                                                         "larger", "much_larger"};

double log_beta_function(double a, double b) {
  return boost::math::lgamma(a) + boost::math::lgamma(b) - boost::math::lgamma(a + b);
}

// Below this relative parameter difference the closed form loses to
// cancellation; the cubic expansion is accurate to about its square.
constexpr double kSeriesThreshold = 1e-3;

// KL(p || q) is the Bregman divergence of log B(a, b) between the natural
// parameters; expanded to third order around p.
double kl_series(double a, double b, double da, double db) {
  using boost::math::polygamma;
  using boost::math::trigamma;
  const double s = a + b, ds = da + db;
  const double quadratic = trigamma(a) * da * da + trigamma(b) * db * db - trigamma(s) * ds * ds;
  const double cubic = polygamma(2, a) * da * da * da + polygamma(2, b) * db * db * db -
                       polygamma(2, s) * ds * ds * ds;
  return std::max(0.0, quadratic / 2.0 + cubic / 6.0);
}

// Decision in the frame where the prior mean is at or below the likelihood mean.
LocationType classify_oriented(const LocationMeans& m) {
  if (std::abs(m.elicited - m.normative) <= kNearNormativeWindow) {
    return LocationType::near_normative;
  }
  if (m.likelihood - m.prior <= kMeanTieTolerance) return LocationType::overshoot_data;
  if (m.elicited > m.likelihood + kMeanTieTolerance) return LocationType::overshoot_data;
  if (m.elicited < m.prior - kMeanTieTolerance) return LocationType::updated_away_from_data;
  if (m.elicited < m.normative) return LocationType::overweight_prior;
  return LocationType::overweight_data;
}

}  // namespace

std::string_view to_string(LocationType type) { return kLocationNames[static_cast<int>(type)]; }
std::string_view to_string(VarianceType type) { return kVarianceNames[static_cast<int>(type)]; }

LocationType parse_location_type(std::string_view text) {
  for (std::size_t i = 0; i < kLocationNames.size(); ++i) {
    if (kLocationNames[i] == text) return static_cast<LocationType>(i);
  }
  throw InvalidInput("unknown location type '" + std::string(text) + "'");
}

VarianceType parse_variance_type(std::string_view text) {
  for (std::size_t i = 0; i < kVarianceNames.size(); ++i) {
    if (kVarianceNames[i] == text) return static_cast<VarianceType>(i);
  }
  throw InvalidInput("unknown variance type '" + std::string(text) + "'");
}

double kl_divergence(const BetaBelief& p, const BetaBelief& q) {
  const double a1 = p.alpha(), b1 = p.beta();
  const double a2 = q.alpha(), b2 = q.beta();
  if (p == q) return 0.0;
  const double da = a2 - a1, db = b2 - b1;
  if (std::max(std::abs(da) / a1, std::abs(db) / b1) < kSeriesThreshold) {
    return kl_series(a1, b1, da, db);
  }
  using boost::math::digamma;
  const double kl = log_beta_function(a2, b2) - log_beta_function(a1, b1) +
                    (a1 - a2) * digamma(a1) + (b1 - b2) * digamma(b1) +
                    (a2 - a1 + b2 - b1) * digamma(a1 + b1);
  if (!std::isfinite(kl)) throw InvalidInput("KL divergence is not finite for these Betas");
  return std::max(0.0, kl);
}

DeviationScore deviation_score(const BetaBelief& normative, const BetaBelief& elicited) {
  const double kl = kl_divergence(normative, elicited);
  return {kl, kl > 0.0 ? std::log(kl) : -std::numeric_limits<double>::infinity()};
}

LocationType classify_location(const LocationMeans& means, const LocationMeans& complements) {
  if (means.prior > means.likelihood) return classify_oriented(complements);
  return classify_oriented(means);
}

LocationType classify_location(const LocationMeans& means) {
  return classify_location(means, {1.0 - means.prior, 1.0 - means.likelihood,
                                   1.0 - means.normative, 1.0 - means.elicited});
}

LocationType classify_location(const BetaBelief& prior, const BetaBelief& likelihood,
                               const BetaBelief& elicited_posterior,
                               const BetaBelief& normative_posterior) {
  const LocationMeans means{prior.mean(), likelihood.mean(), normative_posterior.mean(),
                            elicited_posterior.mean()};
  const LocationMeans complements{prior.complement_mean(), likelihood.complement_mean(),
                                  normative_posterior.complement_mean(),
                                  elicited_posterior.complement_mean()};
  return classify_location(means, complements);
}

VarianceType classify_variance_ratio(double ratio) {
  if (!(ratio >= 0.0) || std::isnan(ratio)) throw InvalidInput("variance ratio must be >= 0");
  if (ratio < 0.5) return VarianceType::much_smaller;
  if (ratio < 0.9) return VarianceType::smaller;
  if (ratio <= 1.1) return VarianceType::close;
  if (ratio <= 1.5) return VarianceType::larger;
  return VarianceType::much_larger;
}

VarianceType classify_variance(const BetaBelief& elicited, const BetaBelief& normative) {
  return classify_variance_ratio(elicited.variance() / normative.variance());
}

LogKldSummary summarize_values(std::span<const double> values) {
  if (values.empty()) throw InvalidInput("cannot summarise an empty list of scores");
  std::vector<double> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end());
  LogKldSummary out;
  out.count = sorted.size();
  out.mean = mean_of(sorted);
  out.median = sorted_quantile(sorted, 0.5);
  out.iqr = sorted_quantile(sorted, 0.75) - sorted_quantile(sorted, 0.25);
  return out;
}

LogKldSummary summarize_log_kld(std::span<const DeviationScore> scores) {
  std::vector<double> values;
  values.reserve(scores.size());
  for (const auto& s : scores) values.push_back(s.log_kld);
  return summarize_values(values);
}

}  // namespace bayesassist
