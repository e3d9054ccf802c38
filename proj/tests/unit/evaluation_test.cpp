#include <cmath>
#include <random>
#include <vector>

#include <boost/math/special_functions/trigamma.hpp>
#include <gtest/gtest.h>

#include "bayesassist/errors.hpp"
#include "bayesassist/evaluation.hpp"
#include "oracles.hpp"

using namespace bayesassist;

namespace {

// Interval logic on the raw means, without reflecting into a common frame.
LocationType location_by_intervals(double prior, double likelihood, double normative,
                                   double elicited) {
  if (std::abs(elicited - normative) <= 0.02) return LocationType::near_normative;
  if (prior == likelihood) return LocationType::overshoot_data;
  const bool up = likelihood > prior;
  const bool beyond_likelihood = up ? elicited > likelihood : elicited < likelihood;
  if (beyond_likelihood) return LocationType::overshoot_data;
  const bool against = up ? elicited < prior : elicited > prior;
  if (against) return LocationType::updated_away_from_data;
  // From the prior (inclusive) up to the normative mean.
  const bool short_of_normative = up ? elicited < normative : elicited > normative;
  return short_of_normative ? LocationType::overweight_prior : LocationType::overweight_data;
}

double beta_variance(double a, double b) {
  return a * b / ((a + b) * (a + b) * (a + b + 1.0));
}

}  // namespace

TEST(Kld, MatchesQuadrature) {
  const std::vector<std::array<double, 4>> cases{
      {422, 590, 10, 14}, {2, 10, 3, 3}, {1, 1, 5, 2}, {60, 40, 55, 45},
      {1.5, 30, 2, 20},   {300, 200, 1, 1}, {7, 3, 3, 7}};
  for (const auto& c : cases) {
    const double expected = oracle::kl_divergence(c[0], c[1], c[2], c[3]);
    const double got = kl_divergence(BetaBelief(c[0], c[1]), BetaBelief(c[2], c[3]));
    EXPECT_NEAR(got, expected, 1e-6 * std::max(1.0, expected)) << c[0] << "," << c[1];
  }
}

TEST(Kld, ZeroOnIdentity) {
  EXPECT_EQ(kl_divergence(BetaBelief(422, 590), BetaBelief(422, 590)), 0.0);
  const DeviationScore s = deviation_score(BetaBelief(3, 4), BetaBelief(3, 4));
  EXPECT_EQ(s.kld, 0.0);
  EXPECT_TRUE(std::isinf(s.log_kld) && s.log_kld < 0.0);
}

TEST(Kld, Asymmetric) {
  const BetaBelief p(2, 10), q(10, 2);
  const BetaBelief r(2, 5);
  EXPECT_NE(kl_divergence(p, r), kl_divergence(r, p));
  EXPECT_NEAR(kl_divergence(p, q), kl_divergence(q, p), 1e-9);
}

TEST(Kld, NearIdentityStaysPositiveAndSmooth) {
  const BetaBelief p(422, 590);
  for (double eps : {1e-12, 1e-9, 1e-6, 1e-4}) {
    const BetaBelief q(422 * (1 + eps), 590);
    const double k = kl_divergence(p, q);
    EXPECT_GT(k, 0.0) << eps;
    // Leading term: half the Fisher information times the squared step.
    const double da = 422 * eps;
    const double fisher = boost::math::trigamma(422.0) - boost::math::trigamma(1012.0);
    EXPECT_NEAR(k, 0.5 * fisher * da * da, 1e-3 * 0.5 * fisher * da * da + 1e-30) << eps;
  }
  const double a = kl_divergence(p, BetaBelief(422 * (1 + 9e-4), 590));
  const double b = kl_divergence(p, BetaBelief(422 * (1 + 1.1e-3), 590));
  EXPECT_LT(a, b);
  EXPECT_NEAR(a / b, (9.0 * 9.0) / (11.0 * 11.0), 0.01);
}

TEST(Kld, NonNegativeOverRandomPairs) {
  std::mt19937_64 rng(53);
  std::uniform_real_distribution<double> log_param(std::log(1.0), std::log(5000.0));
  for (int i = 0; i < 10000; ++i) {
    const BetaBelief p(std::exp(log_param(rng)), std::exp(log_param(rng)));
    const BetaBelief q(std::exp(log_param(rng)), std::exp(log_param(rng)));
    const double k = kl_divergence(p, q);
    ASSERT_GE(k, 0.0);
    ASSERT_TRUE(std::isfinite(k));
  }
}

TEST(Kld, DeviationScoreLog) {
  const DeviationScore s = deviation_score(BetaBelief(422, 590), BetaBelief(10, 14));
  EXPECT_NEAR(s.log_kld, std::log(s.kld), 1e-15);
  EXPECT_GT(s.kld, 0.0);
}

TEST(Location, Examples) {
  EXPECT_EQ(classify_location(LocationMeans{0.10, 0.42, 0.40, 0.40}), LocationType::near_normative);
  EXPECT_EQ(classify_location(LocationMeans{0.10, 0.42, 0.40, 0.20}),
            LocationType::overweight_prior);
  EXPECT_EQ(classify_location(LocationMeans{0.10, 0.42, 0.40, 0.50}), LocationType::overshoot_data);
  EXPECT_EQ(location_by_intervals(0.10, 0.42, 0.40, 0.20), LocationType::overweight_prior);
  EXPECT_EQ(location_by_intervals(0.10, 0.42, 0.40, 0.50), LocationType::overshoot_data);
}

TEST(Location, AwayFromDataAndOverweightData) {
  EXPECT_EQ(classify_location(LocationMeans{0.30, 0.60, 0.45, 0.20}),
            LocationType::updated_away_from_data);
  EXPECT_EQ(classify_location(LocationMeans{0.30, 0.60, 0.45, 0.55}),
            LocationType::overweight_data);
}

TEST(Location, ReportingThePriorOverweightsIt) {
  EXPECT_EQ(classify_location(LocationMeans{0.30, 0.60, 0.45, 0.30}),
            LocationType::overweight_prior);
  EXPECT_EQ(classify_location(LocationMeans{0.60, 0.30, 0.45, 0.60}),
            LocationType::overweight_prior);
}

TEST(Location, EqualPriorAndLikelihood) {
  EXPECT_EQ(classify_location(LocationMeans{0.4, 0.4, 0.4, 0.41}), LocationType::near_normative);
  EXPECT_EQ(classify_location(LocationMeans{0.4, 0.4, 0.4, 0.3}), LocationType::overshoot_data);
  EXPECT_EQ(classify_location(LocationMeans{0.4, 0.4, 0.4, 0.5}), LocationType::overshoot_data);
}

TEST(Location, AgreesWithIntervalOracleOnGrid) {
  // Every ordering of four means on a coarse grid that avoids ties within
  // the tolerance.
  const double step = 0.05;
  int compared = 0;
  for (int p = 1; p < 20; ++p) {
    for (int l = 1; l < 20; ++l) {
      for (int n = 1; n < 20; ++n) {
        for (int e = 1; e < 20; ++e) {
          const double pm = p * step + 0.001, lm = l * step + 0.002;
          const double nm = n * step + 0.003, em = e * step + 0.004 + 0.017;
          ASSERT_EQ(classify_location(LocationMeans{pm, lm, nm, em}),
                    location_by_intervals(pm, lm, nm, em))
              << pm << " " << lm << " " << nm << " " << em;
          ++compared;
        }
      }
    }
  }
  EXPECT_EQ(compared, 19 * 19 * 19 * 19);
}

TEST(Location, MirrorSymmetric) {
  std::mt19937_64 rng(59);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 20000; ++i) {
    const LocationMeans m{u(rng), u(rng), u(rng), u(rng)};
    const LocationMeans r{1 - m.prior, 1 - m.likelihood, 1 - m.normative, 1 - m.elicited};
    ASSERT_EQ(classify_location(m, r), classify_location(r, m));
  }
}

TEST(Location, MirrorSymmetricForBetas) {
  std::mt19937_64 rng(61);
  std::uniform_real_distribution<double> par(1.0, 200.0);
  for (int i = 0; i < 5000; ++i) {
    const BetaBelief p(par(rng), par(rng)), l(par(rng), par(rng));
    const BetaBelief e(par(rng), par(rng)), n(par(rng), par(rng));
    ASSERT_EQ(classify_location(p, l, e, n),
              classify_location(BetaBelief(p.beta(), p.alpha()), BetaBelief(l.beta(), l.alpha()),
                                BetaBelief(e.beta(), e.alpha()), BetaBelief(n.beta(), n.alpha())));
  }
}

TEST(Variance, Bins) {
  EXPECT_EQ(classify_variance_ratio(0.49), VarianceType::much_smaller);
  EXPECT_EQ(classify_variance_ratio(0.5), VarianceType::smaller);
  EXPECT_EQ(classify_variance_ratio(0.9), VarianceType::close);
  EXPECT_EQ(classify_variance_ratio(1.1), VarianceType::close);
  EXPECT_EQ(classify_variance_ratio(1.2), VarianceType::larger);
  EXPECT_EQ(classify_variance_ratio(1.5), VarianceType::larger);
  EXPECT_EQ(classify_variance_ratio(1.51), VarianceType::much_larger);
  EXPECT_THROW(classify_variance_ratio(-1.0), InvalidInput);
}

TEST(Variance, WideElicitedPosterior) {
  const double ratio = beta_variance(10, 14) / beta_variance(422, 590);
  EXPECT_GT(ratio, 1.5);
  EXPECT_EQ(classify_variance(BetaBelief(10, 14), BetaBelief(422, 590)), VarianceType::much_larger);
  EXPECT_EQ(classify_variance(BetaBelief(422, 590), BetaBelief(422, 590)), VarianceType::close);
}

TEST(Summary, MeanMedianIqr) {
  const std::vector<double> v{1, 2, 3, 4};
  const LogKldSummary s = summarize_values(v);
  EXPECT_DOUBLE_EQ(s.mean, 2.5);
  EXPECT_DOUBLE_EQ(s.median, 2.5);
  EXPECT_DOUBLE_EQ(s.iqr, 1.5);
  EXPECT_EQ(s.count, 4u);
  EXPECT_THROW(summarize_values(std::vector<double>{}), InvalidInput);
}

TEST(Names, RoundTrip) {
  for (auto t : {LocationType::near_normative, LocationType::overweight_prior,
                 LocationType::overweight_data, LocationType::updated_away_from_data,
                 LocationType::overshoot_data}) {
    EXPECT_EQ(parse_location_type(to_string(t)), t);
  }
  for (auto t : {VarianceType::much_smaller, VarianceType::smaller, VarianceType::close,
                 VarianceType::larger, VarianceType::much_larger}) {
    EXPECT_EQ(parse_variance_type(to_string(t)), t);
  }
  EXPECT_THROW(parse_location_type("nope"), InvalidInput);
}
