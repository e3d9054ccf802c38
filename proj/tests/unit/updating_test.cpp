#include <random>

#include <gtest/gtest.h>

#include "bayesassist/errors.hpp"
#include "bayesassist/fit.hpp"
#include "bayesassist/interval.hpp"
#include "bayesassist/updating.hpp"

using namespace bayesassist;

TEST(Likelihood, BetaFormOfCounts) {
  EXPECT_EQ(likelihood_belief(make_observed_data(420, 1000)), BetaBelief(421, 581));
  EXPECT_EQ(likelihood_belief(make_observed_data(0, 1)), BetaBelief(1, 2));
  EXPECT_EQ(likelihood_belief(make_observed_data(66, 158)), BetaBelief(67, 93));
}

TEST(Posterior, WorkedConjugateExample) {
  EXPECT_EQ(posterior_update(BetaBelief(2, 10), make_observed_data(420, 1000)),
            BetaBelief(422, 590));
}

TEST(Posterior, FlatPriorGivesLikelihoodShape) {
  const ObservedData d = make_observed_data(37, 90);
  EXPECT_EQ(posterior_update(BetaBelief::uniform(), d), likelihood_belief(d));
}

TEST(Posterior, IntroScenario) {
  const BetaBelief prior = fit_beta({0.51, 0.47, 0.55});
  const BetaBelief post = posterior_update(prior, make_observed_data(600, 1000));
  EXPECT_NEAR(post.mean(), 0.57, 0.01);
  const CredibleInterval i = hdi(post);
  EXPECT_NEAR(i.lower, 0.54, 0.01);
  EXPECT_NEAR(i.upper, 0.59, 0.01);
}

TEST(Posterior, ConjugacyClosureAndSplitting) {
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> param(0.5, 50.0);
  std::uniform_int_distribution<std::uint64_t> size(1, 500);
  for (int n = 0; n < 1000; ++n) {
    const BetaBelief prior(param(rng), param(rng));
    const std::uint64_t n1 = size(rng), n2 = size(rng);
    const std::uint64_t s1 = std::uniform_int_distribution<std::uint64_t>(0, n1)(rng);
    const std::uint64_t s2 = std::uniform_int_distribution<std::uint64_t>(0, n2)(rng);
    const BetaBelief once = posterior_update(prior, make_observed_data(s1 + s2, n1 + n2));
    const BetaBelief twice =
        posterior_update(posterior_update(prior, make_observed_data(s1, n1)),
                         make_observed_data(s2, n2));
    EXPECT_DOUBLE_EQ(once.concentration(), prior.concentration() + double(n1 + n2));
    // Integral pseudo-counts added in a different order; equal up to rounding
    // of the non-integral prior parameters.
    EXPECT_NEAR(once.alpha(), twice.alpha(), 1e-12 * once.alpha());
    EXPECT_NEAR(once.beta(), twice.beta(), 1e-12 * once.beta());
  }
  const BetaBelief integral(3, 4);
  EXPECT_EQ(posterior_update(posterior_update(integral, make_observed_data(5, 9)),
                             make_observed_data(1, 7)),
            posterior_update(integral, make_observed_data(6, 16)));
}

TEST(NormalUpdate, PrecisionWeightedMean) {
  const NormalBelief eq = normal_posterior_update(0.0, 2.0, 1.0, 2.0);
  EXPECT_DOUBLE_EQ(eq.mean, 0.5);
  EXPECT_DOUBLE_EQ(eq.precision, 4.0);

  const NormalBelief flat = normal_posterior_update(0.3, 1e-9, 0.8, 1.0);
  EXPECT_NEAR(flat.mean, 0.8, 1e-6);

  const NormalBelief intro = normal_posterior_update(0.51, 600, 0.60, 1000);
  EXPECT_NEAR(intro.mean, (0.51 * 600 + 0.60 * 1000) / 1600, 1e-15);
  EXPECT_NEAR(intro.mean, 0.566, 0.0005);
}

TEST(NormalUpdate, RejectsNonPositivePrecision) {
  EXPECT_THROW(normal_posterior_update(0, 0, 1, 1), InvalidInput);
  EXPECT_THROW(normal_posterior_update(0, 1, 1, -1), InvalidInput);
}
