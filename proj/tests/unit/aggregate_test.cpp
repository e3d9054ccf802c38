#include <cmath>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "bayesassist/aggregate.hpp"
#include "bayesassist/errors.hpp"
#include "bayesassist/simulation.hpp"

using namespace bayesassist;

namespace {

double beta_mean(double a, double b) { return a / (a + b); }
double beta_var(double a, double b) { return a * b / ((a + b) * (a + b) * (a + b + 1)); }

std::vector<TrialRecord> population(UpdateRule rule, Condition condition, std::size_t n,
                                    std::uint64_t seed) {
  SimulationConfig c;
  c.rule = rule;
  c.participants = n;
  c.condition = condition;
  c.seed = seed;
  return simulate_population(c);
}

}  // namespace

TEST(MomentMatch, IdenticalComponents) {
  const std::vector<BetaBelief> same(5, BetaBelief(3.5, 7.25));
  const BetaBelief m = moment_match_mixture(same);
  EXPECT_NEAR(m.alpha(), 3.5, 1e-9);
  EXPECT_NEAR(m.beta(), 7.25, 1e-9);
}

TEST(MomentMatch, MatchesMixtureMoments) {
  const std::vector<BetaBelief> parts{BetaBelief(2, 2), BetaBelief(2.2, 1.9)};
  const BetaBelief m = moment_match_mixture(parts);
  double mean = 0.0, second = 0.0;
  for (const auto& p : parts) {
    const double mu = beta_mean(p.alpha(), p.beta());
    mean += mu / 2;
    second += (beta_var(p.alpha(), p.beta()) + mu * mu) / 2;
  }
  EXPECT_NEAR(beta_mean(m.alpha(), m.beta()), mean, 1e-12);
  EXPECT_NEAR(beta_var(m.alpha(), m.beta()), second - mean * mean, 1e-12);
}

TEST(MomentMatch, RejectsEmpty) {
  EXPECT_THROW(moment_match_mixture(std::vector<BetaBelief>{}), InvalidInput);
}

TEST(MomentMatch, SplitMixtureStaysValid) {
  const std::vector<BetaBelief> split{BetaBelief(1e-3, 1e3), BetaBelief(1e3, 1e-3)};
  const BetaBelief m = moment_match_mixture(split);
  EXPECT_NEAR(m.mean(), 0.5, 1e-12);
  EXPECT_GT(m.alpha(), 0.0);
  EXPECT_LT(m.concentration(), 0.01);
}

TEST(Bootstrap, CoversMeanAndIsDeterministic) {
  std::mt19937_64 rng(113);
  std::normal_distribution<double> n(2.0, 1.0);
  std::vector<double> v(200);
  for (auto& x : v) x = n(rng);
  const BootstrapInterval a = bootstrap_mean_interval(v, 4000, 7);
  const BootstrapInterval b = bootstrap_mean_interval(v, 4000, 7);
  EXPECT_EQ(a.lower, b.lower);
  EXPECT_EQ(a.upper, b.upper);
  EXPECT_LT(a.lower, 2.0 + 0.01);
  EXPECT_GT(a.upper, 2.0 - 0.01);
  // Width near 2 * 1.96 / sqrt(200).
  EXPECT_NEAR(a.upper - a.lower, 2 * 1.96 / std::sqrt(200.0), 0.05);
  EXPECT_THROW(bootstrap_mean_interval(std::vector<double>{}, 10, 1), InvalidInput);
}

TEST(Aggregate, RefusesFewElicitedPriors) {
  const auto few = population(UpdateRule{}, Condition::uncertainty_vis, 29, 1);
  const auto none = population(UpdateRule{}, Condition::uncertainty_vis, 30, 2);
  const ObservedData data = dataset_spec(Dataset::dementia_small).observed();
  EXPECT_THROW(aggregate_elicitation_analysis(few, none, data, {}), InvalidInput);
}

TEST(Aggregate, ElicitedNormativeBeatsLikelihoodOnlyPopulation) {
  const auto elicited = population(UpdateRule{}, Condition::uncertainty_vis, 120, 3);
  auto non_elicited = population(UpdateRule{UpdateRule::Kind::ignore_prior, 0.0},
                                 Condition::uncertainty_vis, 120, 4);
  for (auto& r : non_elicited) {
    r.condition = Condition::no_elicit_uncertainty;
    r.prior.reset();
  }
  const ObservedData data = dataset_spec(Dataset::dementia_small).observed();
  AggregateConfig config;
  config.resamples = 2000;
  config.seed = 5;
  const AggregateReport report =
      aggregate_elicitation_analysis(elicited, non_elicited, data, config);
  EXPECT_EQ(report.elicited.count, 120u);
  EXPECT_EQ(report.non_elicited.count, 120u);
  EXPECT_LT(report.elicited.mean_log_kld, report.non_elicited.mean_log_kld);
  EXPECT_LT(report.elicited.interval.upper, report.non_elicited.interval.lower);
  EXPECT_LE(report.non_elicited.interval.lower, report.non_elicited.mean_log_kld);
  EXPECT_GE(report.non_elicited.interval.upper, report.non_elicited.mean_log_kld);

  std::vector<BetaBelief> priors;
  for (const auto& r : elicited) priors.push_back(r.prior->fitted);
  EXPECT_EQ(report.common_prior, moment_match_mixture(priors));
}

TEST(Aggregate, RejectsMixedDatasets) {
  auto elicited = population(UpdateRule{}, Condition::uncertainty_vis, 40, 6);
  const ObservedData data = dataset_spec(Dataset::dementia_small).observed();
  elicited[3].dataset = Dataset::abortion_large;
  EXPECT_THROW(aggregate_elicitation_analysis(elicited, {}, data, {}), InvalidInput);
}
