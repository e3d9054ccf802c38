#include <cmath>
#include <set>

#include <gtest/gtest.h>

#include "bayesassist/batch_evaluation.hpp"
#include "bayesassist/errors.hpp"
#include "bayesassist/interval.hpp"
#include "bayesassist/simulation.hpp"
#include "bayesassist/updating.hpp"

using namespace bayesassist;

TEST(UpdateRules, Parse) {
  EXPECT_EQ(parse_update_rule("bayesian").kind, UpdateRule::Kind::bayesian);
  EXPECT_EQ(parse_update_rule("ignore_data").kind, UpdateRule::Kind::ignore_data);
  const UpdateRule o = parse_update_rule("overshoot(0.5)");
  EXPECT_EQ(o.kind, UpdateRule::Kind::overshoot);
  EXPECT_DOUBLE_EQ(o.parameter, 0.5);
  EXPECT_EQ(to_string(o), "overshoot(0.5)");
  EXPECT_EQ(parse_update_rule(to_string(parse_update_rule("variance_inflate(2)"))).parameter, 2.0);
  EXPECT_THROW(parse_update_rule("overshoot"), InvalidInput);
  EXPECT_THROW(parse_update_rule("variance_inflate(-1)"), InvalidInput);
  EXPECT_THROW(parse_update_rule("guess"), InvalidInput);
}

TEST(UpdateRules, Beliefs) {
  const BetaBelief prior(3, 7);
  const ObservedData d = make_observed_data(42, 100);
  EXPECT_EQ(apply_update_rule({}, prior, d), posterior_update(prior, d));
  EXPECT_EQ(apply_update_rule({UpdateRule::Kind::ignore_data, 0}, prior, d), prior);
  EXPECT_EQ(apply_update_rule({UpdateRule::Kind::ignore_prior, 0}, prior, d), likelihood_belief(d));

  const BetaBelief normative = posterior_update(prior, d);
  const BetaBelief over = apply_update_rule({UpdateRule::Kind::overshoot, 0.5}, prior, d);
  EXPECT_NEAR(over.concentration(), normative.concentration(), 1e-9);
  EXPECT_NEAR(over.mode(), 0.42 + 0.5 * (0.42 - prior.mode()), 1e-9);

  const BetaBelief wide = apply_update_rule({UpdateRule::Kind::variance_inflate, 3.0}, prior, d);
  EXPECT_NEAR(wide.mode(), normative.mode(), 1e-9);
  EXPECT_NEAR(wide.variance() / normative.variance(), 3.0, 1e-6);
}

TEST(ReportBelief, ModeAndHdi) {
  const BetaBelief b(12, 30);
  const ElicitedInterval i = report_belief(b);
  EXPECT_DOUBLE_EQ(i.point_estimate, b.mode());
  EXPECT_EQ(i.lower, hdi(b).lower);
  EXPECT_EQ(i.upper, hdi(b).upper);
  const ElicitedInterval u = report_belief(BetaBelief::uniform());
  EXPECT_EQ(u.lower, 0.0);
  EXPECT_EQ(u.upper, 1.0);
}

TEST(Simulation, PopulationShapeAndDeterminism) {
  SimulationConfig c;
  c.participants = 50;
  c.seed = 42;
  const auto a = simulate_population(c);
  const auto b = simulate_population(c);
  ASSERT_EQ(a.size(), 50u);
  std::set<std::string> ids;
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_NO_THROW(a[i].validate());
    ASSERT_TRUE(a[i].prior.has_value());
    EXPECT_GE(a[i].prior->interval.point_estimate, 0.05 - 1e-9);
    EXPECT_LE(a[i].prior->interval.point_estimate, 0.95 + 1e-9);
    EXPECT_EQ(a[i].posterior.fitted, b[i].posterior.fitted);
    EXPECT_FALSE(a[i].excluded());
    ids.insert(a[i].participant_id);
  }
  EXPECT_EQ(ids.size(), 50u);
  EXPECT_EQ(a.front().participant_id, "sim-0001");
  c.seed = 43;
  EXPECT_NE(simulate_population(c)[0].posterior.fitted, a[0].posterior.fitted);
}

TEST(Simulation, BayesiansAreExactlyNormative) {
  SimulationConfig c;
  c.participants = 25;
  c.seed = 7;
  for (Dataset d : kAllDatasets) {
    c.dataset = d;
    for (const auto& row : evaluate_records(simulate_population(c))) {
      EXPECT_EQ(row.classification.location_type, LocationType::near_normative);
      EXPECT_LT(row.score.kld, 1e-9);
    }
  }
}

TEST(Simulation, IgnorePriorIsDataHeavy) {
  SimulationConfig c;
  c.rule = {UpdateRule::Kind::ignore_prior, 0.0};
  c.participants = 200;
  c.seed = 9;
  for (const auto& row : evaluate_records(simulate_population(c))) {
    const auto t = row.classification.location_type;
    EXPECT_TRUE(t == LocationType::overweight_data || t == LocationType::near_normative)
        << to_string(t);
  }
}

TEST(Simulation, IgnoreDataIsPriorHeavy) {
  SimulationConfig c;
  c.rule = {UpdateRule::Kind::ignore_data, 0.0};
  c.participants = 200;
  c.seed = 10;
  for (const auto& row : evaluate_records(simulate_population(c))) {
    const auto t = row.classification.location_type;
    EXPECT_TRUE(t == LocationType::overweight_prior || t == LocationType::near_normative)
        << to_string(t);
  }
}
