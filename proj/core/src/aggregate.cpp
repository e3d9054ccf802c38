#include "bayesassist/aggregate.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include "bayesassist/errors.hpp"
#include "bayesassist/evaluation.hpp"
#include "bayesassist/stats.hpp"
#include "bayesassist/updating.hpp"

namespace bayesassist {

namespace {

void check_dataset(const TrialRecord& record, const ObservedData& data) {
  const DatasetSpec spec = dataset_spec(record.dataset);
  if (spec.sample_size != data.sample_size || spec.successes() != data.successes) {
    throw InvalidInput("record " + record.participant_id + " was shown dataset " +
                       std::string(to_string(record.dataset)) +
                       ", which does not match the analysed data");
  }
}

GroupLogKld score_group(std::vector<double> log_klds, const AggregateConfig& config,
                        std::uint64_t stream) {
  GroupLogKld g;
  g.count = log_klds.size();
  if (!log_klds.empty()) {
    g.mean_log_kld = mean_of(log_klds);
    g.interval = bootstrap_mean_interval(log_klds, config.resamples, config.seed + stream);
  }
  g.log_klds = std::move(log_klds);
  return g;
}

}  // namespace

BetaBelief moment_match_mixture(std::span<const BetaBelief> components) {
  if (components.empty()) throw InvalidInput("cannot moment-match an empty mixture");
  const double n = static_cast<double>(components.size());
  double mean = 0.0, second = 0.0;
  for (const auto& c : components) {
    mean += c.mean();
    second += c.variance() + c.mean() * c.mean();
  }
  mean /= n;
  const double variance = second / n - mean * mean;
  if (!(variance > 0.0) || !(variance < mean * (1.0 - mean))) {
    throw InvalidInput("mixture variance cannot be matched by a Beta");
  }
  const double kappa = mean * (1.0 - mean) / variance - 1.0;
  return BetaBelief(mean * kappa, (1.0 - mean) * kappa);
}

BootstrapInterval bootstrap_mean_interval(std::span<const double> values, std::size_t resamples,
                                          std::uint64_t seed, double level) {
  if (values.empty()) throw InvalidInput("cannot bootstrap an empty sample");
  if (resamples == 0) throw InvalidInput("bootstrap needs at least one resample");
  if (!(level > 0.0 && level < 1.0)) throw InvalidInput("bootstrap level must be in (0, 1)");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, values.size() - 1);
  std::vector<double> means(resamples);
  for (auto& m : means) {
    double s = 0.0;
    for (std::size_t i = 0; i < values.size(); ++i) s += values[pick(rng)];
    m = s / static_cast<double>(values.size());
  }
  std::sort(means.begin(), means.end());
  const double tail = (1.0 - level) / 2.0;
  return {sorted_quantile(means, tail), sorted_quantile(means, 1.0 - tail)};
}

AggregateReport aggregate_elicitation_analysis(std::span<const TrialRecord> elicited,
                                               std::span<const TrialRecord> non_elicited,
                                               const ObservedData& data,
                                               const AggregateConfig& config) {
  data.validate();
  if (elicited.size() < kMinElicitedPriors) {
    throw InvalidInput("aggregate analysis needs at least " + std::to_string(kMinElicitedPriors) +
                       " elicited priors, got " + std::to_string(elicited.size()));
  }
  std::vector<BetaBelief> priors;
  std::vector<double> elicited_scores;
  for (const auto& r : elicited) {
    if (!r.prior) throw InvalidInput("record " + r.participant_id + " has no elicited prior");
    check_dataset(r, data);
    priors.push_back(r.prior->fitted);
    const BetaBelief normative = posterior_update(r.prior->fitted, data);
    elicited_scores.push_back(deviation_score(normative, r.posterior.fitted).log_kld);
  }

  AggregateReport report;
  report.common_prior = moment_match_mixture(priors);
  report.common_normative = posterior_update(report.common_prior, data);

  std::vector<double> other_scores;
  for (const auto& r : non_elicited) {
    check_dataset(r, data);
    other_scores.push_back(deviation_score(report.common_normative, r.posterior.fitted).log_kld);
  }
  report.elicited = score_group(std::move(elicited_scores), config, 0);
  report.non_elicited = score_group(std::move(other_scores), config, 1);
  return report;
}

}  // namespace bayesassist
