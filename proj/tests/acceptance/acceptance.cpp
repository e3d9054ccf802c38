// One PASS/FAIL line per acceptance criterion. argv[1] is the CLI binary.
#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "bayesassist/batch_evaluation.hpp"
#include "bayesassist/csv.hpp"
#include "bayesassist/effect_size.hpp"
#include "bayesassist/evaluation.hpp"
#include "bayesassist/fit.hpp"
#include "bayesassist/interval.hpp"
#include "bayesassist/regression.hpp"
#include "bayesassist/simulation.hpp"
#include "bayesassist/study_service.hpp"
#include "bayesassist/updating.hpp"
#include "oracles.hpp"
#include "sessions.hpp"

using namespace bayesassist;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string fmt(const char* f, double a) {
  char buf[128];
  std::snprintf(buf, sizeof buf, f, a);
  return buf;
}

std::string fmt2(const char* f, double a, double b) {
  char buf[160];
  std::snprintf(buf, sizeof buf, f, a, b);
  return buf;
}

Outcome conjugate_example() {
  const BetaBelief post = posterior_update(BetaBelief(2, 10), make_observed_data(420, 1000));
  const bool ok = post.alpha() == 422.0 && post.beta() == 590.0;
  return {ok, fmt2("Beta(%g, %g)", post.alpha(), post.beta())};
}

Outcome intro_scenario() {
  const BetaBelief prior = fit_beta({0.51, 0.47, 0.55});
  const BetaBelief post = posterior_update(prior, make_observed_data(600, 1000));
  const CredibleInterval i = hdi(post);
  const bool ok = std::abs(post.mean() - 0.57) <= 0.01 && std::abs(i.lower - 0.54) <= 0.01 &&
                  std::abs(i.upper - 0.59) <= 0.01;
  return {ok, fmt("mean %.4f", post.mean()) + fmt2(", HDI [%.4f, %.4f]", i.lower, i.upper)};
}

Outcome kld_oracle() {
  std::mt19937_64 rng(20240601);
  std::uniform_real_distribution<double> mode(0.0, 1.0);
  std::uniform_real_distribution<double> log_kappa(std::log(2.0), std::log(1e4));
  const auto draw = [&] {
    const double k = std::exp(log_kappa(rng));
    double a, b;
    oracle::mode_concentration(mode(rng), k, a, b);
    return BetaBelief(a, b);
  };
  double worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const BetaBelief p = draw(), q = draw();
    const double expected = oracle::kl_divergence(p.alpha(), p.beta(), q.alpha(), q.beta());
    const double got = kl_divergence(p, q);
    worst = std::max(worst, std::abs(got - expected) / std::max(expected, 1e-300));
  }
  double self = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const BetaBelief p = draw();
    self = std::max(self, std::abs(kl_divergence(p, p)));
  }
  return {worst <= 1e-5 && self <= 1e-12,
          fmt("max relative error %.2e", worst) + fmt(", max KLD(p,p) %.1e", self)};
}

Outcome fit_round_trip() {
  std::mt19937_64 rng(20240602);
  std::uniform_real_distribution<double> mode(0.02, 0.98);
  std::uniform_real_distribution<double> log_kappa(std::log(10.0), std::log(1e5));
  double worst = 0.0;
  int count = 0;
  while (count < 500) {
    const double w = mode(rng), k = std::exp(log_kappa(rng));
    double a, b;
    oracle::mode_concentration(w, k, a, b);
    if (a <= 1.0 || b <= 1.0) continue;
    const oracle::Interval truth = oracle::beta_hdi(a, b, 0.95);
    const ElicitedInterval e{w, truth.lower, truth.upper, 0.95};
    const CredibleInterval back = hdi(fit_beta(e));
    worst = std::max({worst, std::abs(back.lower - e.lower), std::abs(back.upper - e.upper)});
    ++count;
  }
  return {worst <= 0.01, fmt("500 intervals, max endpoint error %.2e", worst)};
}

Outcome cles_reproduction() {
  const std::array<std::pair<double, double>, 4> pairs{
      {{0.33, 0.59}, {0.27, 0.57}, {0.21, 0.56}, {0.35, 0.59}}};
  bool ok = true;
  std::string detail;
  for (const auto& [d, published] : pairs) {
    const double c = cles_from_d(d);
    const bool hit = std::abs(c - published) <= 0.005;
    ok &= hit;
    if (!detail.empty()) detail += "; ";
    detail += fmt("d %.2f", d) + fmt2(" -> %.2f%% (published %.0f%%", 100 * c, 100 * published) +
              (hit ? ")" : ", off by more than 0.5 pp)");
  }
  return {ok, detail};
}

Outcome mcmc_recovery() {
  const std::array<double, kCoefficientCount> truth{1.0, -0.2, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0};
  const std::array<ConditionCode, 4> cells{ConditionCode::reference(),
                                           ConditionCode{true, false, false},
                                           ConditionCode{false, true, false},
                                           ConditionCode{false, false, true}};
  const int runs = 100;
  std::array<double, kCoefficientCount> mean_sum{};
  std::array<int, kCoefficientCount> covered{};
  double worst_rhat = 0.0;
  int converged = 0;
  for (int r = 0; r < runs; ++r) {
    std::mt19937_64 rng(7000 + r);
    std::normal_distribution<double> z(0.0, 1.0);
    std::vector<LognormalObservation> obs;
    for (int c = 0; c < 4; ++c) {
      const double mu = truth[0] + (c ? truth[c] : 0.0);
      const double sigma = std::exp(truth[4] + (c ? truth[4 + c] : 0.0));
      for (int i = 0; i < 200; ++i) obs.push_back({std::exp(mu + sigma * z(rng)), cells[c]});
    }
    RegressionConfig config;
    config.sampler.seed = 9000 + r;
    const RegressionFit fit = fit_lognormal_model(obs, config);
    converged += fit.converged;
    for (std::size_t k = 0; k < kCoefficientCount; ++k) {
      const auto& s = fit.coefficients[k];
      mean_sum[k] += s.mean;
      covered[k] += s.lower <= truth[k] && truth[k] <= s.upper;
      worst_rhat = std::max(worst_rhat, s.rhat);
    }
  }
  double worst_bias = 0.0;
  int worst_cover = runs;
  for (std::size_t k = 0; k < kCoefficientCount; ++k) {
    worst_bias = std::max(worst_bias, std::abs(mean_sum[k] / runs - truth[k]));
    worst_cover = std::min(worst_cover, covered[k]);
  }
  const bool ok = worst_bias <= 0.1 && worst_rhat <= 1.05 && converged == runs && worst_cover >= 90;
  return {ok, fmt("max |avg mean - truth| %.3f", worst_bias) + fmt(", max R-hat %.4f", worst_rhat) +
                  fmt(", min coverage %.0f/100", worst_cover) +
                  fmt(", converged %.0f/100", converged)};
}

LocationType by_intervals(double p, double l, double n, double e) {
  if (std::abs(e - n) <= kNearNormativeWindow) return LocationType::near_normative;
  if (std::abs(l - p) <= kMeanTieTolerance) return LocationType::overshoot_data;
  const bool up = l > p;
  if (up ? e > l + kMeanTieTolerance : e < l - kMeanTieTolerance) {
    return LocationType::overshoot_data;
  }
  if (up ? e < p - kMeanTieTolerance : e > p + kMeanTieTolerance) {
    return LocationType::updated_away_from_data;
  }
  // From the prior (inclusive) up to the normative mean.
  return (up ? e < n : e > n) ? LocationType::overweight_prior : LocationType::overweight_data;
}

Outcome classification_soundness() {
  const int steps = 20;
  std::array<std::size_t, 5> counts{};
  std::size_t points = 0, disagreements = 0, asymmetric = 0;
  for (int p = 0; p <= steps; ++p) {
    for (int l = 0; l <= steps; ++l) {
      for (int n = 0; n <= steps; ++n) {
        for (int e = 0; e <= steps; ++e) {
          const LocationMeans m{p / double(steps), l / double(steps), n / double(steps),
                                e / double(steps)};
          const LocationMeans r{(steps - p) / double(steps), (steps - l) / double(steps),
                                (steps - n) / double(steps), (steps - e) / double(steps)};
          const LocationType t = classify_location(m, r);
          ++counts[static_cast<int>(t)];
          ++points;
          disagreements += t != by_intervals(m.prior, m.likelihood, m.normative, m.elicited);
          asymmetric += t != classify_location(r, m);
        }
      }
    }
  }
  std::size_t labelled = 0;
  for (auto c : counts) labelled += c;
  const bool ok = labelled == points && disagreements == 0 && asymmetric == 0;
  return {ok, std::to_string(points) + " grid points, " + std::to_string(disagreements) +
                  " oracle disagreements, " + std::to_string(asymmetric) + " mirror mismatches"};
}

double mean_log_kld(UpdateRule rule, std::uint64_t seed) {
  SimulationConfig c;
  c.rule = rule;
  c.participants = 200;
  c.dataset = Dataset::dementia_small;
  c.seed = seed;
  const auto rows = evaluate_records(simulate_population(c));
  double sum = 0.0;
  for (const auto& r : rows) sum += r.score.log_kld;
  return sum / rows.size();
}

Outcome simulation_directionality() {
  const double bayes = mean_log_kld({}, 11);
  const double ignore = mean_log_kld({UpdateRule::Kind::ignore_prior, 0.0}, 11);
  const double inflate = mean_log_kld({UpdateRule::Kind::variance_inflate, 2.0}, 11);
  return {bayes < ignore && bayes < inflate,
          fmt("mean log KLD bayesian %.2f", bayes) + fmt(", ignore_prior %.2f", ignore) +
              fmt(", variance_inflate(2) %.2f", inflate)};
}

// Pipeline determinism.

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return std::string(std::istreambuf_iterator<char>(in), {});
}

bool run_cli(const std::string& cli, const std::string& args) {
  const std::string cmd = "\"" + cli + "\" " + args + " 2>/dev/null";
  const int raw = std::system(cmd.c_str());
  return WIFEXITED(raw) && WEXITSTATUS(raw) == 0;
}

struct Fixture {
  std::string csv;
  std::vector<EvaluationRow> service_rows;
};

Fixture build_fixture() {
  testing_support::ManualClock clock;
  StudyService service({{}, 424242}, clock.clock());
  std::mt19937_64 rng(424242);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 100; ++i) {
    const std::string id = "fixture-" + std::to_string(i);
    service.assign_session(id);
    testing_support::Script s;
    const double pm = 0.1 + 0.7 * u(rng);
    s.prior = {pm, pm * (0.4 + 0.5 * u(rng)), pm + (1 - pm) * (0.1 + 0.5 * u(rng)), 0.95};
    const double qm = 0.3 + 0.3 * u(rng);
    s.posterior = {qm, qm - 0.02 - 0.1 * u(rng), qm + 0.02 + 0.1 * u(rng), 0.95};
    s.trust_rating = 1 + static_cast<int>(5 * u(rng)) % 5;
    clock.now += 1000;
    testing_support::complete_session(service, id, s);
  }
  return {service.export_csv(), evaluate_records(service.records())};
}

Outcome pipeline_determinism(const std::string& cli) {
  const fs::path dir =
      fs::temp_directory_path() / ("bayesassist-acceptance-" + std::to_string(::getpid()));
  fs::create_directories(dir);
  const Fixture built = build_fixture();
  const fs::path fixture = dir / "fixture.csv";
  std::ofstream(fixture, std::ios::binary) << built.csv;

  std::array<std::array<std::string, 3>, 2> outputs;
  bool ran = true;
  for (int run = 0; run < 2; ++run) {
    const fs::path fitted = dir / ("fitted" + std::to_string(run) + ".csv");
    const fs::path updated = dir / ("updated" + std::to_string(run) + ".csv");
    const fs::path scored = dir / ("scored" + std::to_string(run) + ".csv");
    ran &= run_cli(cli, "fit -i \"" + fixture.string() + "\" -o \"" + fitted.string() + "\"");
    ran &= run_cli(cli, "update -i \"" + fitted.string() + "\" -o \"" + updated.string() + "\"");
    ran &= run_cli(cli, "evaluate -i \"" + fitted.string() + "\" -o \"" + scored.string() + "\"");
    outputs[run] = {slurp(fitted), slurp(updated), slurp(scored)};
  }
  if (!ran) {
    fs::remove_all(dir);
    return {false, "CLI invocation failed"};
  }
  const bool identical = outputs[0] == outputs[1];

  // Service path: the service's own records, scored in-process.
  const auto& service_rows = built.service_rows;
  std::istringstream cli_in(outputs[0][2]);
  const auto cli_rows = read_evaluation_rows(cli_in);
  double worst = cli_rows.size() == service_rows.size() ? 0.0 : INFINITY;
  for (std::size_t i = 0; i < std::min(cli_rows.size(), service_rows.size()); ++i) {
    const auto& a = cli_rows[i];
    const auto& b = service_rows[i];
    if (a.participant_id != b.participant_id ||
        a.classification.location_type != b.classification.location_type) {
      worst = INFINITY;
      break;
    }
    worst = std::max({worst, std::abs(a.score.kld - b.score.kld),
                      std::abs(a.normative.alpha() - b.normative.alpha()),
                      std::abs(a.normative.beta() - b.normative.beta()),
                      std::abs(a.elicited.alpha() - b.elicited.alpha()),
                      std::abs(a.elicited.beta() - b.elicited.beta())});
  }
  // The update table must agree with the normative posteriors too.
  std::istringstream upd(outputs[0][1]);
  const CsvTable table = CsvTable::read(upd);
  std::size_t matched = 0;
  for (const auto& row : table.rows()) {
    const std::string& id = row[table.column("participant_id")];
    for (const auto& s : service_rows) {
      if (s.participant_id != id) continue;
      worst = std::max({worst,
                        std::abs(parse_double(row[table.column("normative_alpha")]) -
                                 s.normative.alpha()),
                        std::abs(parse_double(row[table.column("normative_beta")]) -
                                 s.normative.beta())});
      ++matched;
    }
  }
  if (matched != service_rows.size()) worst = INFINITY;
  fs::remove_all(dir);
  return {identical && worst <= 1e-9,
          std::string(identical ? "byte-identical reruns" : "reruns differ") + ", " +
              std::to_string(service_rows.size()) + " scored records" +
              fmt(", max service-path difference %.1e", worst)};
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: acceptance <path to bayesassist CLI>\n";
    return 2;
  }
  const std::string cli = argv[1];
  struct Criterion {
    std::string name;
    std::function<Outcome()> check;
    double time_limit_s;  // 0 for none
  };
  const std::vector<Criterion> criteria{
      {"conjugate worked example", conjugate_example, 1.0},
      {"intro scenario", intro_scenario, 1.0},
      {"KLD oracle equivalence", kld_oracle, 30.0},
      {"fit round-trip", fit_round_trip, 60.0},
      {"CLES reproduction", cles_reproduction, 0.0},
      {"MCMC recovery", mcmc_recovery, 0.0},
      {"classification soundness", classification_soundness, 10.0},
      {"simulation directionality", simulation_directionality, 0.0},
      {"pipeline determinism", [&] { return pipeline_determinism(cli); }, 0.0},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const Criterion& c = criteria[i];
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.check();
    } catch (const std::exception& e) {
      o = {false, std::string("threw: ") + e.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.time_limit_s > 0.0 && secs > c.time_limit_s) {
      o.pass = false;
      o.detail += fmt("; over the %.0fs limit", c.time_limit_s);
    }
    failures += !o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << i + 1 << " (" << c.name
              << "): " << o.detail << fmt(" [%.1fs]", secs) << std::endl;
  }
  return failures == 0 ? 0 : 1;
}
