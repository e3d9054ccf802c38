#include <CLI11.hpp>

#include <iostream>

#include "bayesassist/errors.hpp"
#include "bayesassist/serialization.hpp"
#include "commands.hpp"

namespace {

using namespace bayesassist::cli;

void add_io(CLI::App* cmd, Common& c, bool with_seed, bool seed_required) {
  cmd->add_option("-i,--input", c.input, "Input file, '-' for stdin")->capture_default_str();
  cmd->add_option("-o,--output", c.output, "Output file, '-' for stdout")->capture_default_str();
  cmd->add_option("--mass", c.mass, "Interval probability mass")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  if (with_seed) {
    auto* opt = cmd->add_option("--seed", c.seed, "RNG seed");
    if (seed_required) opt->required();
  }
}

int report(std::string_view code, std::string_view message, int status) {
  std::cerr << bayesassist::error_json(code, message).dump() << '\n';
  return status;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bayesian-assisted belief updating: fitting, assistance, evaluation, analysis"};
  app.require_subcommand(1);

  FitOptions fit;
  auto* fit_cmd = app.add_subcommand(
      "fit", "Fit Betas to elicited intervals (point_estimate, lower, upper CSV or trial CSV)");
  add_io(fit_cmd, fit.io, false, false);

  UpdateOptions update;
  auto* update_cmd = app.add_subcommand(
      "update", "Normative posteriors from priors and data (alpha, beta, successes, sample_size "
                "CSV, trial CSV, or flags)");
  add_io(update_cmd, update.io, false, false);
  update_cmd->add_option("--alpha", update.alpha, "Prior alpha");
  update_cmd->add_option("--beta", update.beta, "Prior beta");
  update_cmd->add_option("--successes", update.successes, "Observed successes");
  update_cmd->add_option("--sample-size", update.sample_size, "Observed sample size");
  update_cmd->add_flag("--include-excluded", update.include_excluded,
                       "Keep records failing the exclusion question");

  AssistOptions assist;
  auto* assist_cmd =
      app.add_subcommand("assist", "Analogy and predicted-posterior payloads as JSON");
  add_io(assist_cmd, assist.io, false, false);
  assist_cmd->add_option("--alpha", assist.alpha, "Prior alpha")->required();
  assist_cmd->add_option("--beta", assist.beta, "Prior beta")->required();
  assist_cmd->add_option("--successes", assist.successes, "Observed successes");
  assist_cmd->add_option("--sample-size", assist.sample_size, "Observed sample size");
  assist_cmd->add_option("--dataset", assist.dataset, "Study dataset instead of explicit data");
  assist_cmd->add_option("--kind", assist.kind, "analogy, posterior_vis or both")
      ->capture_default_str();
  assist_cmd->add_option("--text", assist.text_path, "Text catalog JSON overriding the defaults");

  EvaluateOptions evaluate;
  auto* evaluate_cmd = app.add_subcommand(
      "evaluate", "KLD scores and update types for trial records (trial CSV -> evaluation CSV)");
  add_io(evaluate_cmd, evaluate.io, false, false);
  evaluate_cmd->add_option("--summary", evaluate.summary_path,
                           "Write per-group JSON summary here");
  evaluate_cmd->add_flag("--include-excluded", evaluate.include_excluded,
                         "Keep records failing the exclusion question");

  RegressOptions regress;
  auto* regress_cmd = app.add_subcommand(
      "regress", "Lognormal bias/dispersion regression of KLD on condition (evaluation CSV)");
  add_io(regress_cmd, regress.io, true, true);
  regress_cmd->add_option("--diagnostics", regress.diagnostics_path,
                          "Write sampler diagnostics and effect sizes as JSON");
  regress_cmd->add_option("--dataset", regress.dataset, "Only rows from this dataset");
  regress_cmd->add_option("--chains", regress.chains)->capture_default_str();
  regress_cmd->add_option("--warmup", regress.warmup)->capture_default_str();
  regress_cmd->add_option("--draws", regress.draws, "Kept draws per chain")->capture_default_str();
  regress_cmd->add_flag("--sequential", regress.sequential, "Run chains on one thread");

  AggregateOptions aggregate;
  auto* aggregate_cmd = app.add_subcommand(
      "aggregate", "Elicitation vs no-elicitation log KLD with a moment-matched common prior");
  add_io(aggregate_cmd, aggregate.io, true, true);
  aggregate_cmd->add_option("--dataset", aggregate.dataset, "Only this dataset");
  aggregate_cmd->add_option("--resamples", aggregate.resamples, "Bootstrap resamples")
      ->capture_default_str();
  aggregate_cmd->add_flag("--include-excluded", aggregate.include_excluded,
                          "Keep records failing the exclusion question");

  SimulateOptions simulate;
  auto* simulate_cmd = app.add_subcommand(
      "simulate",
      "Synthetic participants. Rules: bayesian (normative posterior), ignore_prior (likelihood), "
      "ignore_data (prior), overshoot(g) (mode g times the prior-to-data distance past the data, "
      "normative concentration), variance_inflate(r) (normative mode, r times the variance)");
  add_io(simulate_cmd, simulate.io, true, true);
  simulate_cmd->add_option("--rule", simulate.rule, "Update rule")->capture_default_str();
  simulate_cmd->add_option("-n,--n", simulate.participants, "Participants")
      ->capture_default_str();
  simulate_cmd->add_option("--dataset", simulate.dataset)->capture_default_str();
  simulate_cmd->add_option("--condition", simulate.condition)->capture_default_str();

  ServeOptions serve;
  auto* serve_cmd = app.add_subcommand("serve", "Run the study service over HTTP");
  serve_cmd->add_option("--host", serve.host)->envname("BAYESASSIST_HOST")->capture_default_str();
  serve_cmd->add_option("--port", serve.port)->envname("BAYESASSIST_PORT")->capture_default_str();
  serve_cmd->add_option("--seed", serve.seed, "Assignment RNG seed")
      ->envname("BAYESASSIST_SEED")
      ->required();
  serve_cmd->add_option("--data-dir", serve.data_dir, "Event log directory (memory if empty)")
      ->envname("BAYESASSIST_DATA_DIR");
  serve_cmd->add_option("--text", serve.text_path, "Text catalog JSON overriding the defaults");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return report("usage", e.what(), 2);
  }

  try {
    if (*fit_cmd) run_fit(fit);
    else if (*update_cmd) run_update(update);
    else if (*assist_cmd) run_assist(assist);
    else if (*evaluate_cmd) run_evaluate(evaluate);
    else if (*regress_cmd) run_regress(regress);
    else if (*aggregate_cmd) run_aggregate(aggregate);
    else if (*simulate_cmd) run_simulate(simulate);
    else if (*serve_cmd) run_serve(serve);
  } catch (const bayesassist::Error& e) {
    return report(bayesassist::error_code_name(e.code()), e.what(), 1);
  } catch (const std::exception& e) {
    return report("internal", e.what(), 1);
  }
  return 0;
}
