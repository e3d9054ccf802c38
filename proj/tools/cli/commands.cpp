#include "commands.hpp"

#include <algorithm>
#include <csignal>
#include <iostream>
#include <sstream>

#include "bayesassist/aggregate.hpp"
#include "bayesassist/assistance.hpp"
#include "bayesassist/batch_evaluation.hpp"
#include "bayesassist/csv.hpp"
#include "bayesassist/effect_size.hpp"
#include "bayesassist/errors.hpp"
#include "bayesassist/fit.hpp"
#include "bayesassist/records_csv.hpp"
#include "bayesassist/regression.hpp"
#include "bayesassist/serialization.hpp"
#include "bayesassist/service_api.hpp"
#include "bayesassist/simulation.hpp"
#include "bayesassist/study_service.hpp"
#include "bayesassist/updating.hpp"
#include "http_server.hpp"
#include "io.hpp"

namespace bayesassist::cli {

namespace {

bool is_trial_table(const CsvTable& t) {
  return t.has_column("condition") && t.has_column("prior_point") &&
         t.has_column("posterior_point");
}

std::uint64_t parse_count(const std::string& text, const char* what) {
  const std::int64_t v = parse_int(text);
  if (v < 0) throw InvalidInput(std::string(what) + " must be non-negative");
  return static_cast<std::uint64_t>(v);
}

std::vector<TrialRecord> read_records(const std::string& text) {
  std::istringstream in(text);
  return read_trial_records(in);
}

std::vector<TrialRecord> keep_included(std::vector<TrialRecord> records, bool include_excluded) {
  if (include_excluded) return records;
  std::erase_if(records, [](const TrialRecord& r) { return r.excluded(); });
  return records;
}

// Copies `t`'s columns except `replaced`, then appends `added`.
struct ExtendedTable {
  std::vector<std::string_view> header;
  std::vector<std::size_t> kept;
};

ExtendedTable extend(const CsvTable& t, const std::vector<std::string_view>& added) {
  ExtendedTable e;
  for (std::size_t i = 0; i < t.header().size(); ++i) {
    const std::string& name = t.header()[i];
    if (std::find(added.begin(), added.end(), name) != added.end()) continue;
    e.kept.push_back(i);
    e.header.push_back(name);
  }
  e.header.insert(e.header.end(), added.begin(), added.end());
  return e;
}

void fit_trial_records(const std::string& text, double mass, std::ostream& out) {
  auto records = read_records(text);
  for (auto& r : records) {
    if (r.prior) {
      r.prior->interval.mass = mass;
      r.prior = elicit(r.prior->interval);
    }
    r.posterior.interval.mass = mass;
    r.posterior = elicit(r.posterior.interval);
  }
  write_trial_records(out, records);
}

void fit_intervals(const CsvTable& t, double mass, std::ostream& out) {
  t.require_columns({"point_estimate", "lower", "upper"});
  const auto e = extend(t, {"alpha", "beta"});
  const std::size_t pi = t.column("point_estimate"), li = t.column("lower"),
                    ui = t.column("upper");
  const bool has_mass = t.has_column("mass");
  write_csv_header(out, e.header);
  for (const auto& row : t.rows()) {
    ElicitedInterval interval;
    interval.point_estimate = parse_double(row[pi]);
    interval.lower = parse_double(row[li]);
    interval.upper = parse_double(row[ui]);
    interval.mass = has_mass ? parse_double(row[t.column("mass")]) : mass;
    const BetaBelief b = fit_beta(interval);
    std::vector<std::string> fields;
    for (std::size_t i : e.kept) fields.push_back(row[i]);
    fields.push_back(format_double(b.alpha()));
    fields.push_back(format_double(b.beta()));
    write_csv_row(out, fields);
  }
}

void update_trial_records(const std::string& text, bool include_excluded, std::ostream& out) {
  const auto records = keep_included(read_records(text), include_excluded);
  write_csv_header(out, {"participant_id", "condition", "dataset", "successes", "sample_size",
                         "prior_alpha", "prior_beta", "normative_alpha", "normative_beta"});
  for (const auto& r : records) {
    if (!r.prior) continue;
    const ObservedData data = dataset_spec(r.dataset).observed();
    const BetaBelief normative = posterior_update(r.prior->fitted, data);
    write_csv_row(out, {r.participant_id, std::string(to_string(r.condition)),
                        std::string(to_string(r.dataset)), std::to_string(data.successes),
                        std::to_string(data.sample_size), format_double(r.prior->fitted.alpha()),
                        format_double(r.prior->fitted.beta()), format_double(normative.alpha()),
                        format_double(normative.beta())});
  }
}

void update_rows(const CsvTable& t, std::ostream& out) {
  t.require_columns({"alpha", "beta", "successes", "sample_size"});
  const auto e = extend(t, {"posterior_alpha", "posterior_beta"});
  const std::size_t ai = t.column("alpha"), bi = t.column("beta"), si = t.column("successes"),
                    ni = t.column("sample_size");
  write_csv_header(out, e.header);
  for (const auto& row : t.rows()) {
    const BetaBelief prior(parse_double(row[ai]), parse_double(row[bi]));
    const ObservedData data = make_observed_data(parse_count(row[si], "successes"),
                                                 parse_count(row[ni], "sample_size"));
    const BetaBelief post = posterior_update(prior, data);
    std::vector<std::string> fields;
    for (std::size_t i : e.kept) fields.push_back(row[i]);
    fields.push_back(format_double(post.alpha()));
    fields.push_back(format_double(post.beta()));
    write_csv_row(out, fields);
  }
}

TextCatalog load_text(const std::string& path) {
  return path.empty() ? TextCatalog::defaults() : TextCatalog::from_json_file(path);
}

std::uint64_t require_seed(const Common& c) {
  if (!c.seed) throw InvalidInput("this subcommand needs an explicit --seed");
  return *c.seed;
}

Json summary_json(const std::vector<GroupSummary>& groups) {
  Json out = Json::array();
  for (const auto& g : groups) {
    Json locations = Json::object();
    for (std::size_t i = 0; i < g.location_counts.size(); ++i) {
      locations[std::string(to_string(static_cast<LocationType>(i)))] = g.location_counts[i];
    }
    Json variances = Json::object();
    for (std::size_t i = 0; i < g.variance_counts.size(); ++i) {
      variances[std::string(to_string(static_cast<VarianceType>(i)))] = g.variance_counts[i];
    }
    out.push_back({{"dataset", to_string(g.dataset)},
                   {"condition", to_string(g.condition)},
                   {"count", g.log_kld.count},
                   {"mean_log_kld", g.log_kld.mean},
                   {"median_log_kld", g.log_kld.median},
                   {"iqr_log_kld", g.log_kld.iqr},
                   {"location_types", locations},
                   {"variance_types", variances}});
  }
  return out;
}

Json group_json(const GroupLogKld& g) {
  return {{"count", g.count},
          {"mean_log_kld", g.mean_log_kld},
          {"ci95", {g.interval.lower, g.interval.upper}}};
}

bool is_elicited_arm(Condition c) {
  return c == Condition::point_estimate || c == Condition::uncertainty_vis;
}

HttpServer* g_server = nullptr;

extern "C" void handle_stop_signal(int) {
  if (g_server) g_server->stop();
}

}  // namespace

void run_fit(const FitOptions& o) {
  const std::string text = read_input(o.io.input);
  std::istringstream in(text);
  const CsvTable table = CsvTable::read(in, false);
  Output out(o.io.output);
  if (is_trial_table(table)) fit_trial_records(text, o.io.mass, out.stream());
  else fit_intervals(table, o.io.mass, out.stream());
  out.commit();
}

void run_update(const UpdateOptions& o) {
  Output out(o.io.output);
  if (o.alpha || o.beta || o.successes || o.sample_size) {
    if (!(o.alpha && o.beta && o.successes && o.sample_size)) {
      throw InvalidInput("--alpha, --beta, --successes and --sample-size go together");
    }
    const BetaBelief prior(*o.alpha, *o.beta);
    const BetaBelief post = posterior_update(prior, make_observed_data(*o.successes, *o.sample_size));
    write_csv_header(out.stream(), {"alpha", "beta", "successes", "sample_size",
                                    "posterior_alpha", "posterior_beta"});
    write_csv_row(out.stream(), {format_double(prior.alpha()), format_double(prior.beta()),
                                 std::to_string(*o.successes), std::to_string(*o.sample_size),
                                 format_double(post.alpha()), format_double(post.beta())});
  } else {
    const std::string text = read_input(o.io.input);
    std::istringstream in(text);
    const CsvTable table = CsvTable::read(in, false);
    if (is_trial_table(table)) update_trial_records(text, o.include_excluded, out.stream());
    else update_rows(table, out.stream());
  }
  out.commit();
}

void run_assist(const AssistOptions& o) {
  ObservedData data;
  if (!o.dataset.empty()) {
    if (o.successes || o.sample_size) {
      throw InvalidInput("give either --dataset or --successes/--sample-size");
    }
    data = dataset_spec(parse_dataset(o.dataset)).observed();
  } else {
    if (!o.successes || !o.sample_size) {
      throw InvalidInput("assist needs --dataset or both --successes and --sample-size");
    }
    data = make_observed_data(*o.successes, *o.sample_size);
  }
  if (o.kind != "analogy" && o.kind != "posterior_vis" && o.kind != "both") {
    throw InvalidInput("--kind must be analogy, posterior_vis or both");
  }
  const TextCatalog text = load_text(o.text_path);
  const BetaBelief prior(o.alpha, o.beta);
  Json j{{"prior", prior}, {"data", data}};
  if (o.kind != "posterior_vis") j["analogy"] = make_analogy(prior, data, text);
  if (o.kind != "analogy") j["posterior_vis"] = make_posterior_vis(prior, data, text);
  Output out(o.io.output);
  out.stream() << j.dump(2) << '\n';
  out.commit();
}

void run_evaluate(const EvaluateOptions& o) {
  const auto records = read_records(read_input(o.io.input));
  const auto rows = evaluate_records(records, o.include_excluded);
  Output out(o.io.output);
  write_evaluation_rows(out.stream(), rows);
  std::optional<Output> summary;
  if (!o.summary_path.empty()) {
    summary.emplace(o.summary_path);
    const Json j{{"records", records.size()},
                 {"evaluated", rows.size()},
                 {"groups", rows.empty() ? Json::array() : summary_json(summarize_by_group(rows))}};
    summary->stream() << j.dump(2) << '\n';
  }
  out.commit();
  if (summary) summary->commit();
}

void run_regress(const RegressOptions& o) {
  RegressionConfig config;
  config.sampler.seed = require_seed(o.io);
  config.sampler.chains = o.chains;
  config.sampler.warmup = o.warmup;
  config.sampler.draws = o.draws;
  config.sampler.parallel = !o.sequential;

  std::istringstream in(read_input(o.io.input));
  const auto rows = read_evaluation_rows(in);
  std::optional<Dataset> only;
  if (!o.dataset.empty()) only = parse_dataset(o.dataset);
  std::vector<LognormalObservation> obs;
  std::array<bool, 4> present{};
  for (const auto& r : rows) {
    if (only && r.dataset != *only) continue;
    const auto code = condition_code(r.condition);
    if (!code) continue;
    obs.push_back({r.score.kld, *code});
    present[code->cell()] = true;
  }
  const RegressionFit fit = fit_lognormal_model(obs, config);

  Output out(o.io.output);
  write_csv_header(out.stream(), {"coefficient", "mean", "sd", "lower95", "upper95", "rhat", "ess"});
  for (const auto& c : fit.coefficients) {
    write_csv_row(out.stream(), {std::string(c.name), format_double(c.mean), format_double(c.sd),
                                 format_double(c.lower), format_double(c.upper),
                                 format_double(c.rhat), format_double(c.ess)});
  }
  std::optional<Output> diagnostics;
  if (!o.diagnostics_path.empty()) {
    diagnostics.emplace(o.diagnostics_path);
    Json j = fit;
    j["seed"] = config.sampler.seed;
    Json effects = Json::object();
    if (fit.converged && present[0]) {
      for (Condition c : {Condition::posterior_vis, Condition::analogy, Condition::point_estimate}) {
        const ConditionCode code = *condition_code(c);
        if (!present[code.cell()]) continue;
        const EffectSize es = effect_size(fit, code);
        effects[std::string(to_string(c))] = {{"cohens_d", es.cohens_d}, {"cles", es.cles}};
      }
    }
    j["effect_sizes"] = effects;
    diagnostics->stream() << j.dump(2) << '\n';
  }
  out.commit();
  if (diagnostics) diagnostics->commit();
}

void run_aggregate(const AggregateOptions& o) {
  AggregateConfig config;
  config.seed = require_seed(o.io);
  config.resamples = o.resamples;
  const auto records =
      keep_included(read_records(read_input(o.io.input)), o.include_excluded);

  std::vector<Dataset> datasets;
  if (!o.dataset.empty()) {
    datasets.push_back(parse_dataset(o.dataset));
  } else {
    for (Dataset d : kAllDatasets) {
      if (std::any_of(records.begin(), records.end(),
                      [d](const TrialRecord& r) { return r.dataset == d; })) {
        datasets.push_back(d);
      }
    }
  }
  Json results = Json::array();
  for (Dataset d : datasets) {
    std::vector<TrialRecord> elicited, other;
    for (const auto& r : records) {
      if (r.dataset != d) continue;
      if (is_elicited_arm(r.condition)) elicited.push_back(r);
      else if (!is_elicitation_condition(r.condition)) other.push_back(r);
    }
    const AggregateReport report = aggregate_elicitation_analysis(
        elicited, other, dataset_spec(d).observed(), config);
    results.push_back({{"dataset", to_string(d)},
                       {"common_prior", report.common_prior},
                       {"common_normative", report.common_normative},
                       {"elicited", group_json(report.elicited)},
                       {"non_elicited", group_json(report.non_elicited)}});
  }
  Output out(o.io.output);
  out.stream() << Json{{"seed", config.seed}, {"resamples", config.resamples},
                       {"datasets", results}}
                      .dump(2)
               << '\n';
  out.commit();
}

void run_simulate(const SimulateOptions& o) {
  SimulationConfig config;
  config.seed = require_seed(o.io);
  config.rule = parse_update_rule(o.rule);
  config.participants = o.participants;
  config.dataset = parse_dataset(o.dataset);
  config.condition = parse_condition(o.condition);
  config.mass = o.io.mass;
  const auto records = simulate_population(config);
  Output out(o.io.output);
  write_trial_records(out.stream(), records);
  out.commit();
}

void run_serve(const ServeOptions& o) {
  const TextCatalog text = load_text(o.text_path);
  ServiceConfig config;
  config.seed = o.seed;
  config.data_dir = o.data_dir;
  StudyService service(config, system_clock_ms, text);
  ServiceApi api(service, text);
  HttpServer server(api);
  const int port = server.bind(o.host, o.port);
  std::cout << Json{{"listening", o.host + ":" + std::to_string(port)}}.dump() << std::endl;
  g_server = &server;
  std::signal(SIGINT, handle_stop_signal);
  std::signal(SIGTERM, handle_stop_signal);
  server.listen();
  g_server = nullptr;
}

}  // namespace bayesassist::cli
