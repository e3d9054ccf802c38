#include "bayesassist/batch_evaluation.hpp"

#include <istream>
#include <map>
#include <ostream>

#include "bayesassist/csv.hpp"
#include "bayesassist/errors.hpp"
#include "bayesassist/updating.hpp"

namespace bayesassist {

EvaluationRow evaluate_record(const TrialRecord& record) {
  if (!record.prior) {
    throw InvalidInput("record " + record.participant_id + " has no elicited prior");
  }
  const ObservedData data = dataset_spec(record.dataset).observed();
  const BetaBelief& prior = record.prior->fitted;
  const BetaBelief likelihood = likelihood_belief(data);
  const BetaBelief normative = posterior_update(prior, data);
  const BetaBelief& elicited = record.posterior.fitted;

  EvaluationRow row;
  row.participant_id = record.participant_id;
  row.condition = record.condition;
  row.dataset = record.dataset;
  row.score = deviation_score(normative, elicited);
  row.classification.location_type = classify_location(prior, likelihood, elicited, normative);
  row.classification.variance_type = classify_variance(elicited, normative);
  row.normative = normative;
  row.elicited = elicited;
  return row;
}

std::vector<EvaluationRow> evaluate_records(std::span<const TrialRecord> records,
                                            bool include_excluded) {
  std::vector<EvaluationRow> rows;
  for (const auto& r : records) {
    if (!r.prior) continue;
    if (r.excluded() && !include_excluded) continue;
    rows.push_back(evaluate_record(r));
  }
  return rows;
}

std::vector<GroupSummary> summarize_by_group(std::span<const EvaluationRow> rows) {
  std::map<std::pair<Dataset, Condition>, std::vector<const EvaluationRow*>> groups;
  for (const auto& r : rows) groups[{r.dataset, r.condition}].push_back(&r);
  std::vector<GroupSummary> out;
  for (const auto& [key, members] : groups) {
    GroupSummary g{key.first, key.second, {}, {}, {}};
    std::vector<double> values;
    for (const auto* m : members) {
      values.push_back(m->score.log_kld);
      ++g.location_counts[static_cast<int>(m->classification.location_type)];
      ++g.variance_counts[static_cast<int>(m->classification.variance_type)];
    }
    g.log_kld = summarize_values(values);
    out.push_back(g);
  }
  return out;
}

const std::vector<std::string_view>& evaluation_csv_columns() {
  static const std::vector<std::string_view> columns{
      "participant_id", "condition",     "dataset",         "kld",
      "log_kld",        "location_type", "variance_type",   "normative_alpha",
      "normative_beta", "elicited_alpha", "elicited_beta"};
  return columns;
}

void write_evaluation_rows(std::ostream& out, std::span<const EvaluationRow> rows) {
  write_csv_header(out, evaluation_csv_columns());
  for (const auto& r : rows) {
    write_csv_row(out, {r.participant_id, std::string(to_string(r.condition)),
                        std::string(to_string(r.dataset)), format_double(r.score.kld),
                        format_double(r.score.log_kld),
                        std::string(to_string(r.classification.location_type)),
                        std::string(to_string(r.classification.variance_type)),
                        format_double(r.normative.alpha()), format_double(r.normative.beta()),
                        format_double(r.elicited.alpha()), format_double(r.elicited.beta())});
  }
}

std::vector<EvaluationRow> read_evaluation_rows(std::istream& in) {
  const CsvTable table = CsvTable::read(in);
  table.require_columns(evaluation_csv_columns());
  std::vector<EvaluationRow> rows;
  for (const auto& fields : table.rows()) {
    const auto get = [&](std::string_view name) -> const std::string& {
      return fields[table.column(name)];
    };
    EvaluationRow r;
    r.participant_id = get("participant_id");
    r.condition = parse_condition(get("condition"));
    r.dataset = parse_dataset(get("dataset"));
    r.score.kld = parse_double(get("kld"));
    r.score.log_kld = parse_double(get("log_kld"));
    r.classification.location_type = parse_location_type(get("location_type"));
    r.classification.variance_type = parse_variance_type(get("variance_type"));
    r.normative = BetaBelief(parse_double(get("normative_alpha")), parse_double(get("normative_beta")));
    r.elicited = BetaBelief(parse_double(get("elicited_alpha")), parse_double(get("elicited_beta")));
    rows.push_back(std::move(r));
  }
  return rows;
}

}  // namespace bayesassist
