#pragma once

#include <array>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "bayesassist/evaluation.hpp"
#include "bayesassist/study.hpp"

namespace bayesassist {

/// Scores and classifications of one participant against their normative
/// posterior.
struct EvaluationRow {
  std::string participant_id;
  Condition condition = Condition::uncertainty_vis;
  Dataset dataset = Dataset::dementia_small;
  DeviationScore score;
  UpdateClassification classification;
  BetaBelief normative = BetaBelief::uniform();
  BetaBelief elicited = BetaBelief::uniform();
};

/// Normative posterior from the record's own fitted prior. Throws
/// InvalidInput for records without a prior.
EvaluationRow evaluate_record(const TrialRecord& record);

/// Evaluates every elicitation-condition record, skipping excluded ones
/// unless asked otherwise. Output keeps input order.
std::vector<EvaluationRow> evaluate_records(std::span<const TrialRecord> records,
                                            bool include_excluded = false);

struct GroupSummary {
  Dataset dataset;
  Condition condition;
  LogKldSummary log_kld;
  std::array<std::size_t, 5> location_counts{};
  std::array<std::size_t, 5> variance_counts{};
};

/// One summary per (dataset, condition) present, in enum order.
std::vector<GroupSummary> summarize_by_group(std::span<const EvaluationRow> rows);

const std::vector<std::string_view>& evaluation_csv_columns();
void write_evaluation_rows(std::ostream& out, std::span<const EvaluationRow> rows);
std::vector<EvaluationRow> read_evaluation_rows(std::istream& in);

}  // namespace bayesassist
