#include "bayesassist/records_csv.hpp"

#include <istream>
#include <ostream>
#include <string>

#include "bayesassist/csv.hpp"
#include "bayesassist/errors.hpp"

namespace bayesassist {

namespace {

std::vector<std::string> interval_fields(const std::optional<ElicitedBelief>& belief) {
  if (!belief) return {"", "", "", "", ""};
  return {format_double(belief->interval.point_estimate), format_double(belief->interval.lower),
          format_double(belief->interval.upper), format_double(belief->fitted.alpha()),
          format_double(belief->fitted.beta())};
}

std::string format_timestamps(const std::vector<std::pair<std::string, std::int64_t>>& stamps) {
  std::string out;
  for (const auto& [step, ms] : stamps) {
    if (!out.empty()) out += ';';
    out += step + ':' + std::to_string(ms);
  }
  return out;
}

std::vector<std::pair<std::string, std::int64_t>> parse_timestamps(std::string_view text) {
  std::vector<std::pair<std::string, std::int64_t>> out;
  while (!text.empty()) {
    const auto end = text.find(';');
    const std::string_view item = text.substr(0, end);
    const auto colon = item.find(':');
    if (colon == std::string_view::npos) throw InvalidInput("malformed timestamp entry");
    out.emplace_back(std::string(item.substr(0, colon)), parse_int(item.substr(colon + 1)));
    if (end == std::string_view::npos) break;
    text.remove_prefix(end + 1);
  }
  return out;
}

std::optional<ElicitedBelief> read_belief(const CsvTable& t, const std::vector<std::string>& row,
                                          std::string_view prefix) {
  const auto get = [&](const char* suffix) -> const std::string& {
    return row[t.column(std::string(prefix) + suffix)];
  };
  if (get("_point").empty()) return std::nullopt;
  ElicitedBelief b;
  b.interval.point_estimate = parse_double(get("_point"));
  b.interval.lower = parse_double(get("_lower"));
  b.interval.upper = parse_double(get("_upper"));
  b.interval.validate();
  b.fitted = BetaBelief(parse_double(get("_alpha")), parse_double(get("_beta")));
  return b;
}

}  // namespace

const std::vector<std::string_view>& trial_csv_columns() {
  static const std::vector<std::string_view> columns{
      "participant_id",  "condition",       "dataset",         "successes",
      "sample_size",     "excluded",        "prior_point",     "prior_lower",
      "prior_upper",     "prior_alpha",     "prior_beta",      "posterior_point",
      "posterior_lower", "posterior_upper", "posterior_alpha", "posterior_beta",
      "trust_rating",    "gender",          "education",       "age_band",
      "exclusion_answer", "timestamps"};
  return columns;
}

void write_trial_records(std::ostream& out, std::span<const TrialRecord> records) {
  write_csv_header(out, trial_csv_columns());
  for (const auto& r : records) {
    const DatasetSpec spec = dataset_spec(r.dataset);
    std::vector<std::string> fields{r.participant_id,
                                    std::string(to_string(r.condition)),
                                    std::string(to_string(r.dataset)),
                                    std::to_string(spec.successes()),
                                    std::to_string(spec.sample_size),
                                    r.excluded() ? "1" : "0"};
    for (auto& f : interval_fields(r.prior)) fields.push_back(std::move(f));
    for (auto& f : interval_fields(r.posterior)) fields.push_back(std::move(f));
    fields.push_back(std::to_string(r.trust_rating));
    fields.push_back(r.demographics.gender);
    fields.push_back(r.demographics.education);
    fields.push_back(r.demographics.age_band);
    fields.push_back(std::string(to_string(r.exclusion_answer)));
    fields.push_back(format_timestamps(r.timestamps));
    write_csv_row(out, fields);
  }
}

std::vector<TrialRecord> read_trial_records(std::istream& in) {
  const CsvTable table = CsvTable::read(in);
  table.require_columns(trial_csv_columns());
  std::vector<TrialRecord> records;
  records.reserve(table.rows().size());
  for (const auto& row : table.rows()) {
    const auto get = [&](std::string_view name) -> const std::string& {
      return row[table.column(name)];
    };
    TrialRecord r;
    r.participant_id = get("participant_id");
    r.condition = parse_condition(get("condition"));
    r.dataset = parse_dataset(get("dataset"));
    const DatasetSpec spec = dataset_spec(r.dataset);
    if (parse_int(get("successes")) != static_cast<std::int64_t>(spec.successes()) ||
        parse_int(get("sample_size")) != static_cast<std::int64_t>(spec.sample_size)) {
      throw InvalidInput("record " + r.participant_id + ": data columns disagree with dataset " +
                         std::string(to_string(r.dataset)));
    }
    r.prior = read_belief(table, row, "prior");
    auto posterior = read_belief(table, row, "posterior");
    if (!posterior) throw InvalidInput("record " + r.participant_id + " has no posterior");
    r.posterior = *posterior;
    r.trust_rating = static_cast<int>(parse_int(get("trust_rating")));
    r.demographics = {get("gender"), get("education"), get("age_band")};
    r.exclusion_answer = parse_exclusion_answer(get("exclusion_answer"));
    r.timestamps = parse_timestamps(get("timestamps"));
    r.validate();
    records.push_back(std::move(r));
  }
  return records;
}

}  // namespace bayesassist
