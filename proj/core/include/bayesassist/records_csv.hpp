#pragma once

#include <iosfwd>
#include <span>
#include <string_view>
#include <vector>

#include "bayesassist/study.hpp"

namespace bayesassist {

/// Column order of the trial-record CSV (schema 1). Proportions are decimals;
/// prior columns are empty for no-elicitation conditions; `timestamps` is a
/// ';'-separated list of step:epoch_ms.
const std::vector<std::string_view>& trial_csv_columns();

void write_trial_records(std::ostream& out, std::span<const TrialRecord> records);

/// Parses and validates every row. Fitted Beta parameters are taken from the
/// file, not refitted.
std::vector<TrialRecord> read_trial_records(std::istream& in);

}  // namespace bayesassist
