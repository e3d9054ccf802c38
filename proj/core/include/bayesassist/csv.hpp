#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace bayesassist {

/// Every CSV written by the library starts with this comment line.
inline constexpr std::string_view kSchemaLine = "#schema=1";

/// Shortest decimal that round-trips to the same double ("inf", "-inf", "nan"
/// for non-finite values).
std::string format_double(double value);
double parse_double(std::string_view text);
std::int64_t parse_int(std::string_view text);

/// Quotes a field when it contains a comma, quote or newline.
std::string csv_escape(std::string_view field);
std::vector<std::string> split_csv_line(std::string_view line);

/// A parsed CSV: header row plus data rows, with schema comment checked.
class CsvTable {
 public:
  /// Reads from `in`. Lines starting with '#' before the header are comments;
  /// if `require_schema` the first must equal kSchemaLine.
  static CsvTable read(std::istream& in, bool require_schema = true);

  const std::vector<std::string>& header() const noexcept { return header_; }
  const std::vector<std::vector<std::string>>& rows() const noexcept { return rows_; }
  /// Throws InvalidInput when absent.
  std::size_t column(std::string_view name) const;
  bool has_column(std::string_view name) const;
  /// Throws InvalidInput unless every name is present.
  void require_columns(const std::vector<std::string_view>& names) const;

 private:
  std::vector<std::string> header_;
  std::vector<std::vector<std::string>> rows_;
};

/// Writes `#schema=1`, then a header line.
void write_csv_header(std::ostream& out, const std::vector<std::string_view>& columns);
void write_csv_row(std::ostream& out, const std::vector<std::string>& fields);

}  // namespace bayesassist
