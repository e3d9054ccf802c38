#include "bayesassist/csv.hpp"

#include <charconv>
#include <cmath>
#include <istream>
#include <limits>
#include <ostream>

#include "bayesassist/errors.hpp"

namespace bayesassist {

std::string format_double(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buf[64];
  const auto result = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, result.ptr);
}

double parse_double(std::string_view text) {
  if (text == "inf") return std::numeric_limits<double>::infinity();
  if (text == "-inf") return -std::numeric_limits<double>::infinity();
  if (text == "nan") return std::numeric_limits<double>::quiet_NaN();
  double value = 0.0;
  const auto result = std::from_chars(text.data(), text.data() + text.size(), value);
  if (result.ec != std::errc() || result.ptr != text.data() + text.size() || text.empty()) {
    throw InvalidInput("not a number: '" + std::string(text) + "'");
  }
  return value;
}

std::int64_t parse_int(std::string_view text) {
  std::int64_t value = 0;
  const auto result = std::from_chars(text.data(), text.data() + text.size(), value);
  if (result.ec != std::errc() || result.ptr != text.data() + text.size() || text.empty()) {
    throw InvalidInput("not an integer: '" + std::string(text) + "'");
  }
  return value;
}

std::string csv_escape(std::string_view field) {
  if (field.find_first_of(",\"\n\r") == std::string_view::npos) return std::string(field);
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::vector<std::string> split_csv_line(std::string_view line) {
  std::vector<std::string> fields;
  std::string current;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          current += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        current += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.push_back(std::move(current));
      current.clear();
    } else {
      current += c;
    }
  }
  if (quoted) throw InvalidInput("unterminated quoted CSV field");
  fields.push_back(std::move(current));
  return fields;
}

CsvTable CsvTable::read(std::istream& in, bool require_schema) {
  CsvTable table;
  std::string line;
  bool saw_schema = false;
  bool first = true;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (table.header_.empty()) {
      if (!line.empty() && line.front() == '#') {
        if (line.starts_with("#schema=") && line != kSchemaLine) {
          throw InvalidInput("unsupported CSV schema '" + line + "'");
        }
        if (first && line == kSchemaLine) saw_schema = true;
        first = false;
        continue;
      }
      if (line.empty()) continue;
      if (require_schema && !saw_schema) {
        throw InvalidInput("CSV input must begin with '" + std::string(kSchemaLine) + "'");
      }
      table.header_ = split_csv_line(line);
      continue;
    }
    if (line.empty()) continue;
    auto fields = split_csv_line(line);
    if (fields.size() != table.header_.size()) {
      throw InvalidInput("CSV row has " + std::to_string(fields.size()) + " fields, header has " +
                         std::to_string(table.header_.size()));
    }
    table.rows_.push_back(std::move(fields));
  }
  if (table.header_.empty()) throw InvalidInput("CSV input has no header line");
  return table;
}

bool CsvTable::has_column(std::string_view name) const {
  for (const auto& h : header_) {
    if (h == name) return true;
  }
  return false;
}

std::size_t CsvTable::column(std::string_view name) const {
  for (std::size_t i = 0; i < header_.size(); ++i) {
    if (header_[i] == name) return i;
  }
  throw InvalidInput("CSV input lacks column '" + std::string(name) + "'");
}

void CsvTable::require_columns(const std::vector<std::string_view>& names) const {
  for (auto name : names) (void)column(name);
}

void write_csv_header(std::ostream& out, const std::vector<std::string_view>& columns) {
  out << kSchemaLine << '\n';
  for (std::size_t i = 0; i < columns.size(); ++i) {
    if (i) out << ',';
    out << columns[i];
  }
  out << '\n';
}

void write_csv_row(std::ostream& out, const std::vector<std::string>& fields) {
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) out << ',';
    out << csv_escape(fields[i]);
  }
  out << '\n';
}

}  // namespace bayesassist
