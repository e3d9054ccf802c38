#include "bayesassist/text_catalog.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "bayesassist/errors.hpp"

namespace bayesassist {

namespace {

// Generated at configure time from resources/text/en.json.
constexpr std::string_view kDefaultCatalogJson =
#include "default_text_catalog.inc"
    ;

void merge_json(std::map<std::string, std::string, std::less<>>& into, std::string_view json) {
  nlohmann::json parsed;
  try {
    parsed = nlohmann::json::parse(json);
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("text catalog is not valid JSON: ") + e.what());
  }
  if (!parsed.is_object()) throw InvalidInput("text catalog must be a JSON object");
  for (const auto& [key, value] : parsed.items()) {
    if (!value.is_string()) throw InvalidInput("text catalog entry '" + key + "' is not a string");
    into[key] = value.get<std::string>();
  }
}

}  // namespace

const TextCatalog& TextCatalog::defaults() {
  static const TextCatalog catalog = [] {
    TextCatalog c;
    merge_json(c.templates_, kDefaultCatalogJson);
    return c;
  }();
  return catalog;
}

TextCatalog TextCatalog::from_json_string(std::string_view json) {
  TextCatalog c = defaults();
  merge_json(c.templates_, json);
  return c;
}

TextCatalog TextCatalog::from_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open text catalog " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return from_json_string(buffer.str());
}

const std::string& TextCatalog::raw(std::string_view key) const {
  const auto it = templates_.find(key);
  if (it == templates_.end()) throw NotFound("no text template named '" + std::string(key) + "'");
  return it->second;
}

std::string TextCatalog::render(std::string_view key, const Variables& variables) const {
  const std::string& pattern = raw(key);
  std::string out;
  out.reserve(pattern.size() + 32);
  std::size_t pos = 0;
  while (pos < pattern.size()) {
    const std::size_t open = pattern.find('{', pos);
    if (open == std::string::npos) {
      out.append(pattern, pos, std::string::npos);
      break;
    }
    const std::size_t close = pattern.find('}', open);
    if (close == std::string::npos) {
      out.append(pattern, pos, std::string::npos);
      break;
    }
    out.append(pattern, pos, open - pos);
    const std::string_view name(pattern.data() + open + 1, close - open - 1);
    const auto it = variables.find(name);
    if (it == variables.end()) {
      throw InvalidInput("template '" + std::string(key) + "' needs a value for {" +
                         std::string(name) + "}");
    }
    out += it->second;
    pos = close + 1;
  }
  return out;
}

std::string format_percent(double proportion) {
  const double tenths = std::round(proportion * 1000.0);
  const long long whole = static_cast<long long>(tenths) / 10;
  const long long frac = static_cast<long long>(tenths) % 10;
  std::string s = std::to_string(whole);
  if (frac != 0) s += "." + std::to_string(frac < 0 ? -frac : frac);
  return s;
}

}  // namespace bayesassist
