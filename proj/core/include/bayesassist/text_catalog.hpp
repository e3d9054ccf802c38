#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <string_view>

namespace bayesassist {

/// Keyed message templates with `{name}` placeholders. The built-in English
/// catalog mirrors resources/text/en.json; a catalog loaded from file
/// overrides individual keys and falls back to the defaults for the rest.
class TextCatalog {
 public:
  using Variables = std::map<std::string, std::string, std::less<>>;

  static const TextCatalog& defaults();
  static TextCatalog from_json_file(const std::filesystem::path& path);
  static TextCatalog from_json_string(std::string_view json);

  /// Throws NotFound for an unknown key and InvalidInput when a placeholder
  /// has no value.
  std::string render(std::string_view key, const Variables& variables = {}) const;

  const std::string& raw(std::string_view key) const;
  const std::map<std::string, std::string, std::less<>>& entries() const noexcept {
    return templates_;
  }

 private:
  std::map<std::string, std::string, std::less<>> templates_;
};

/// 0.153 -> "15.3", 0.15 -> "15": a proportion as a percentage with at most
/// one decimal.
std::string format_percent(double proportion);

}  // namespace bayesassist
