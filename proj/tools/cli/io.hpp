#pragma once

#include <filesystem>
#include <fstream>
#include <iosfwd>
#include <memory>
#include <sstream>
#include <string>

namespace bayesassist::cli {

/// An output destination that only appears once commit() succeeds. Files are
/// written to a sibling temporary and renamed; "-" or "" is stdout.
class Output {
 public:
  explicit Output(std::string path);
  ~Output();
  Output(const Output&) = delete;
  Output& operator=(const Output&) = delete;

  std::ostream& stream() { return buffer_; }
  void commit();
  const std::string& path() const { return path_; }

 private:
  std::string path_;
  std::ostringstream buffer_;
  std::filesystem::path temp_;
  bool committed_ = false;
};

/// Reads all of `path` ("-" for stdin). Throws IoError if unreadable.
std::string read_input(const std::string& path);

}  // namespace bayesassist::cli
