#include "io.hpp"

#include <iostream>
#include <iterator>
#include <random>

#include "bayesassist/errors.hpp"

namespace bayesassist::cli {

namespace {

bool is_stdio(const std::string& path) { return path.empty() || path == "-"; }

}  // namespace

Output::Output(std::string path) : path_(std::move(path)) {}

Output::~Output() {
  if (!temp_.empty() && !committed_) {
    std::error_code ec;
    std::filesystem::remove(temp_, ec);
  }
}

void Output::commit() {
  if (committed_) return;
  if (is_stdio(path_)) {
    std::cout << buffer_.str();
    std::cout.flush();
    committed_ = true;
    return;
  }
  const std::filesystem::path target(path_);
  std::random_device rd;
  temp_ = target;
  temp_ += ".tmp-" + std::to_string(rd());
  {
    std::ofstream out(temp_, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot write " + temp_.string());
    const std::string data = buffer_.str();
    out.write(data.data(), static_cast<std::streamsize>(data.size()));
    out.close();
    if (!out) throw IoError("failed writing " + temp_.string());
  }
  std::error_code ec;
  std::filesystem::rename(temp_, target, ec);
  if (ec) throw IoError("cannot move output into place at " + path_ + ": " + ec.message());
  committed_ = true;
}

std::string read_input(const std::string& path) {
  if (is_stdio(path)) {
    return std::string(std::istreambuf_iterator<char>(std::cin), {});
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path);
  return std::string(std::istreambuf_iterator<char>(in), {});
}

}  // namespace bayesassist::cli
