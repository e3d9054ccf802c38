#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace bayesassist {

enum class ErrorCode {
  invalid_input,
  fit_failure,
  not_converged,
  conflict,
  protocol_violation,
  not_found,
  io_error,
};

constexpr std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::invalid_input: return "invalid_input";
    case ErrorCode::fit_failure: return "fit_failure";
    case ErrorCode::not_converged: return "not_converged";
    case ErrorCode::conflict: return "conflict";
    case ErrorCode::protocol_violation: return "protocol_violation";
    case ErrorCode::not_found: return "not_found";
    case ErrorCode::io_error: return "io_error";
  }
  return "unknown";
}

/// Base of every exception thrown by the library. The code is stable and is
/// what the CLI and HTTP layers report in their error JSON.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

class InvalidInput : public Error {
 public:
  explicit InvalidInput(const std::string& message)
      : Error(ErrorCode::invalid_input, message) {}
};

class NotConverged : public Error {
 public:
  explicit NotConverged(const std::string& message)
      : Error(ErrorCode::not_converged, message) {}
};

class Conflict : public Error {
 public:
  explicit Conflict(const std::string& message)
      : Error(ErrorCode::conflict, message) {}
};

class ProtocolViolation : public Error {
 public:
  explicit ProtocolViolation(const std::string& message)
      : Error(ErrorCode::protocol_violation, message) {}
};

class NotFound : public Error {
 public:
  explicit NotFound(const std::string& message)
      : Error(ErrorCode::not_found, message) {}
};

class IoError : public Error {
 public:
  explicit IoError(const std::string& message)
      : Error(ErrorCode::io_error, message) {}
};

}  // namespace bayesassist
