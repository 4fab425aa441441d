#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace lr {

enum class ErrorCode {
  Structural,          // malformed shape: non-symmetric matrix, length mismatch, mixed n
  Domain,              // value outside an operation's domain
  Capability,          // size or mode outside what the library supports
  ResourceLimit,       // configured resource budget exhausted
  InvariantViolation,  // a mathematical guarantee failed to hold
  Usage,               // bad command-line invocation
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message, std::string context = {})
      : std::runtime_error(message), code_(code), context_(std::move(context)) {}

  ErrorCode code() const noexcept { return code_; }
  const std::string& context() const noexcept { return context_; }

 private:
  ErrorCode code_;
  std::string context_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message,
                              std::string context = {}) {
  throw Error(code, message, std::move(context));
}

inline void require(bool condition, ErrorCode code, const std::string& message,
                    std::string context = {}) {
  if (!condition) fail(code, message, std::move(context));
}

}  // namespace lr
