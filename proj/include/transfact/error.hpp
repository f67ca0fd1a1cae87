#pragma once

#include <stdexcept>
#include <string>

namespace transfact {

enum class ErrorCode {
  invalid_argument = 1,
  degree_mismatch,
  parse,
  guard_exceeded,
  precondition,
  unsupported,
  missing_counts,
  io,
  internal,
};

/// Every failure raised by the library carries one of these codes; the C API
/// maps them one-to-one onto tf_status values.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace transfact
