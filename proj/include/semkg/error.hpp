#pragma once

#include <stdexcept>
#include <string>

namespace semkg {

// Machine-readable failure categories. The CLI maps each category to a
// stable exit code; library code never exits on its own.
enum class ErrorCode {
  InvalidInput,
  ShapeMismatch,
  Parse,
  Io,
  Cycle,
  Duplicate,
  Unresolved,
  DanglingEav,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void raise(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace semkg
