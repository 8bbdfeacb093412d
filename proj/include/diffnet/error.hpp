#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace diffnet {

enum class ErrorCode {
  Io,
  Format,
  Invariant,
  InvalidArgument,
  Manifest,
};

/// Stable machine-parsable token, e.g. "E_FORMAT".
std::string_view error_code_name(ErrorCode code);

/// Process exit status used by the command-line tool for this code.
int error_exit_status(ErrorCode code);

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

}  // namespace diffnet
