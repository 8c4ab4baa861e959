#pragma once

#include <stdexcept>
#include <string>

namespace hkl {

enum class ErrorCode {
  InvalidArgument = 1,
  Parse = 2,
  Io = 3,
  Validation = 4,
  CheckFailed = 5,
  Internal = 6,
};

// Single exception type for the core; the C layer maps `code()` onto hkl_status.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

}  // namespace hkl
