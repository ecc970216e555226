#pragma once

#include <stdexcept>
#include <string>

namespace oabev {

// Stable machine-parseable error codes. The CLI prints them as
// "OABEV_ERROR <code>: <message>" on stderr and exits nonzero.
enum class ErrorCode {
  kConfig,
  kIo,
  kParse,
  kInvalidDepth,
  kPixelBounds,
  kInvalidRotation,
  kRange,
  kShape,
  kEmptyForeground,
  kNumeric,
  kGeneration,
  kInternal,
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

[[noreturn]] void fail(ErrorCode code, const std::string& message);

}  // namespace oabev
