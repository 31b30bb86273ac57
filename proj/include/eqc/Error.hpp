#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace eqc {

enum class ErrorCode {
  NonFiniteValue,
  LevelOrderViolation,
  DimensionMismatch,
  QubitOutOfRange,
  OverlappingControlTarget,
  IndexOutOfRange,
  TooFewGates,
  UnsupportedGate,
  QubitCountMismatch,
  NotADifference,
  InvalidArgument,
};

std::string_view toString(ErrorCode code) noexcept;

/// Single exception type for the library; `code()` identifies the failure.
class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(toString(code)) + ": " + message),
        code_(code) {}

  [[nodiscard]] ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

} // namespace eqc
