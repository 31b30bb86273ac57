#include "eqc/Error.hpp"

namespace eqc {

std::string_view toString(ErrorCode code) noexcept {
  switch (code) {
  case ErrorCode::NonFiniteValue:
    return "NonFiniteValue";
  case ErrorCode::LevelOrderViolation:
    return "LevelOrderViolation";
  case ErrorCode::DimensionMismatch:
    return "DimensionMismatch";
  case ErrorCode::QubitOutOfRange:
    return "QubitOutOfRange";
  case ErrorCode::OverlappingControlTarget:
    return "OverlappingControlTarget";
  case ErrorCode::IndexOutOfRange:
    return "IndexOutOfRange";
  case ErrorCode::TooFewGates:
    return "TooFewGates";
  case ErrorCode::UnsupportedGate:
    return "UnsupportedGate";
  case ErrorCode::QubitCountMismatch:
    return "QubitCountMismatch";
  case ErrorCode::NotADifference:
    return "NotADifference";
  case ErrorCode::InvalidArgument:
    return "InvalidArgument";
  }
  return "Unknown";
}

} // namespace eqc
