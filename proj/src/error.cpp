#include "doerfler/error.hpp"

namespace doerfler {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::kInvalidIndicatorVector:
      return "invalid-indicator-vector";
    case ErrorKind::kParameterOutOfRange:
      return "parameter-out-of-range";
    case ErrorKind::kIndexOutOfRange:
      return "index-out-of-range";
    case ErrorKind::kInvalidArgument:
      return "invalid-argument";
    case ErrorKind::kInstanceTooLarge:
      return "instance-too-large";
    case ErrorKind::kThresholdInconsistent:
      return "threshold-inconsistent";
    case ErrorKind::kPivotOutOfRange:
      return "pivot-out-of-range";
    case ErrorKind::kInvariantViolation:
      return "invariant-violation";
    case ErrorKind::kParseError:
      return "parse-error";
    case ErrorKind::kResourceError:
      return "resource-error";
  }
  return "unknown";
}

}  // namespace doerfler
