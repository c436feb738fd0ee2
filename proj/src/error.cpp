#include "hfk11/error.hpp"

namespace hfk11 {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kParameterRange: return "parameter-range";
    case ErrorCode::kValidity: return "validity";
    case ErrorCode::kCrossingArcs: return "crossing-arcs";
    case ErrorCode::kCoverage: return "coverage";
    case ErrorCode::kInvalidDiagram: return "invalid-diagram";
    case ErrorCode::kInputFormat: return "input-format";
    case ErrorCode::kRealizationFailure: return "realization-failure";
    case ErrorCode::kTraceFailure: return "trace-failure";
    case ErrorCode::kWindowInstability: return "window-instability";
    case ErrorCode::kInconsistentSystem: return "inconsistent-system";
    case ErrorCode::kNoDomain: return "no-domain";
    case ErrorCode::kLabelViolation: return "label-violation";
    case ErrorCode::kNotACycle: return "not-a-cycle";
    case ErrorCode::kNoSymmetricShift: return "no-symmetric-shift";
    case ErrorCode::kNonUnitAugmentation: return "non-unit-augmentation";
    case ErrorCode::kAsymmetricResult: return "asymmetric-result";
    case ErrorCode::kInconsistentHomology: return "inconsistent-homology";
    case ErrorCode::kBoundarySquared: return "boundary-squared-nonzero";
    case ErrorCode::kFiltrationViolation: return "filtration-violation";
  }
  return "unknown";
}

bool is_input_error(ErrorCode code) {
  switch (code) {
    case ErrorCode::kParameterRange:
    case ErrorCode::kValidity:
    case ErrorCode::kCrossingArcs:
    case ErrorCode::kCoverage:
    case ErrorCode::kInvalidDiagram:
    case ErrorCode::kInputFormat:
    case ErrorCode::kRealizationFailure:
      return true;
    default:
      return false;
  }
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
      code_(code) {}

}  // namespace hfk11
