#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hfk11 {

enum class ErrorCode {
  // Input problems: the user handed us something outside the supported range.
  kParameterRange,
  kValidity,
  kCrossingArcs,
  kCoverage,
  kInvalidDiagram,
  kInputFormat,
  // Geometry could not be built for an otherwise valid diagram.
  kRealizationFailure,
  kTraceFailure,
  // Internal consistency failures. Each one means a theorem was violated.
  kWindowInstability,
  kInconsistentSystem,
  kNoDomain,
  kLabelViolation,
  kNotACycle,
  kNoSymmetricShift,
  kNonUnitAugmentation,
  kAsymmetricResult,
  kInconsistentHomology,
  kBoundarySquared,
  kFiltrationViolation,
};

std::string_view error_code_name(ErrorCode code);

/// True for codes that indicate bad user input rather than an internal bug.
bool is_input_error(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace hfk11
