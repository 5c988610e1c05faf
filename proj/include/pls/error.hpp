#pragma once

#include <stdexcept>
#include <string>

namespace pls {

enum class ErrorCode {
  kInvalidArgument,
  kParse,
  kEmptyInput,
  kNotPure,
  kNonMaximalFacet,
  kNotAFace,
  kNotAVertex,
  kLabelCollision,
  kInvalidLabel,
  kTooManyVertices,
  kLengthMismatch,
  kBoundsViolation,
  kNotCoveringPair,
  kWitnessVerificationFailed,
  kShapeMismatch,
  kInvalidInputCertificate,
  kBudgetExceeded,
  kHypothesisViolated,
  kNotASeed,
  kUnsupportedP,
  kTooSmall,
  kInvalidParameters,
  kTheoremContradiction,
  kVoidComplex,
  kIo,
  kInternal,
};

/// Stable machine-readable name, e.g. "NotPure".
const char* error_code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace pls
