#include "pls/error.hpp"

namespace pls {

const char* error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kParse: return "ParseError";
    case ErrorCode::kEmptyInput: return "EmptyInput";
    case ErrorCode::kNotPure: return "NotPure";
    case ErrorCode::kNonMaximalFacet: return "NonMaximalFacet";
    case ErrorCode::kNotAFace: return "NotAFace";
    case ErrorCode::kNotAVertex: return "NotAVertex";
    case ErrorCode::kLabelCollision: return "LabelCollision";
    case ErrorCode::kInvalidLabel: return "InvalidLabel";
    case ErrorCode::kTooManyVertices: return "TooManyVertices";
    case ErrorCode::kLengthMismatch: return "LengthMismatch";
    case ErrorCode::kBoundsViolation: return "BoundsViolation";
    case ErrorCode::kNotCoveringPair: return "NotCoveringPair";
    case ErrorCode::kWitnessVerificationFailed: return "WitnessVerificationFailed";
    case ErrorCode::kShapeMismatch: return "ShapeMismatch";
    case ErrorCode::kInvalidInputCertificate: return "InvalidInputCertificate";
    case ErrorCode::kBudgetExceeded: return "BudgetExceeded";
    case ErrorCode::kHypothesisViolated: return "HypothesisViolated";
    case ErrorCode::kNotASeed: return "NotASeed";
    case ErrorCode::kUnsupportedP: return "UnsupportedP";
    case ErrorCode::kTooSmall: return "TooSmall";
    case ErrorCode::kInvalidParameters: return "InvalidParameters";
    case ErrorCode::kTheoremContradiction: return "TheoremContradiction";
    case ErrorCode::kVoidComplex: return "VoidComplex";
    case ErrorCode::kIo: return "IoError";
    case ErrorCode::kInternal: return "InternalError";
  }
  return "Unknown";
}

}  // namespace pls
