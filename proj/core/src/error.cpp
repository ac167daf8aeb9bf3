#include "relwitt/error.hpp"

namespace relwitt {

std::string_view error_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::MalformedSpec: return "MalformedSpec";
    case ErrorCode::RingMismatch: return "RingMismatch";
    case ErrorCode::UndecidableMembership: return "UndecidableMembership";
    case ErrorCode::InfiniteRing: return "InfiniteRing";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::NotAlternating: return "NotAlternating";
    case ErrorCode::OddSize: return "OddSize";
    case ErrorCode::BadIndices: return "BadIndices";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::SizeMismatch: return "SizeMismatch";
    case ErrorCode::NotAUnit: return "NotAUnit";
    case ErrorCode::NotInC: return "NotInC";
    case ErrorCode::NotStandardForm: return "NotStandardForm";
    case ErrorCode::NotUnipotent: return "NotUnipotent";
    case ErrorCode::NonInvertibleIndex: return "NonInvertibleIndex";
    case ErrorCode::NotLinear: return "NotLinear";
    case ErrorCode::NotCompleted: return "NotCompleted";
    case ErrorCode::NotUnimodular: return "NotUnimodular";
    case ErrorCode::NotRelative: return "NotRelative";
    case ErrorCode::UndecidableCompletion: return "UndecidableCompletion";
    case ErrorCode::NoRelativeCompletionFound: return "NoRelativeCompletionFound";
    case ErrorCode::VerificationFailed: return "VerificationFailed";
    case ErrorCode::TailAlignmentFailed: return "TailAlignmentFailed";
    case ErrorCode::NoP0Found: return "NoP0Found";
  }
  return "Unknown";
}

AlgebraError::AlgebraError(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(error_name(code)) + ": " + what), code_(code) {}

void fail(ErrorCode code, const std::string& what) { throw AlgebraError(code, what); }

}  // namespace relwitt
