#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace relwitt {

enum class ErrorCode {
  MalformedSpec,
  RingMismatch,
  UndecidableMembership,
  InfiniteRing,
  TooLarge,
  ParseError,
  ZeroPolynomial,
  NotAlternating,
  OddSize,
  BadIndices,
  IndexOutOfRange,
  ShapeMismatch,
  SizeMismatch,
  NotAUnit,
  NotInC,
  NotStandardForm,
  NotUnipotent,
  NonInvertibleIndex,
  NotLinear,
  NotCompleted,
  NotUnimodular,
  NotRelative,
  UndecidableCompletion,
  NoRelativeCompletionFound,
  VerificationFailed,
  TailAlignmentFailed,
  NoP0Found,
};

std::string_view error_name(ErrorCode code) noexcept;

/// Every failure raised by the library carries one of the codes above so that
/// the command line tool can report it as structured output.
class AlgebraError : public std::runtime_error {
 public:
  AlgebraError(ErrorCode code, const std::string& what);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& what);

}  // namespace relwitt
