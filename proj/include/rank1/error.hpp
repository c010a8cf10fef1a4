#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace rank1 {

enum class Errc {
  QInvalid,
  SpacerCountMismatch,
  SpacerInvalid,
  H0Invalid,
  TailInvalid,
  Overflow,
  BudgetExceeded,
  NoWitness,
  CopyIndexOutOfRange,
  WindowExceedsDepth,
  TooFewReturns,
  DepthMismatch,
  NoStabilization,
  OffsetExceedsRadius,
  NormalizationRequired,
  InsufficientContext,
  OffsetsInconsistent,
  InvalidArgument,
  ParseError,
};

std::string_view errc_name(Errc code) noexcept;

// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message);

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] void fail(Errc code, const std::string& message);

}  // namespace rank1
