#include "rank1/error.hpp"

namespace rank1 {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::QInvalid: return "QInvalid";
    case Errc::SpacerCountMismatch: return "SpacerCountMismatch";
    case Errc::SpacerInvalid: return "SpacerInvalid";
    case Errc::H0Invalid: return "H0Invalid";
    case Errc::TailInvalid: return "TailInvalid";
    case Errc::Overflow: return "Overflow";
    case Errc::BudgetExceeded: return "BudgetExceeded";
    case Errc::NoWitness: return "NoWitness";
    case Errc::CopyIndexOutOfRange: return "CopyIndexOutOfRange";
    case Errc::WindowExceedsDepth: return "WindowExceedsDepth";
    case Errc::TooFewReturns: return "TooFewReturns";
    case Errc::DepthMismatch: return "DepthMismatch";
    case Errc::NoStabilization: return "NoStabilization";
    case Errc::OffsetExceedsRadius: return "OffsetExceedsRadius";
    case Errc::NormalizationRequired: return "NormalizationRequired";
    case Errc::InsufficientContext: return "InsufficientContext";
    case Errc::OffsetsInconsistent: return "OffsetsInconsistent";
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::ParseError: return "ParseError";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& message)
    : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

void fail(Errc code, const std::string& message) { throw Error(code, message); }

}  // namespace rank1
