#include "ssf/error.hpp"

namespace ssf {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NDegenerate: return "NDegenerate";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::BadLengths: return "BadLengths";
    case ErrorCode::BadExponent: return "BadExponent";
    case ErrorCode::DepthTooLarge: return "DepthTooLarge";
    case ErrorCode::BadIndex: return "BadIndex";
    case ErrorCode::Unbounded: return "Unbounded";
    case ErrorCode::NonzeroC: return "NonzeroC";
    case ErrorCode::NotContractive: return "NotContractive";
    case ErrorCode::NotContractiveAtSomeS: return "NotContractiveAtSomeS";
    case ErrorCode::PartitionMismatch: return "PartitionMismatch";
    case ErrorCode::NotApplicable: return "NotApplicable";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::BadPresetParams: return "BadPresetParams";
    case ErrorCode::InvalidFunction: return "InvalidFunction";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

}  // namespace ssf
