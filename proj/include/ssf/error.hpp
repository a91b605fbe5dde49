#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ssf {

enum class ErrorCode {
  NDegenerate,
  LengthMismatch,
  BadLengths,
  BadExponent,
  DepthTooLarge,
  BadIndex,
  Unbounded,
  NonzeroC,
  NotContractive,
  NotContractiveAtSomeS,
  PartitionMismatch,
  NotApplicable,
  PreconditionViolated,
  BadPresetParams,
  InvalidFunction,
  ParseError,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every failure raised by the library carries one of the codes above so that
/// callers (the CLI in particular) can map it to an exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  [[nodiscard]] ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace ssf
