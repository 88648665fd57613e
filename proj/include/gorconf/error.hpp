#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace gorconf {

enum class ErrorCode {
  NotOSequence,
  NotSISequence,
  CodimTooSmall,
  NotLexSegment,
  DegreeExceedsT,
  SocleTooSmall,
  SocleParity,
  NotSubconfiguration,
  NotDominated,
  NegativeResidual,
  OracleDisagreement,
  RegularityHypothesisViolated,
  NotPure,
  ScaleExceeded,
  ContextMismatch,
  Overflow,
  InvalidArgument,
};

std::string_view error_code_name(ErrorCode code);

// Domain error raised by every library operation whose precondition fails.
// The message names the violated precondition.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace gorconf
