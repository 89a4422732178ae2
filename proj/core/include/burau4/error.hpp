#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace burau4 {

enum class ErrorCode {
  DerivedNegative,
  OddHalf,
  NoZeroWeight,
  StepBudgetExceeded,
  LeftOverflow,
  ModeMisuse,
  InvalidWeights,
  NotAnArcBoundary,
  SymbolUncovered,
  EmptyLevel,
  PreconditionViolated,
  ArithmeticOverflow,
  ParseError,
  CheckpointMismatch,
  IoError,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every failure raised by the library carries one of the codes above so
/// that callers (the CLI in particular) can map it onto an exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace burau4
