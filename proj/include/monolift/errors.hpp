#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace monolift {

enum class ErrorCode {
  InvalidArgument,
  AllOnesElement,
  EmptyUniverse,
  Unsatisfiable,
  OffSupport,
  BudgetExceeded,
  NotACover,
  EmptyBlock,
  PreconditionViolated,
  ContradictoryTerm,
  OutOfRange,
  ParseError,
  LemmaRequiresEll5,
  SizePreconditionViolated,
  MonotoneSizeTooLarge,
  NotInTopSupport,
  FalseAtPoint,
  DegenerateOpt,
  EmptyOmega,
  ExpectationTooLarge,
  DistTooLarge,
  SizeTooSmall,
  NoConsistentSubset,
  NoConsistentTree,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library carries a machine-checkable code.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace monolift
