#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace missing_why {

// Machine-readable failure categories. The HTTP layer maps these 1:1 onto
// error codes, so renaming one is a wire-format change.
enum class ErrorCode {
  SyntaxError,
  UnboundFixpointVariable,
  ExtendedSyntaxInCoreContext,
  InvalidName,
  UnknownIndividual,
  SeedInconsistent,
  InconsistentInput,
  Cancelled,
  StepBudgetExceeded,
  NotSaturated,
  IsEntailed,
  BottomInTBox,
  AlreadyEntailed,
  EmptySignature,
  NonPositiveCount,
  NonLogicalAxiom,
  EmptyQuery,
  NoQuery,
  IndexOutOfRange,
  TooFewNames,
  UnknownName,
  NothingToApply,
  InconsistentWithDisjointness,
  Unsupported,
  UnknownSession,
  UnknownMethod,
  NoResult,
  InvalidArgument,
  Internal,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

class SyntaxError : public Error {
 public:
  SyntaxError(int line, int column, std::string expected, const std::string& found);

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }
  const std::string& expected() const noexcept { return expected_; }

 private:
  int line_;
  int column_;
  std::string expected_;
};

}  // namespace missing_why
