#include "missing_why/error.hpp"

namespace missing_why {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::UnboundFixpointVariable: return "UnboundFixpointVariable";
    case ErrorCode::ExtendedSyntaxInCoreContext: return "ExtendedSyntaxInCoreContext";
    case ErrorCode::InvalidName: return "InvalidName";
    case ErrorCode::UnknownIndividual: return "UnknownIndividual";
    case ErrorCode::SeedInconsistent: return "SeedInconsistent";
    case ErrorCode::InconsistentInput: return "InconsistentInput";
    case ErrorCode::Cancelled: return "Cancelled";
    case ErrorCode::StepBudgetExceeded: return "StepBudgetExceeded";
    case ErrorCode::NotSaturated: return "NotSaturated";
    case ErrorCode::IsEntailed: return "IsEntailed";
    case ErrorCode::BottomInTBox: return "BottomInTBox";
    case ErrorCode::AlreadyEntailed: return "AlreadyEntailed";
    case ErrorCode::EmptySignature: return "EmptySignature";
    case ErrorCode::NonPositiveCount: return "NonPositiveCount";
    case ErrorCode::NonLogicalAxiom: return "NonLogicalAxiom";
    case ErrorCode::EmptyQuery: return "EmptyQuery";
    case ErrorCode::NoQuery: return "NoQuery";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::TooFewNames: return "TooFewNames";
    case ErrorCode::UnknownName: return "UnknownName";
    case ErrorCode::NothingToApply: return "NothingToApply";
    case ErrorCode::InconsistentWithDisjointness: return "InconsistentWithDisjointness";
    case ErrorCode::Unsupported: return "Unsupported";
    case ErrorCode::UnknownSession: return "UnknownSession";
    case ErrorCode::UnknownMethod: return "UnknownMethod";
    case ErrorCode::NoResult: return "NoResult";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::Internal: return "Internal";
  }
  return "Internal";
}

SyntaxError::SyntaxError(int line, int column, std::string expected, const std::string& found)
    : Error(ErrorCode::SyntaxError,
            "line " + std::to_string(line) + ", column " + std::to_string(column) + ": expected " +
                expected + ", found " + found),
      line_(line),
      column_(column),
      expected_(std::move(expected)) {}

}  // namespace missing_why
