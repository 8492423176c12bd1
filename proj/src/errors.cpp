#include "monolift/errors.hpp"

namespace monolift {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::AllOnesElement: return "AllOnesElement";
    case ErrorCode::EmptyUniverse: return "EmptyUniverse";
    case ErrorCode::Unsatisfiable: return "Unsatisfiable";
    case ErrorCode::OffSupport: return "OffSupport";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::NotACover: return "NotACover";
    case ErrorCode::EmptyBlock: return "EmptyBlock";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::ContradictoryTerm: return "ContradictoryTerm";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::LemmaRequiresEll5: return "LemmaRequiresEll5";
    case ErrorCode::SizePreconditionViolated: return "SizePreconditionViolated";
    case ErrorCode::MonotoneSizeTooLarge: return "MonotoneSizeTooLarge";
    case ErrorCode::NotInTopSupport: return "NotInTopSupport";
    case ErrorCode::FalseAtPoint: return "FalseAtPoint";
    case ErrorCode::DegenerateOpt: return "DegenerateOpt";
    case ErrorCode::EmptyOmega: return "EmptyOmega";
    case ErrorCode::ExpectationTooLarge: return "ExpectationTooLarge";
    case ErrorCode::DistTooLarge: return "DistTooLarge";
    case ErrorCode::SizeTooSmall: return "SizeTooSmall";
    case ErrorCode::NoConsistentSubset: return "NoConsistentSubset";
    case ErrorCode::NoConsistentTree: return "NoConsistentTree";
  }
  return "Unknown";
}

}  // namespace monolift
