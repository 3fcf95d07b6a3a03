#include "factorpack/error.hpp"

namespace factorpack {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::MissingEdge: return "MissingEdge";
    case ErrorCode::DuplicateEdge: return "DuplicateEdge";
    case ErrorCode::InvalidEdge: return "InvalidEdge";
    case ErrorCode::RegularityViolation: return "RegularityViolation";
    case ErrorCode::ConservationViolation: return "ConservationViolation";
    case ErrorCode::NotGraphic: return "NotGraphic";
    case ErrorCode::NotGraphicMinusK: return "NotGraphicMinusK";
    case ErrorCode::OddVertexCount: return "OddVertexCount";
    case ErrorCode::SearchExhausted: return "SearchExhausted";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::ChainStuck: return "ChainStuck";
    case ErrorCode::NotAlternating: return "NotAlternating";
    case ErrorCode::OddLengthPath: return "OddLengthPath";
    case ErrorCode::InvalidInitial: return "InvalidInitial";
    case ErrorCode::NotRegular: return "NotRegular";
    case ErrorCode::EvenCycle: return "EvenCycle";
    case ErrorCode::CaseAnalysisExhausted: return "CaseAnalysisExhausted";
    case ErrorCode::TooManyOneFactors: return "TooManyOneFactors";
    case ErrorCode::NoResidual: return "NoResidual";
    case ErrorCode::NotEvenRegular: return "NotEvenRegular";
    case ErrorCode::KTooSmall: return "KTooSmall";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message),
      code_(code) {}

}  // namespace factorpack
