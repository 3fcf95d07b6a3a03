#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace factorpack {

enum class ErrorCode {
  MissingEdge,
  DuplicateEdge,
  InvalidEdge,
  RegularityViolation,
  ConservationViolation,
  NotGraphic,
  NotGraphicMinusK,
  OddVertexCount,
  SearchExhausted,
  PreconditionViolated,
  ChainStuck,
  NotAlternating,
  OddLengthPath,
  InvalidInitial,
  NotRegular,
  EvenCycle,
  CaseAnalysisExhausted,
  TooManyOneFactors,
  NoResidual,
  NotEvenRegular,
  KTooSmall,
  BudgetExceeded,
  InvalidArgument,
  ParseError,
};

std::string_view to_string(ErrorCode code);

// Every failure in the library surfaces as this exception; the code lets
// callers (the CLI in particular) map failures onto exit statuses.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace factorpack
