#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace wba {

enum class ErrorCode {
  DivisionByZero,
  NotIdempotent,
  ZeroPolynomial,
  DimensionMismatch,
  NotFrobenius,
  UnknownName,
  NotValidated,
  FieldMismatch,
  AmbiguousSolutionSet,
  AntipodeAxiomFailure,
  SearchSpaceTooLarge,
  ClosureFailure,
  MorphismCheckFailed,
  NotAFunctor,
  NotCocommutative,
  BaseMismatch,
  MonoidLawFailure,
  IdempotentFailure,
  RMismatch,
  FactorizationFailure,
  LawFailure,
  ParseError,
};

std::string_view error_code_name(ErrorCode code);

// Every library failure is reported through this exception; the code is
// what callers (and the CLI exit-code logic) dispatch on.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace wba
