#pragma once

#include <stdexcept>
#include <string>

namespace veralg {

enum class ErrorCode {
  NotPrime,
  ReduciblePolynomial,
  DimensionMismatch,
  UnsupportedEntry,
  OrbitCapExceeded,
  InfiniteRootSystem,
  NonTerminating,
  NoInvariantForm,
  DegenerateForm,
  NotNilpotentOrderP,
  DegenerateCase,
  NotEquivariant,
  NotSL2Node,
  DerivationOrderViolation,
  DegenerateInducedForm,
  PreconditionNotGood,
  RelationFailure,
  ParseError,
  ValidationError,
  GoldenMissing,
  InvalidArgument,
};

const char* error_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what);
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace veralg
