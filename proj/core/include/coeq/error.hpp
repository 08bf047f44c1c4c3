#pragma once

#include <stdexcept>
#include <string>

namespace coeq {

// Every failure mode exposed by the library.  Codes are stable API: tests and
// the CLI switch on them, and the CLI maps them to exit codes (SchemaError ->
// 2, everything else raised during input validation -> 3).
enum class ErrorCode {
  // matrix / space validation
  ZeroRowOrColumn,
  NotIrreducible,
  PermutationMatrix,
  // words and points
  Inadmissible,
  NotEventuallyPeriodicAt,
  NotPeriodic,
  // cylinder functions
  SpaceMismatch,
  WordTooShort,
  // transducers
  UndefinedTransition,
  NullCycle,
  InadmissibleOutput,
  UnknownState,
  // orbit-equivalence data
  InvalidCoeSpec,
  AlternativeCocycleInvalid,
  OrbitEquationViolated,
  // cohomology gates
  NotOrderUnit,
  // measures
  NotStochastic,
  IncompatibleSupport,
  NoConvergence,
  // I/O
  SchemaError,
  // misused API (bad bounds, r <= s, ...)
  PreconditionFailed,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void raise(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace coeq
