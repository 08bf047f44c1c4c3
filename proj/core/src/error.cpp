#include "coeq/error.hpp"

namespace coeq {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::ZeroRowOrColumn: return "ZeroRowOrColumn";
    case ErrorCode::NotIrreducible: return "NotIrreducible";
    case ErrorCode::PermutationMatrix: return "PermutationMatrix";
    case ErrorCode::Inadmissible: return "Inadmissible";
    case ErrorCode::NotEventuallyPeriodicAt: return "NotEventuallyPeriodicAt";
    case ErrorCode::NotPeriodic: return "NotPeriodic";
    case ErrorCode::SpaceMismatch: return "SpaceMismatch";
    case ErrorCode::WordTooShort: return "WordTooShort";
    case ErrorCode::UndefinedTransition: return "UndefinedTransition";
    case ErrorCode::NullCycle: return "NullCycle";
    case ErrorCode::InadmissibleOutput: return "InadmissibleOutput";
    case ErrorCode::UnknownState: return "UnknownState";
    case ErrorCode::InvalidCoeSpec: return "InvalidCoeSpec";
    case ErrorCode::AlternativeCocycleInvalid: return "AlternativeCocycleInvalid";
    case ErrorCode::OrbitEquationViolated: return "OrbitEquationViolated";
    case ErrorCode::NotOrderUnit: return "NotOrderUnit";
    case ErrorCode::NotStochastic: return "NotStochastic";
    case ErrorCode::IncompatibleSupport: return "IncompatibleSupport";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::SchemaError: return "SchemaError";
    case ErrorCode::PreconditionFailed: return "PreconditionFailed";
  }
  return "UnknownError";
}

}  // namespace coeq
