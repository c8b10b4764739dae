#include "kstab/errors.hpp"

namespace kstab {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::IntervalOutOfDomain: return "IntervalOutOfDomain";
    case ErrorCode::DomainMismatch: return "DomainMismatch";
    case ErrorCode::InvalidInterval: return "InvalidInterval";
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::BadBracket: return "BadBracket";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::ValidationError: return "ValidationError";
    case ErrorCode::UnknownName: return "UnknownName";
    case ErrorCode::UnknownPoint: return "UnknownPoint";
    case ErrorCode::DegenerateVolume: return "DegenerateVolume";
    case ErrorCode::NoRoot: return "NoRoot";
    case ErrorCode::NotAWeight: return "NotAWeight";
    case ErrorCode::NotLogFano: return "NotLogFano";
    case ErrorCode::MuOutOfRange: return "MuOutOfRange";
    case ErrorCode::PreconditionFailed: return "PreconditionFailed";
    case ErrorCode::InternalInconsistency: return "InternalInconsistency";
  }
  return "Error";
}

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError:
    case ErrorCode::ValidationError:
    case ErrorCode::UnknownName:
    case ErrorCode::UnknownPoint:
      return 2;
    case ErrorCode::NotAWeight:
    case ErrorCode::NotLogFano:
    case ErrorCode::MuOutOfRange:
    case ErrorCode::NoRoot:
    case ErrorCode::PreconditionFailed:
    case ErrorCode::BadBracket:
    case ErrorCode::NoConvergence:
      return 3;
    default:
      return 1;
  }
}

}  // namespace kstab
