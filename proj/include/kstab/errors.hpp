#pragma once

#include <stdexcept>
#include <string>

namespace kstab {

enum class ErrorCode {
  // kernel
  DivisionByZero,
  IntervalOutOfDomain,
  DomainMismatch,
  InvalidInterval,
  Overflow,
  BadBracket,
  NoConvergence,
  // data model / ingestion
  ParseError,
  ValidationError,
  UnknownName,
  UnknownPoint,
  // stability pipeline
  DegenerateVolume,
  NoRoot,
  NotAWeight,
  NotLogFano,
  MuOutOfRange,
  PreconditionFailed,
  InternalInconsistency,
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

// Process exit code contract, shared by the CLI and its tests:
//   2  bad input (unknown name, parse or validation failure)
//   3  precondition not met (not a weight, not log Fano, no root, ...)
//   1  internal fault
int exit_code_for(ErrorCode code);

}  // namespace kstab
