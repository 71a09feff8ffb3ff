#pragma once

#include <stdexcept>
#include <string>

namespace kb {

enum class ErrorCode {
  InvalidArgument,
  ZeroVector,
  DivisionByZero,
  DegenerateOverlap,
  LevelAboveBudget,
  NoCells,
  NoProgress,
  ObtuseVertex,
  CannotUnfold,
  NonRationalPolygon,
  HitNonremovableCone,
  LineMissesTable,
  NotPeriodic,
  PrecisionExhausted,
  ParseError,
  ConfigError,
  InternalConsistency,
};

const char* name(ErrorCode code);

/// Every recoverable failure in the library is reported through this type.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(name(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace kb
