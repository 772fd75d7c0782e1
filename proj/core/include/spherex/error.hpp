#pragma once

#include <stdexcept>
#include <string>

namespace spherex {

enum class ErrorCode {
  InvalidDatum,
  CapExceeded,
  NoDecomposition,
  AmbiguousDecomposition,
  TypeNWithout2Alpha,
  InconsistentCoroot,
  TypeNPresent,
  InvalidParabolicType,
  ActionNotDefined,
  NegativeMultiplicity,
  MalformedFan,
  NotSmoothCone,
  NotWavefront,
  PoleAtSpecialization,
  RegularizationMismatch,
  MissingOracleEntry,
  OddDimension,
  NotASubgroup,
  InconsistentHeartSequence,
  ParseError,
};

const char* error_name(ErrorCode c);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_name(code)) + ": " + what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace spherex
