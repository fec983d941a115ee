#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace arxid {

enum class ErrorCode {
  InvalidArgument,
  NonPositiveParameter,
  NotUnderdamped,
  NonZeroDamping,
  FoldedSampling,
  SamplingMismatch,
  TooFewSamples,
  LengthMismatch,
  RankDeficient,
  BranchViolation,
  NonPhysical,
  DegenerateCoefficients,
  SingularRecovery,
  MissingColumn,
  MalformedRow,
  NonMonotoneTime,
  IrregularSampling,
  WindowTooShort,
  NoEventFound,
  Io,
};

std::string_view to_string(ErrorCode code);

// Broad classes used by the CLI to pick an exit code.
enum class ErrorClass { Config, Data, Numerical };
ErrorClass classify(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace arxid
