#include "arxid/error.hpp"

namespace arxid {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::NonPositiveParameter: return "NonPositiveParameter";
    case ErrorCode::NotUnderdamped: return "NotUnderdamped";
    case ErrorCode::NonZeroDamping: return "NonZeroDamping";
    case ErrorCode::FoldedSampling: return "FoldedSampling";
    case ErrorCode::SamplingMismatch: return "SamplingMismatch";
    case ErrorCode::TooFewSamples: return "TooFewSamples";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::RankDeficient: return "RankDeficient";
    case ErrorCode::BranchViolation: return "BranchViolation";
    case ErrorCode::NonPhysical: return "NonPhysical";
    case ErrorCode::DegenerateCoefficients: return "DegenerateCoefficients";
    case ErrorCode::SingularRecovery: return "SingularRecovery";
    case ErrorCode::MissingColumn: return "MissingColumn";
    case ErrorCode::MalformedRow: return "MalformedRow";
    case ErrorCode::NonMonotoneTime: return "NonMonotoneTime";
    case ErrorCode::IrregularSampling: return "IrregularSampling";
    case ErrorCode::WindowTooShort: return "WindowTooShort";
    case ErrorCode::NoEventFound: return "NoEventFound";
    case ErrorCode::Io: return "Io";
  }
  return "Unknown";
}

ErrorClass classify(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument:
    case ErrorCode::NonPositiveParameter:
    case ErrorCode::NotUnderdamped:
    case ErrorCode::NonZeroDamping:
    case ErrorCode::FoldedSampling:
      return ErrorClass::Config;
    case ErrorCode::RankDeficient:
    case ErrorCode::BranchViolation:
    case ErrorCode::NonPhysical:
    case ErrorCode::DegenerateCoefficients:
    case ErrorCode::SingularRecovery:
      return ErrorClass::Numerical;
    default:
      return ErrorClass::Data;
  }
}

}  // namespace arxid
