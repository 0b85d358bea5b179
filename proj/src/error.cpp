#include "lsr/error.hpp"

namespace lsr {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DomainError: return "DomainError";
    case ErrorCode::DegenerateInstance: return "DegenerateInstance";
    case ErrorCode::OverlappingIntervals: return "OverlappingIntervals";
    case ErrorCode::RankDeficient: return "RankDeficient";
    case ErrorCode::SingularMatrix: return "SingularMatrix";
    case ErrorCode::DuplicateNodes: return "DuplicateNodes";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::PreconditionUnmet: return "PreconditionUnmet";
    case ErrorCode::TooFewSamples: return "TooFewSamples";
    case ErrorCode::ConvergenceFailure: return "ConvergenceFailure";
    case ErrorCode::SupportsOutsideInterval: return "SupportsOutsideInterval";
    case ErrorCode::DegenerateNodes: return "DegenerateNodes";
    case ErrorCode::VerificationFailed: return "VerificationFailed";
    case ErrorCode::ConfigError: return "ConfigError";
    case ErrorCode::DegenerateData: return "DegenerateData";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

}  // namespace lsr
