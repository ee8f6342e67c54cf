#include "l2lab/error.hpp"

namespace l2lab {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::MalformedInput: return "MalformedInput";
    case ErrorCode::SimplexNotPresent: return "SimplexNotPresent";
    case ErrorCode::VertexNotPresent: return "VertexNotPresent";
    case ErrorCode::NotAnEdge: return "NotAnEdge";
    case ErrorCode::NotASubcomplex: return "NotASubcomplex";
    case ErrorCode::NotACone: return "NotACone";
    case ErrorCode::NotFlag: return "NotFlag";
    case ErrorCode::NotNested: return "NotNested";
    case ErrorCode::KNotInStarOfVertex: return "KNotInStarOfVertex";
    case ErrorCode::SizeLimitExceeded: return "SizeLimitExceeded";
    case ErrorCode::UnknownCatalogName: return "UnknownCatalogName";
    case ErrorCode::StepEdgeMissing: return "StepEdgeMissing";
    case ErrorCode::TargetMismatch: return "TargetMismatch";
    case ErrorCode::InvalidQuotient: return "InvalidQuotient";
    case ErrorCode::RankTooLarge: return "RankTooLarge";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::MonotonicityViolated: return "MonotonicityViolated";
    case ErrorCode::InconsistentChain: return "InconsistentChain";
    case ErrorCode::NotTrivalentEligible: return "NotTrivalentEligible";
    case ErrorCode::HypothesisViolated: return "HypothesisViolated";
    case ErrorCode::MissingArtifacts: return "MissingArtifacts";
  }
  return "Unknown";
}

}  // namespace l2lab
