#include "pq/error.hpp"

namespace pq {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kCapExceeded: return "CapExceeded";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kUnsupportedSpec: return "UnsupportedSpec";
    case ErrorCode::kActionTooLarge: return "ActionTooLarge";
    case ErrorCode::kNotAMatrixGroup: return "NotAMatrixGroup";
    case ErrorCode::kActionNotDoubled: return "ActionNotDoubled";
    case ErrorCode::kUnknownName: return "UnknownName";
    case ErrorCode::kMatrixTooLarge: return "MatrixTooLarge";
    case ErrorCode::kTagMismatch: return "TagMismatch";
    case ErrorCode::kMultipleCandidates: return "MultipleCandidates";
    case ErrorCode::kNoTaggedCandidate: return "NoTaggedCandidate";
    case ErrorCode::kRankTwoOuter: return "RankTwoOuter";
    case ErrorCode::kGdfMissing: return "GdfMissing";
    case ErrorCode::kInvariantViolated: return "InvariantViolated";
  }
  return "Unknown";
}

}  // namespace pq
