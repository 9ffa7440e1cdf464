#include "fixclip/error.hpp"

namespace fixclip {

ErrorCategory category_of(ErrorCode code) {
  switch (code) {
    case ErrorCode::kSelfIntersectionAtRedBlackIntersection:
    case ErrorCode::kNotABorder:
      return ErrorCategory::kScopeViolation;
    case ErrorCode::kArrowCrossesOtherContour:
    case ErrorCode::kDegenerateArrowConfiguration:
    case ErrorCode::kRedFlagsNotSet:
    case ErrorCode::kMixedSenseWithinRun:
    case ErrorCode::kIncompatibleEnds:
    case ErrorCode::kTraversalNotClosing:
    case ErrorCode::kInconsistentContainment:
    case ErrorCode::kUnlinkedIntersection:
      return ErrorCategory::kInternal;
    default:
      return ErrorCategory::kInvalidInput;
  }
}

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kZeroLengthSegment: return "ZeroLengthSegment";
    case ErrorCode::kBadScalar: return "BadScalar";
    case ErrorCode::kTooFewVertices: return "TooFewVertices";
    case ErrorCode::kDuplicateConsecutivePoint: return "DuplicateConsecutivePoint";
    case ErrorCode::kPointNotOnEdge: return "PointNotOnEdge";
    case ErrorCode::kSelfIntersectingWithoutDeclaredHand:
      return "SelfIntersectingWithoutDeclaredHand";
    case ErrorCode::kDeclaredHandMismatch: return "DeclaredHandMismatch";
    case ErrorCode::kParse: return "Parse";
    case ErrorCode::kSelfIntersectionAtRedBlackIntersection:
      return "SelfIntersectionAtRedBlackIntersection";
    case ErrorCode::kNotABorder: return "NotABorder";
    case ErrorCode::kArrowCrossesOtherContour: return "ArrowCrossesOtherContour";
    case ErrorCode::kDegenerateArrowConfiguration: return "DegenerateArrowConfiguration";
    case ErrorCode::kRedFlagsNotSet: return "RedFlagsNotSet";
    case ErrorCode::kMixedSenseWithinRun: return "MixedSenseWithinRun";
    case ErrorCode::kIncompatibleEnds: return "IncompatibleEnds";
    case ErrorCode::kTraversalNotClosing: return "TraversalNotClosing";
    case ErrorCode::kInconsistentContainment: return "InconsistentContainment";
    case ErrorCode::kUnlinkedIntersection: return "UnlinkedIntersection";
  }
  return "Unknown";
}

}  // namespace fixclip
