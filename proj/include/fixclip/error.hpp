#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace fixclip {

// Broad class of a failure; the CLI maps each category to its exit code.
enum class ErrorCategory {
  kInvalidInput,     // malformed or unsupported input data
  kScopeViolation,   // input outside the domain the marking rule covers
  kInternal,         // consistency failure inside the pipeline
};

enum class ErrorCode {
  // geometry / model
  kZeroLengthSegment,
  kBadScalar,
  kTooFewVertices,
  kDuplicateConsecutivePoint,
  kPointNotOnEdge,
  kSelfIntersectingWithoutDeclaredHand,
  kDeclaredHandMismatch,
  kParse,
  // scope
  kSelfIntersectionAtRedBlackIntersection,
  kNotABorder,
  // classification / marking
  kArrowCrossesOtherContour,
  kDegenerateArrowConfiguration,
  kRedFlagsNotSet,
  kMixedSenseWithinRun,
  kIncompatibleEnds,
  // tracing
  kTraversalNotClosing,
  kInconsistentContainment,
  kUnlinkedIntersection,
};

ErrorCategory category_of(ErrorCode code);
std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const { return code_; }
  ErrorCategory category() const { return category_of(code_); }

 private:
  ErrorCode code_;
};

}  // namespace fixclip
