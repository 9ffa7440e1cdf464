#pragma once

#include <cstddef>
#include <vector>

#include "fixclip/intersection.hpp"
#include "fixclip/marking.hpp"
#include "fixclip/tracing.hpp"

namespace fixclip {

struct ClipOptions {
  MembershipRule rule = MembershipRule::kNonzeroWinding;
  bool simplify = false;
  IntersectionOptions intersection;
};

struct FlaggedVertex {
  Point position;
  Role role;
  VertexFlag flag;
};

struct ClipResult {
  ResultRegion region;
  MarkingOutcome outcome = MarkingOutcome::kNoFlags;
  std::size_t intersections = 0;
  // Edges removed by the zero-area filter.
  std::size_t dropped_edges = 0;
  // Completed and flagged working copies (clipper is the complement of the
  // input clipper for a difference).
  Polygon clipper;
  Polygon subject;

  std::vector<FlaggedVertex> flags() const;
};

/// Full pipeline: intersections, hands, classification, marking, tracing,
/// canonical output. Differences are computed as subject minus clipper.
ClipResult clip(const Polygon& clipper, const Polygon& subject, BooleanOp op, const ClipOptions& options = {});

/// Result region only.
ResultRegion boolean_op(const Polygon& clipper, const Polygon& subject, BooleanOp op,
                        const ClipOptions& options = {});

struct FlagStructure {
  bool alternating = true;
  std::size_t en = 0;
  std::size_t ex = 0;

  bool ok() const { return alternating && en == ex; }
};

/// Per-contour en/ex alternation along ring order, and flag counts.
FlagStructure check_flag_structure(const Polygon& poly);

}  // namespace fixclip
