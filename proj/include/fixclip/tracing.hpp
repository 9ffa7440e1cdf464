#pragma once

#include <string_view>
#include <vector>

#include "fixclip/marking.hpp"
#include "fixclip/polygon.hpp"

namespace fixclip {

enum class Origin { kClipper, kSubject };
std::string_view to_string(Origin o);

struct ResultEdge {
  Point from;
  Point to;
  Origin origin = Origin::kSubject;

  friend bool operator==(const ResultEdge&, const ResultEdge&) = default;
};

/// Closed cycle: edges[i].to == edges[i + 1].from, wrapping around.
struct ResultContour {
  std::vector<ResultEdge> edges;

  std::vector<Point> points() const;
  friend bool operator==(const ResultContour&, const ResultContour&) = default;
};

/// Result border. Contours keep the region interior on their left.
struct ResultRegion {
  std::vector<ResultContour> contours;
  MembershipRule rule = MembershipRule::kNonzeroWinding;

  bool empty() const { return contours.empty(); }
  friend bool operator==(const ResultRegion&, const ResultRegion&) = default;
};

/// Polygon whose contours are the result cycles (for membership queries).
Polygon to_polygon(const ResultRegion& r);

/// Raw alternating traversal from every flagged red vertex. Marks visited
/// I vertices processed. Throws kTraversalNotClosing on inconsistent flags.
/// Cycles are oriented with the result interior on the left.
std::vector<ResultContour> trace_cycles(Polygon& clipper, Polygon& subject);

/// Result for contours without any en/ex flag, decided from the marks of
/// their arrows against the other polygon. Contours of `clipper` or
/// `subject` that carry flags are ignored.
ResultRegion containment_fallback(const Polygon& clipper, const Polygon& subject, BooleanOp op,
                                  MembershipRule rule);

/// trace_cycles plus containment_fallback, with zero-area parts removed.
/// `op` must be intersection or union (reduce differences first).
ResultRegion trace(Polygon& clipper, Polygon& subject, BooleanOp op, MembershipRule rule);

/// Removes p->q->p spikes and cycles of zero area. Returns how many edges
/// were dropped through `removed` when non-null.
ResultRegion drop_zero_area(ResultRegion r, std::size_t* removed = nullptr);

/// Rotates each contour to start at its lexicographically smallest vertex
/// and sorts contours by that vertex. Collinear vertices are kept.
ResultRegion canonicalize(ResultRegion r);

/// Merges consecutive collinear edges of the same origin.
ResultRegion simplify(ResultRegion r);

}  // namespace fixclip
