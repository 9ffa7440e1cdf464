#pragma once

#include <vector>

#include "fixclip/polygon.hpp"

namespace fixclip {

/// One plane intersection point: a red (clipper) and a black (subject) I
/// vertex, mutually linked.
struct IntersectionRecord {
  Point point;
  VertexRef red;
  VertexRef black;
};

struct IntersectionOptions {
  // Visit edge pairs last-to-first. Output must not depend on it.
  bool reverse_pair_order = false;
};

/// Inserts every red x black contact point into both rings, decomposing
/// collinear overlaps into a common refinement, and links the resulting
/// vertex pairs. Repeats until no edge pair yields a new vertex.
///
/// Throws kSelfIntersectionAtRedBlackIntersection when one polygon reaches an
/// intersection point more than once.
std::vector<IntersectionRecord> find_and_insert_intersections(Polygon& clipper, Polygon& subject,
                                                              const IntersectionOptions& options = {});

/// True iff no red arrow meets the black contour except at shared arrow
/// endpoints or by exact coincidence with a black arrow (and symmetrically).
bool assert_completed(const Polygon& clipper, const Polygon& subject);

/// Linked pairs currently present, in red ring order.
std::vector<IntersectionRecord> intersection_records(const Polygon& clipper);

}  // namespace fixclip
