#pragma once

#include <map>
#include <string>
#include <string_view>

#include "fixclip/polygon.hpp"

namespace fixclip {

enum class OverlapSense { kCon, kOpp };

/// Location of a red arrow relative to the black region: inside, outside,
/// or lying on a black arrow flowing the same (Con) or opposite (Opp) way.
enum class LocationMark { kIn, kOut, kOnCon, kOnOpp };

inline bool is_on(LocationMark m) { return m == LocationMark::kOnCon || m == LocationMark::kOnOpp; }
inline OverlapSense sense_of(LocationMark m) {
  return m == LocationMark::kOnCon ? OverlapSense::kCon : OverlapSense::kOpp;
}
inline LocationMark on_mark(OverlapSense s) {
  return s == OverlapSense::kCon ? LocationMark::kOnCon : LocationMark::kOnOpp;
}
std::string_view to_string(LocationMark m);

/// (mark of the incoming arrow, mark of the outgoing arrow) of an I vertex.
struct IntersectionType {
  LocationMark incoming;
  LocationMark outgoing;

  friend bool operator==(const IntersectionType&, const IntersectionType&) = default;
};

/// "in,on_con" style name.
std::string to_string(const IntersectionType& t);

enum class PipResult { kIn, kOut, kOnBoundary };

/// Exact membership of p in poly. Winding numbers are accumulated by
/// quadrant transitions; the region of a complemented polygon is inverted.
PipResult point_in_polygon(const Point& p, const Polygon& poly, MembershipRule rule);

/// On(sense) when the arrow coincides with an arrow of `other`, else the
/// membership of its midpoint. Throws kArrowCrossesOtherContour if the
/// midpoint lies on the other boundary without coincidence.
LocationMark classify_arrow(const Segment& arrow, const Polygon& other, MembershipRule rule);

IntersectionType classify_vertex(const Polygon& own, const VertexRef& v, const Polygon& other,
                                 MembershipRule rule);

/// Types of every red I vertex keyed by its reference.
using ClassificationTable = std::map<VertexRef, IntersectionType>;
ClassificationTable classify_all(const Polygon& clipper, const Polygon& subject, MembershipRule rule);

/// The four arrows meeting at one intersection point.
struct VertexArrows {
  Point center;
  Point red_prev;
  Point red_next;
  Point black_prev;
  Point black_next;
};

VertexArrows arrows_at(const Polygon& clipper, const Polygon& subject, const VertexRef& red);

enum class KnownArrow { kIncoming, kOutgoing };

/// Mark of the other red arrow from the known one, using only orientation
/// tests of the four arrows: the two black arrows split the neighbourhood
/// into an interior and an exterior sector, so both red arrows share a mark
/// iff they fall into the same sector. Throws kDegenerateArrowConfiguration
/// when the known mark is On.
LocationMark derive_second_mark(LocationMark known, KnownArrow which, const VertexArrows& arrows);

/// Interior side of contour `contour` of `poly` along the arrow leaving
/// `from`, found by probing points just left and right of the arrow.
/// Throws kNotABorder when both or neither side is interior.
Hand local_hand(const Polygon& poly, std::size_t contour, VertexIndex from, MembershipRule rule);

/// Stores local_hand on every I vertex of `poly`. A declared contour hand
/// that disagrees with the probe raises kDeclaredHandMismatch.
void resolve_hands(Polygon& poly, MembershipRule rule);

}  // namespace fixclip
