#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "fixclip/geometry.hpp"

namespace fixclip {

enum class VertexFlag { kNone, kEn, kEx };
enum class Hand { kLeft, kRight };
enum class Role { kClipper, kSubject };
enum class MembershipRule { kNonzeroWinding, kEvenOdd };

inline Hand opposite(Hand h) { return h == Hand::kLeft ? Hand::kRight : Hand::kLeft; }

using VertexIndex = std::size_t;

/// Address of a vertex inside a polygon: contour number plus slot in that
/// contour's node storage (slots are stable across insertions).
struct VertexRef {
  std::size_t contour = 0;
  VertexIndex vertex = 0;

  friend bool operator==(const VertexRef&, const VertexRef&) = default;
  friend auto operator<=>(const VertexRef&, const VertexRef&) = default;
};

struct Vertex {
  Point position;
  bool is_intersection = false;
  // False for vertices inserted by the intersection phase.
  bool original = true;
  // Linked vertex in the other polygon; set iff is_intersection.
  std::optional<VertexRef> neighbor;
  VertexFlag flag = VertexFlag::kNone;
  bool processed = false;
  // Side of the own polygon's interior around this I vertex.
  std::optional<Hand> local_hand;
  VertexIndex next = 0;
  VertexIndex prev = 0;
};

/// Circular doubly-linked vertex ring backed by a slot vector.
class Contour {
 public:
  Contour() = default;

  std::size_t size() const { return nodes_.size(); }
  VertexIndex head() const { return head_; }
  VertexIndex next(VertexIndex i) const { return nodes_[i].next; }
  VertexIndex prev(VertexIndex i) const { return nodes_[i].prev; }

  const Vertex& operator[](VertexIndex i) const { return nodes_[i]; }
  Vertex& operator[](VertexIndex i) { return nodes_[i]; }

  /// Slots in ring order starting at head().
  std::vector<VertexIndex> ring_order() const;
  std::vector<Point> points() const;
  Segment arrow(VertexIndex from) const { return Segment(nodes_[from].position, nodes_[next(from)].position); }

  std::optional<Hand> declared_hand() const { return declared_hand_; }
  void set_declared_hand(std::optional<Hand> h) { declared_hand_ = h; }

  /// Raw ring splice; callers guarantee geometric validity.
  VertexIndex splice_after(VertexIndex from, Point p);

 private:
  friend Contour build_contour(const std::vector<Point>& points, std::optional<Hand> declared);

  std::vector<Vertex> nodes_;
  VertexIndex head_ = 0;
  std::optional<Hand> declared_hand_;
};

/// Throws kTooFewVertices (< 3 points) or kDuplicateConsecutivePoint
/// (including the closing edge).
Contour build_contour(const std::vector<Point>& points, std::optional<Hand> declared = std::nullopt);

/// Inserts p on the arrow starting at `from`. When p equals one of the arrow's
/// endpoints that vertex is flagged as an intersection instead and returned.
/// Throws kPointNotOnEdge otherwise.
VertexIndex insert_vertex_on_edge(Contour& c, VertexIndex from, const Point& p);

/// Twice the signed area of the closed ring through `points`.
Scalar twice_signed_area(const std::vector<Point>& points);

/// No two edges meet except ring-adjacent edges at their shared vertex.
bool is_simple(const Contour& c);

/// Declared hand if present, else the sign of the area of a simple contour.
/// Throws kSelfIntersectingWithoutDeclaredHand.
Hand contour_hand(const Contour& c);

class Polygon {
 public:
  Polygon() = default;
  Polygon(std::vector<Contour> contours, Role role) : contours_(std::move(contours)), role_(role) {}

  Role role() const { return role_; }
  const std::vector<Contour>& contours() const { return contours_; }
  std::vector<Contour>& contours() { return contours_; }

  const Vertex& at(const VertexRef& r) const { return contours_[r.contour][r.vertex]; }
  Vertex& at(const VertexRef& r) { return contours_[r.contour][r.vertex]; }

  /// Region is the complement of what the contours enclose under the rule.
  /// Used to express differences as intersections.
  bool complemented() const { return complemented_; }
  void set_complemented(bool c) { complemented_ = c; }

  bool flags_assigned() const { return flags_assigned_; }
  void set_flags_assigned(bool f) { flags_assigned_ = f; }

  /// All edges (ring arrows) of every contour.
  std::vector<Segment> edges() const;

 private:
  std::vector<Contour> contours_;
  Role role_ = Role::kSubject;
  bool complemented_ = false;
  bool flags_assigned_ = false;
};

Polygon make_polygon(const std::vector<std::vector<Point>>& contours, Role role,
                     std::optional<Hand> declared = std::nullopt);

/// Copy with every contour traversed backwards (declared hands flipped).
Polygon reversed(const Polygon& p);

}  // namespace fixclip
