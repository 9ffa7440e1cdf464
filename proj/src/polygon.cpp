#include "fixclip/polygon.hpp"

#include <algorithm>
#include <string>

#include "fixclip/error.hpp"

namespace fixclip {

std::vector<VertexIndex> Contour::ring_order() const {
  std::vector<VertexIndex> order;
  if (nodes_.empty()) return order;
  order.reserve(nodes_.size());
  VertexIndex i = head_;
  do {
    order.push_back(i);
    i = nodes_[i].next;
  } while (i != head_ && order.size() <= nodes_.size());
  return order;
}

std::vector<Point> Contour::points() const {
  std::vector<Point> pts;
  for (VertexIndex i : ring_order()) pts.push_back(nodes_[i].position);
  return pts;
}

VertexIndex Contour::splice_after(VertexIndex from, Point p) {
  const VertexIndex to = nodes_[from].next;
  Vertex v;
  v.position = std::move(p);
  v.original = false;
  v.prev = from;
  v.next = to;
  const VertexIndex slot = nodes_.size();
  nodes_.push_back(std::move(v));
  nodes_[from].next = slot;
  nodes_[to].prev = slot;
  return slot;
}

Contour build_contour(const std::vector<Point>& points, std::optional<Hand> declared) {
  if (points.size() < 3) {
    throw Error(ErrorCode::kTooFewVertices,
                "contour needs at least 3 vertices, got " + std::to_string(points.size()));
  }
  for (std::size_t i = 0; i < points.size(); ++i) {
    const std::size_t j = (i + 1) % points.size();
    if (points[i] == points[j]) {
      throw Error(ErrorCode::kDuplicateConsecutivePoint,
                  "vertices " + std::to_string(i) + " and " + std::to_string(j) + " coincide");
    }
  }
  Contour c;
  c.declared_hand_ = declared;
  const std::size_t n = points.size();
  c.nodes_.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    c.nodes_[i].position = points[i];
    c.nodes_[i].next = (i + 1) % n;
    c.nodes_[i].prev = (i + n - 1) % n;
  }
  return c;
}

VertexIndex insert_vertex_on_edge(Contour& c, VertexIndex from, const Point& p) {
  const VertexIndex to = c.next(from);
  if (c[from].position == p) {
    c[from].is_intersection = true;
    return from;
  }
  if (c[to].position == p) {
    c[to].is_intersection = true;
    return to;
  }
  if (!point_on_segment(p, c.arrow(from))) {
    throw Error(ErrorCode::kPointNotOnEdge, "point is not on the target edge");
  }
  const VertexIndex slot = c.splice_after(from, p);
  c[slot].is_intersection = true;
  return slot;
}

Scalar twice_signed_area(const std::vector<Point>& points) {
  Scalar sum;
  for (std::size_t i = 0; i < points.size(); ++i) {
    const Point& a = points[i];
    const Point& b = points[(i + 1) % points.size()];
    sum += a.x * b.y - b.x * a.y;
  }
  return sum;
}

bool is_simple(const Contour& c) {
  const std::vector<Point> pts = c.points();
  const std::size_t n = pts.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Segment ei(pts[i], pts[(i + 1) % n]);
    for (std::size_t j = i + 1; j < n; ++j) {
      const Segment ej(pts[j], pts[(j + 1) % n]);
      const SegmentIntersection x = intersect_segments(ei, ej);
      if (x.kind() == SegmentIntersection::Kind::kEmpty) continue;
      if (x.kind() == SegmentIntersection::Kind::kOverlap) return false;
      const bool adjacent_after = j == i + 1;
      const bool adjacent_before = i == 0 && j == n - 1;
      if (adjacent_after && x.point() == pts[j]) continue;
      if (adjacent_before && x.point() == pts[0]) continue;
      return false;
    }
  }
  return true;
}

Hand contour_hand(const Contour& c) {
  if (c.declared_hand()) return *c.declared_hand();
  if (!is_simple(c)) {
    throw Error(ErrorCode::kSelfIntersectingWithoutDeclaredHand,
                "self-intersecting contour needs an explicit hand");
  }
  return twice_signed_area(c.points()).sign() > 0 ? Hand::kLeft : Hand::kRight;
}

std::vector<Segment> Polygon::edges() const {
  std::vector<Segment> out;
  for (const Contour& c : contours_) {
    for (VertexIndex i : c.ring_order()) out.push_back(c.arrow(i));
  }
  return out;
}

Polygon make_polygon(const std::vector<std::vector<Point>>& contours, Role role,
                     std::optional<Hand> declared) {
  std::vector<Contour> built;
  built.reserve(contours.size());
  for (const auto& pts : contours) built.push_back(build_contour(pts, declared));
  return Polygon(std::move(built), role);
}

Polygon reversed(const Polygon& p) {
  std::vector<Contour> out;
  for (const Contour& c : p.contours()) {
    std::vector<Point> pts = c.points();
    std::reverse(pts.begin(), pts.end());
    std::optional<Hand> hand = c.declared_hand();
    if (hand) hand = opposite(*hand);
    out.push_back(build_contour(pts, hand));
  }
  Polygon r(std::move(out), p.role());
  r.set_complemented(p.complemented());
  return r;
}

}  // namespace fixclip
