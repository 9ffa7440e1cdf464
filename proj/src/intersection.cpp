#include "fixclip/intersection.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "fixclip/error.hpp"

namespace fixclip {

namespace {

struct RingEdge {
  std::size_t contour;
  VertexIndex from;
  Segment segment;
};

std::vector<RingEdge> snapshot_edges(const Polygon& p) {
  std::vector<RingEdge> out;
  for (std::size_t ci = 0; ci < p.contours().size(); ++ci) {
    const Contour& c = p.contours()[ci];
    for (VertexIndex i : c.ring_order()) out.push_back({ci, i, c.arrow(i)});
  }
  return out;
}

bool boxes_disjoint(const Segment& s, const Segment& t) {
  const auto [sx0, sx1] = std::minmax(s.a().x, s.b().x);
  const auto [tx0, tx1] = std::minmax(t.a().x, t.b().x);
  if (sx1 < tx0 || tx1 < sx0) return true;
  const auto [sy0, sy1] = std::minmax(s.a().y, s.b().y);
  const auto [ty0, ty1] = std::minmax(t.a().y, t.b().y);
  return sy1 < ty0 || ty1 < sy0;
}

void add_hit(std::vector<Point>& hits, const Point& p) {
  if (std::find(hits.begin(), hits.end(), p) == hits.end()) hits.push_back(p);
}

// Inserts the hits of each snapshot edge in increasing parameter order.
// Returns the number of newly created vertices.
std::size_t apply_hits(Polygon& poly, const std::vector<RingEdge>& edges,
                       std::vector<std::vector<Point>>& hits) {
  std::size_t created = 0;
  for (std::size_t e = 0; e < edges.size(); ++e) {
    auto& pts = hits[e];
    if (pts.empty()) continue;
    const Segment& seg = edges[e].segment;
    std::sort(pts.begin(), pts.end(), [&](const Point& a, const Point& b) {
      return parameter_along(seg, a) < parameter_along(seg, b);
    });
    Contour& c = poly.contours()[edges[e].contour];
    VertexIndex cur = edges[e].from;
    for (const Point& p : pts) {
      const std::size_t before = c.size();
      cur = insert_vertex_on_edge(c, cur, p);
      created += c.size() - before;
    }
  }
  return created;
}

std::map<Point, std::vector<VertexRef>> intersection_vertices_by_point(const Polygon& p) {
  std::map<Point, std::vector<VertexRef>> out;
  for (std::size_t ci = 0; ci < p.contours().size(); ++ci) {
    const Contour& c = p.contours()[ci];
    for (VertexIndex i : c.ring_order()) {
      if (c[i].is_intersection) out[c[i].position].push_back({ci, i});
    }
  }
  return out;
}

[[noreturn]] void scope_violation(const char* which, const Point& p) {
  std::ostringstream os;
  os << which << " contour passes through intersection point " << p << " more than once";
  throw Error(ErrorCode::kSelfIntersectionAtRedBlackIntersection, os.str());
}

}  // namespace

std::vector<IntersectionRecord> find_and_insert_intersections(Polygon& clipper, Polygon& subject,
                                                              const IntersectionOptions& options) {
  for (;;) {
    const std::vector<RingEdge> red = snapshot_edges(clipper);
    const std::vector<RingEdge> black = snapshot_edges(subject);
    std::vector<std::vector<Point>> red_hits(red.size());
    std::vector<std::vector<Point>> black_hits(black.size());

    auto visit = [&](std::size_t r, std::size_t b) {
      if (boxes_disjoint(red[r].segment, black[b].segment)) return;
      const SegmentIntersection x = intersect_segments(red[r].segment, black[b].segment);
      switch (x.kind()) {
        case SegmentIntersection::Kind::kEmpty:
          break;
        case SegmentIntersection::Kind::kSinglePoint:
          add_hit(red_hits[r], x.point());
          add_hit(black_hits[b], x.point());
          break;
        case SegmentIntersection::Kind::kOverlap:
          // Overlap endpoints are endpoints of one input edge or the other,
          // so adding them to both edges yields a common refinement.
          for (const Point* p : {&x.overlap_segment().a(), &x.overlap_segment().b()}) {
            add_hit(red_hits[r], *p);
            add_hit(black_hits[b], *p);
          }
          break;
      }
    };
    if (options.reverse_pair_order) {
      for (std::size_t r = red.size(); r-- > 0;)
        for (std::size_t b = black.size(); b-- > 0;) visit(r, b);
    } else {
      for (std::size_t r = 0; r < red.size(); ++r)
        for (std::size_t b = 0; b < black.size(); ++b) visit(r, b);
    }

    const std::size_t created = apply_hits(clipper, red, red_hits) + apply_hits(subject, black, black_hits);
    if (created == 0) break;
  }

  const auto red_at = intersection_vertices_by_point(clipper);
  const auto black_at = intersection_vertices_by_point(subject);
  for (const auto& [p, reds] : red_at) {
    if (reds.size() > 1) scope_violation("clipper", p);
    auto it = black_at.find(p);
    if (it == black_at.end()) {
      throw Error(ErrorCode::kUnlinkedIntersection, "red intersection vertex without a black partner");
    }
    if (it->second.size() > 1) scope_violation("subject", p);
    clipper.at(reds.front()).neighbor = it->second.front();
    subject.at(it->second.front()).neighbor = reds.front();
  }
  for (const auto& [p, blacks] : black_at) {
    if (!red_at.contains(p)) {
      throw Error(ErrorCode::kUnlinkedIntersection, "black intersection vertex without a red partner");
    }
  }
  return intersection_records(clipper);
}

std::vector<IntersectionRecord> intersection_records(const Polygon& clipper) {
  std::vector<IntersectionRecord> out;
  for (std::size_t ci = 0; ci < clipper.contours().size(); ++ci) {
    const Contour& c = clipper.contours()[ci];
    for (VertexIndex i : c.ring_order()) {
      if (c[i].is_intersection && c[i].neighbor) out.push_back({c[i].position, {ci, i}, *c[i].neighbor});
    }
  }
  return out;
}

bool assert_completed(const Polygon& clipper, const Polygon& subject) {
  const std::vector<Segment> red = clipper.edges();
  const std::vector<Segment> black = subject.edges();
  for (const Segment& r : red) {
    for (const Segment& b : black) {
      if (boxes_disjoint(r, b)) continue;
      const SegmentIntersection x = intersect_segments(r, b);
      switch (x.kind()) {
        case SegmentIntersection::Kind::kEmpty:
          break;
        case SegmentIntersection::Kind::kSinglePoint: {
          const Point& p = x.point();
          const bool red_end = p == r.a() || p == r.b();
          const bool black_end = p == b.a() || p == b.b();
          if (!red_end || !black_end) return false;
          break;
        }
        case SegmentIntersection::Kind::kOverlap:
          if (!(r == b || r == b.reversed())) return false;
          break;
      }
    }
  }
  return true;
}

}  // namespace fixclip
