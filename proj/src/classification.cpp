#include "fixclip/classification.hpp"

#include <algorithm>
#include <array>
#include <optional>
#include <sstream>

#include "fixclip/error.hpp"

namespace fixclip {

std::string_view to_string(LocationMark m) {
  switch (m) {
    case LocationMark::kIn: return "in";
    case LocationMark::kOut: return "out";
    case LocationMark::kOnCon: return "on_con";
    case LocationMark::kOnOpp: return "on_opp";
  }
  return "?";
}

std::string to_string(const IntersectionType& t) {
  return std::string(to_string(t.incoming)) + "," + std::string(to_string(t.outgoing));
}

namespace {

// Quadrant of d around the origin; d must be non-zero.
int quadrant(const Scalar& dx, const Scalar& dy) {
  if (dx.sign() > 0 && dy.sign() >= 0) return 0;
  if (dx.sign() <= 0 && dy.sign() > 0) return 1;
  if (dx.sign() < 0 && dy.sign() <= 0) return 2;
  return 3;
}

bool inside_under_rule(long winding, MembershipRule rule) {
  return rule == MembershipRule::kNonzeroWinding ? winding != 0 : (winding % 2) != 0;
}

struct Vec {
  Scalar x;
  Scalar y;
};

Vec sub(const Point& a, const Point& b) { return {a.x - b.x, a.y - b.y}; }
Scalar cross(const Vec& u, const Vec& v) { return u.x * v.y - u.y * v.x; }
Scalar dot(const Vec& u, const Vec& v) { return u.x * v.x + u.y * v.y; }
bool aligned(const Vec& u, const Vec& v) { return cross(u, v).sign() == 0 && dot(u, v).sign() > 0; }

// q strictly inside the open sector swept counter-clockwise from ray `from`
// to ray `to`. Rays aligned with either bound are outside.
bool in_ccw_sector(const Vec& from, const Vec& to, const Vec& q) {
  if (aligned(q, from) || aligned(q, to)) return false;
  const int ft = cross(from, to).sign();
  const int fq = cross(from, q).sign();
  const int qt = cross(q, to).sign();
  if (ft > 0) return fq > 0 && qt > 0;
  if (ft < 0) return !(fq <= 0 && qt <= 0);
  if (dot(from, to).sign() > 0) {
    throw Error(ErrorCode::kDegenerateArrowConfiguration, "black arrows fold back onto each other");
  }
  return fq > 0;
}

// Smallest positive ray parameter at which m + t*dir meets `edge`.
std::optional<Scalar> ray_hit(const Point& m, const Vec& dir, const Segment& edge) {
  const Vec e = sub(edge.b(), edge.a());
  const Vec am = sub(edge.a(), m);
  const Scalar denom = cross(dir, e);
  if (denom.sign() != 0) {
    const Scalar t = cross(am, e) / denom;
    const Scalar u = cross(am, dir) / denom;
    if (t.sign() > 0 && u.sign() >= 0 && u <= Scalar(1)) return t;
    return std::nullopt;
  }
  if (cross(am, dir).sign() != 0) return std::nullopt;
  // Edge runs along the ray's supporting line.
  const Scalar dd = dot(dir, dir);
  std::optional<Scalar> best;
  for (const Point* p : {&edge.a(), &edge.b()}) {
    const Scalar t = dot(sub(*p, m), dir) / dd;
    if (t.sign() > 0 && (!best || t < *best)) best = t;
  }
  return best;
}

Point offset(const Point& m, const Vec& dir, const Scalar& t) { return {m.x + t * dir.x, m.y + t * dir.y}; }

}  // namespace

PipResult point_in_polygon(const Point& p, const Polygon& poly, MembershipRule rule) {
  long quarter_turns = 0;
  for (const Contour& c : poly.contours()) {
    for (VertexIndex i : c.ring_order()) {
      const Point& a = c[i].position;
      const Point& b = c[c.next(i)].position;
      if (point_on_segment(p, Segment(a, b))) return PipResult::kOnBoundary;
      const int qa = quadrant(a.x - p.x, a.y - p.y);
      const int qb = quadrant(b.x - p.x, b.y - p.y);
      int delta = (qb - qa + 4) % 4;
      if (delta == 3) delta = -1;
      if (delta == 2 && fixclip::cross(p, a, b).sign() < 0) delta = -2;
      quarter_turns += delta;
    }
  }
  bool inside = inside_under_rule(quarter_turns / 4, rule);
  if (poly.complemented()) inside = !inside;
  return inside ? PipResult::kIn : PipResult::kOut;
}

LocationMark classify_arrow(const Segment& arrow, const Polygon& other, MembershipRule rule) {
  for (const Contour& c : other.contours()) {
    for (VertexIndex i : c.ring_order()) {
      const Point& a = c[i].position;
      const Point& b = c[c.next(i)].position;
      if (a == arrow.a() && b == arrow.b()) return LocationMark::kOnCon;
      if (a == arrow.b() && b == arrow.a()) return LocationMark::kOnOpp;
    }
  }
  switch (point_in_polygon(midpoint(arrow.a(), arrow.b()), other, rule)) {
    case PipResult::kIn: return LocationMark::kIn;
    case PipResult::kOut: return LocationMark::kOut;
    case PipResult::kOnBoundary: break;
  }
  std::ostringstream os;
  os << "arrow " << arrow.a() << "->" << arrow.b() << " meets the other contour inside its span";
  throw Error(ErrorCode::kArrowCrossesOtherContour, os.str());
}

IntersectionType classify_vertex(const Polygon& own, const VertexRef& v, const Polygon& other,
                                 MembershipRule rule) {
  const Contour& c = own.contours()[v.contour];
  const Point& here = c[v.vertex].position;
  const Segment incoming(c[c.prev(v.vertex)].position, here);
  const Segment outgoing(here, c[c.next(v.vertex)].position);
  return {classify_arrow(incoming, other, rule), classify_arrow(outgoing, other, rule)};
}

ClassificationTable classify_all(const Polygon& clipper, const Polygon& subject, MembershipRule rule) {
  ClassificationTable table;
  for (std::size_t ci = 0; ci < clipper.contours().size(); ++ci) {
    const Contour& c = clipper.contours()[ci];
    for (VertexIndex i : c.ring_order()) {
      if (c[i].is_intersection) table.emplace(VertexRef{ci, i}, classify_vertex(clipper, {ci, i}, subject, rule));
    }
  }
  return table;
}

VertexArrows arrows_at(const Polygon& clipper, const Polygon& subject, const VertexRef& red) {
  const Contour& rc = clipper.contours()[red.contour];
  const Vertex& rv = rc[red.vertex];
  const VertexRef black = *rv.neighbor;
  const Contour& bc = subject.contours()[black.contour];
  return {rv.position, rc[rv.prev].position, rc[rv.next].position,
          bc[bc[black.vertex].prev].position, bc[bc[black.vertex].next].position};
}

LocationMark derive_second_mark(LocationMark known, KnownArrow which, const VertexArrows& arrows) {
  if (is_on(known)) {
    throw Error(ErrorCode::kDegenerateArrowConfiguration, "known red mark must be in or out");
  }
  const Vec bp = sub(arrows.black_prev, arrows.center);
  const Vec bn = sub(arrows.black_next, arrows.center);
  const Vec rp = sub(arrows.red_prev, arrows.center);
  const Vec rn = sub(arrows.red_next, arrows.center);
  const Vec& known_ray = which == KnownArrow::kIncoming ? rp : rn;
  const Vec& target_ray = which == KnownArrow::kIncoming ? rn : rp;

  // An outgoing red arrow along the outgoing black arrow flows the same way;
  // an incoming red arrow along the outgoing black arrow flows against it.
  if (aligned(target_ray, bn)) {
    return which == KnownArrow::kIncoming ? LocationMark::kOnCon : LocationMark::kOnOpp;
  }
  if (aligned(target_ray, bp)) {
    return which == KnownArrow::kIncoming ? LocationMark::kOnOpp : LocationMark::kOnCon;
  }
  const bool same_sector = in_ccw_sector(bn, bp, known_ray) == in_ccw_sector(bn, bp, target_ray);
  if (same_sector) return known;
  return known == LocationMark::kIn ? LocationMark::kOut : LocationMark::kIn;
}

namespace {

// Parameters in (0,1) where `arrow` meets another edge of its own polygon,
// sorted and closed off by 1.
std::vector<Scalar> self_cuts(const Segment& arrow, const std::vector<Segment>& edges) {
  std::vector<Scalar> cuts{Scalar(1)};
  auto add = [&](const Point& p) {
    const Scalar t = parameter_along(arrow, p);
    if (t.sign() > 0 && t < Scalar(1)) cuts.push_back(t);
  };
  for (const Segment& e : edges) {
    if (e == arrow) continue;
    const SegmentIntersection hit = intersect_segments(arrow, e);
    if (hit.kind() == SegmentIntersection::Kind::kSinglePoint) add(hit.point());
    if (hit.kind() == SegmentIntersection::Kind::kOverlap) {
      add(hit.overlap_segment().a());
      add(hit.overlap_segment().b());
    }
  }
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  return cuts;
}

// Side of the interior along the open stretch (lo, hi) of `arrow`, which
// meets no other edge.
Hand hand_along(const Polygon& poly, const std::vector<Segment>& edges, const Segment& arrow, const Scalar& lo,
                const Scalar& hi, MembershipRule rule) {
  static const std::array<std::pair<long, long>, 5> kFractions{{{1, 2}, {1, 3}, {2, 3}, {1, 4}, {3, 4}}};
  for (const auto& [num, den] : kFractions) {
    const Point m = point_at(arrow, lo + (hi - lo) * Scalar(mpq_class(num, den)));
    bool blocked = false;
    std::size_t on_count = 0;
    for (const Segment& e : edges) {
      if (point_on_segment(m, e) && ++on_count > 1) {
        blocked = true;
        break;
      }
    }
    if (blocked) continue;

    const Vec d = sub(arrow.b(), arrow.a());
    const Vec left{-d.y, d.x};
    const Vec right{d.y, -d.x};
    auto probe = [&](const Vec& dir) {
      std::optional<Scalar> nearest;
      for (const Segment& e : edges) {
        if (e == arrow) continue;
        if (auto t = ray_hit(m, dir, e); t && (!nearest || *t < *nearest)) nearest = t;
      }
      const Scalar step = nearest ? *nearest / Scalar(2) : Scalar(1);
      return point_in_polygon(offset(m, dir, step), poly, rule) == PipResult::kIn;
    };
    const bool left_in = probe(left);
    const bool right_in = probe(right);
    if (left_in && !right_in) return Hand::kLeft;
    if (right_in && !left_in) return Hand::kRight;
    std::ostringstream os;
    os << "edge " << arrow.a() << "->" << arrow.b() << " does not separate interior from exterior near " << m;
    throw Error(ErrorCode::kNotABorder, os.str());
  }
  std::ostringstream os;
  os << "edge " << arrow.a() << "->" << arrow.b() << " overlaps another edge of its own polygon";
  throw Error(ErrorCode::kNotABorder, os.str());
}

}  // namespace

Hand local_hand(const Polygon& poly, std::size_t contour, VertexIndex from, MembershipRule rule) {
  const Segment arrow = poly.contours()[contour].arrow(from);
  const std::vector<Segment> edges = poly.edges();
  // Past the first meeting with another edge (a pinch, a crossing) the
  // interior may lie on the other side.
  return hand_along(poly, edges, arrow, Scalar(0), self_cuts(arrow, edges).front(), rule);
}

void resolve_hands(Polygon& poly, MembershipRule rule) {
  const std::vector<Segment> edges = poly.edges();
  for (std::size_t ci = 0; ci < poly.contours().size(); ++ci) {
    Contour& c = poly.contours()[ci];
    std::optional<Hand> seen = c.declared_hand();
    for (VertexIndex i : c.ring_order()) {
      const Segment arrow = c.arrow(i);
      Scalar lo(0);
      for (const Scalar& hi : self_cuts(arrow, edges)) {
        const Hand h = hand_along(poly, edges, arrow, lo, hi, rule);
        if (lo.sign() == 0 && c[i].is_intersection) c[i].local_hand = h;
        lo = hi;
        if (!seen) seen = h;
        if (*seen == h) continue;
        std::ostringstream os;
        if (c.declared_hand()) {
          os << "declared hand disagrees with the region along " << arrow.a() << "->" << arrow.b();
          throw Error(ErrorCode::kDeclaredHandMismatch, os.str());
        }
        // Only a self-intersecting contour can change sides, e.g. the two
        // lobes of a figure-eight.
        os << "interior changes sides along the contour at " << arrow.a() << "->" << arrow.b();
        throw Error(ErrorCode::kSelfIntersectingWithoutDeclaredHand, os.str());
      }
    }
  }
}

}  // namespace fixclip
