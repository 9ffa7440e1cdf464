#include "fixclip/tracing.hpp"

#include <algorithm>
#include <sstream>

#include "fixclip/classification.hpp"
#include "fixclip/error.hpp"

namespace fixclip {

std::string_view to_string(Origin o) { return o == Origin::kClipper ? "clipper" : "subject"; }

std::vector<Point> ResultContour::points() const {
  std::vector<Point> pts;
  pts.reserve(edges.size());
  for (const ResultEdge& e : edges) pts.push_back(e.from);
  return pts;
}

Polygon to_polygon(const ResultRegion& r) {
  std::vector<std::vector<Point>> contours;
  for (const ResultContour& c : r.contours) contours.push_back(c.points());
  return make_polygon(contours, Role::kSubject);
}

namespace {

void reverse_contour(ResultContour& c) {
  std::reverse(c.edges.begin(), c.edges.end());
  for (ResultEdge& e : c.edges) std::swap(e.from, e.to);
}

bool has_flag(const Contour& c) {
  for (VertexIndex i : c.ring_order()) {
    if (c[i].flag != VertexFlag::kNone) return true;
  }
  return false;
}

Hand contour_local_hand(const Polygon& poly, std::size_t ci, MembershipRule rule) {
  const Contour& c = poly.contours()[ci];
  for (VertexIndex i : c.ring_order()) {
    if (c[i].local_hand) return *c[i].local_hand;
  }
  return local_hand(poly, ci, c.head(), rule);
}

ResultContour whole_contour(const Polygon& poly, std::size_t ci, Origin origin, MembershipRule rule) {
  const Contour& c = poly.contours()[ci];
  ResultContour out;
  for (VertexIndex i : c.ring_order()) out.edges.push_back({c[i].position, c[c.next(i)].position, origin});
  if (contour_local_hand(poly, ci, rule) == Hand::kRight) reverse_contour(out);
  return out;
}

struct MarkSummary {
  bool in = false;
  bool out = false;
  bool on = false;
};

MarkSummary summarize(const Polygon& own, std::size_t ci, const Polygon& other, MembershipRule rule) {
  MarkSummary s;
  const Contour& c = own.contours()[ci];
  for (VertexIndex i : c.ring_order()) {
    switch (classify_arrow(c.arrow(i), other, rule)) {
      case LocationMark::kIn: s.in = true; break;
      case LocationMark::kOut: s.out = true; break;
      default: s.on = true; break;
    }
  }
  return s;
}

// For a black contour lying entirely on red arrows: do both interiors sit on
// the same side of the shared border?
bool interiors_same_side(const Polygon& clipper, const Polygon& subject, std::size_t ci, MembershipRule rule) {
  const Contour& c = subject.contours()[ci];
  const VertexIndex head = c.head();
  const LocationMark m = classify_arrow(c.arrow(head), clipper, rule);
  const VertexRef red = *c[head].neighbor;
  const Contour& rc = clipper.contours()[red.contour];
  // The coincident red arrow leaves `red` (con) or arrives at it (opp).
  const VertexIndex red_from = m == LocationMark::kOnCon ? red.vertex : rc.prev(red.vertex);
  const Hand black_hand = local_hand(subject, ci, head, rule);
  const Hand red_hand = local_hand(clipper, red.contour, red_from, rule);
  return (m == LocationMark::kOnCon) == (black_hand == red_hand);
}

[[noreturn]] void not_closing(const std::string& what) { throw Error(ErrorCode::kTraversalNotClosing, what); }

}  // namespace

std::vector<ResultContour> trace_cycles(Polygon& clipper, Polygon& subject) {
  std::size_t budget = 0;
  for (const Polygon* p : {&clipper, &subject}) {
    for (const Contour& c : p->contours()) budget += c.size();
  }
  budget = 2 * budget + 4;

  auto trace_one = [&](const VertexRef& start) {
    ResultContour cycle;
    Polygon* poly = &clipper;
    Polygon* other = &subject;
    bool on_red = true;
    VertexRef cur = start;
    const bool start_forward = clipper.at(start).flag == VertexFlag::kEn;
    std::size_t steps = 0;
    for (;;) {
      Vertex& landing = poly->at(cur);
      landing.processed = true;
      other->at(*landing.neighbor).processed = true;
      const VertexFlag departure = landing.flag;
      const bool forward = departure == VertexFlag::kEn;
      const Contour& c = poly->contours()[cur.contour];
      VertexIndex i = cur.vertex;
      do {
        const VertexIndex j = forward ? c.next(i) : c.prev(i);
        cycle.edges.push_back({c[i].position, c[j].position, on_red ? Origin::kClipper : Origin::kSubject});
        i = j;
        if (++steps > budget) not_closing("walk does not reach a flagged vertex");
      } while (c[i].flag == VertexFlag::kNone);
      if (c[i].flag == departure) {
        std::ostringstream os;
        os << "flags do not alternate between " << landing.position << " and " << c[i].position;
        not_closing(os.str());
      }
      poly->contours()[cur.contour][i].processed = true;
      cur = *c[i].neighbor;
      std::swap(poly, other);
      on_red = !on_red;
      if (on_red && cur == start) break;
      if (poly->at(cur).processed) {
        std::ostringstream os;
        os << "traversal re-enters " << poly->at(cur).position << " before closing";
        not_closing(os.str());
      }
    }
    const Hand hand = clipper.at(start).local_hand.value_or(Hand::kLeft);
    if (start_forward != (hand == Hand::kLeft)) reverse_contour(cycle);
    return cycle;
  };

  std::vector<ResultContour> cycles;
  for (VertexFlag pass : {VertexFlag::kEn, VertexFlag::kEx}) {
    for (std::size_t ci = 0; ci < clipper.contours().size(); ++ci) {
      const Contour& c = clipper.contours()[ci];
      for (VertexIndex i : c.ring_order()) {
        if (c[i].flag == pass && !c[i].processed) cycles.push_back(trace_one({ci, i}));
      }
    }
  }
  return cycles;
}

ResultRegion containment_fallback(const Polygon& clipper, const Polygon& subject, BooleanOp op,
                                  MembershipRule rule) {
  if (op != BooleanOp::kIntersection && op != BooleanOp::kUnion) {
    throw std::invalid_argument("containment fallback needs intersection or union");
  }
  // Intersection keeps contour parts inside the other region, union those outside.
  const bool keep_inside = op == BooleanOp::kIntersection;
  ResultRegion r;
  r.rule = rule;

  for (std::size_t ci = 0; ci < clipper.contours().size(); ++ci) {
    if (has_flag(clipper.contours()[ci])) continue;
    const MarkSummary s = summarize(clipper, ci, subject, rule);
    const bool wanted = keep_inside ? s.in : s.out;
    const bool unwanted = keep_inside ? s.out : s.in;
    if (!wanted) continue;
    if (unwanted || s.on) {
      throw Error(ErrorCode::kInconsistentContainment, "unflagged clipper contour changes sides");
    }
    r.contours.push_back(whole_contour(clipper, ci, Origin::kClipper, rule));
  }

  for (std::size_t ci = 0; ci < subject.contours().size(); ++ci) {
    if (has_flag(subject.contours()[ci])) continue;
    const MarkSummary s = summarize(subject, ci, clipper, rule);
    const bool wanted = keep_inside ? s.in : s.out;
    const bool unwanted = keep_inside ? s.out : s.in;
    if (wanted && unwanted) {
      throw Error(ErrorCode::kInconsistentContainment, "unflagged subject contour changes sides");
    }
    // A contour lying wholly on the clipper border is kept once, from the
    // subject, when both regions agree on its interior side.
    const bool coincident = !s.in && !s.out && s.on && interiors_same_side(clipper, subject, ci, rule);
    if (wanted || coincident) r.contours.push_back(whole_contour(subject, ci, Origin::kSubject, rule));
  }
  return r;
}

ResultRegion trace(Polygon& clipper, Polygon& subject, BooleanOp op, MembershipRule rule) {
  ResultRegion r;
  r.rule = rule;
  r.contours = trace_cycles(clipper, subject);
  ResultRegion rest = containment_fallback(clipper, subject, op, rule);
  for (ResultContour& c : rest.contours) r.contours.push_back(std::move(c));
  return drop_zero_area(std::move(r));
}

ResultRegion drop_zero_area(ResultRegion r, std::size_t* removed) {
  std::size_t dropped = 0;
  std::vector<ResultContour> kept;
  for (ResultContour& c : r.contours) {
    std::vector<ResultEdge> stack;
    for (ResultEdge& e : c.edges) {
      if (!stack.empty() && stack.back().from == e.to) {
        stack.pop_back();
        dropped += 2;
        continue;
      }
      stack.push_back(std::move(e));
    }
    while (stack.size() >= 2 && stack.back().from == stack.front().to) {
      stack.pop_back();
      stack.erase(stack.begin());
      dropped += 2;
    }
    c.edges = std::move(stack);
    if (c.edges.size() < 3 || twice_signed_area(c.points()).sign() == 0) {
      dropped += c.edges.size();
      continue;
    }
    kept.push_back(std::move(c));
  }
  r.contours = std::move(kept);
  if (removed) *removed = dropped;
  return r;
}

namespace {

bool edge_less(const ResultEdge& a, const ResultEdge& b) {
  if (a.from != b.from) return a.from < b.from;
  if (a.to != b.to) return a.to < b.to;
  return a.origin < b.origin;
}

bool contour_less(const ResultContour& a, const ResultContour& b) {
  return std::lexicographical_compare(a.edges.begin(), a.edges.end(), b.edges.begin(), b.edges.end(), edge_less);
}

}  // namespace

ResultRegion canonicalize(ResultRegion r) {
  for (ResultContour& c : r.contours) {
    if (c.edges.empty()) continue;
    ResultContour best = c;
    for (std::size_t k = 1; k < c.edges.size(); ++k) {
      if (c.edges[k].from > best.edges.front().from) continue;
      ResultContour candidate;
      candidate.edges.reserve(c.edges.size());
      std::rotate_copy(c.edges.begin(), c.edges.begin() + static_cast<std::ptrdiff_t>(k), c.edges.end(),
                       std::back_inserter(candidate.edges));
      if (contour_less(candidate, best)) best = std::move(candidate);
    }
    c = std::move(best);
  }
  std::sort(r.contours.begin(), r.contours.end(), contour_less);
  return r;
}

ResultRegion simplify(ResultRegion r) {
  for (ResultContour& c : r.contours) {
    bool changed = true;
    while (changed && c.edges.size() > 3) {
      changed = false;
      for (std::size_t k = 0; k < c.edges.size() && c.edges.size() > 3; ++k) {
        const std::size_t n = (k + 1) % c.edges.size();
        const ResultEdge& a = c.edges[k];
        const ResultEdge& b = c.edges[n];
        if (a.origin != b.origin) continue;
        if (orientation(a.from, a.to, b.to) != Orientation::kCollinear) continue;
        // Pass-through vertex only; a reversal is not a straight run.
        if (!point_on_segment(a.to, Segment(a.from, b.to))) continue;
        ResultEdge merged{a.from, b.to, a.origin};
        c.edges[k] = std::move(merged);
        c.edges.erase(c.edges.begin() + static_cast<std::ptrdiff_t>(n));
        changed = true;
        break;
      }
    }
  }
  return canonicalize(std::move(r));
}

}  // namespace fixclip
