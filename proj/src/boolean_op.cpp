#include "fixclip/boolean_op.hpp"

#include "fixclip/classification.hpp"
#include "fixclip/error.hpp"

namespace fixclip {

std::vector<FlaggedVertex> ClipResult::flags() const {
  std::vector<FlaggedVertex> out;
  for (const Polygon* p : {&clipper, &subject}) {
    for (const Contour& c : p->contours()) {
      for (VertexIndex i : c.ring_order()) {
        if (c[i].flag != VertexFlag::kNone) out.push_back({c[i].position, p->role(), c[i].flag});
      }
    }
  }
  return out;
}

ClipResult clip(const Polygon& clipper, const Polygon& subject, BooleanOp op, const ClipOptions& options) {
  ClipResult res;
  if (op == BooleanOp::kDifference) {
    ReducedDifference reduced = reduce_difference(clipper, subject);
    res.clipper = std::move(reduced.clipper);
    res.subject = std::move(reduced.subject);
    op = reduced.op;
  } else {
    res.clipper = clipper;
    res.subject = subject;
  }

  res.intersections = find_and_insert_intersections(res.clipper, res.subject, options.intersection).size();
  if (!assert_completed(res.clipper, res.subject)) {
    throw Error(ErrorCode::kArrowCrossesOtherContour, "intersection phase left crossing arrows");
  }
  resolve_hands(res.clipper, options.rule);
  resolve_hands(res.subject, options.rule);

  const ClassificationTable types = classify_all(res.clipper, res.subject, options.rule);
  // Runs are grouped only to reject mixed-sense overlaps early.
  group_trials(res.clipper, types);
  res.outcome = mark(res.clipper, res.subject, types, op);

  ResultRegion region;
  region.rule = options.rule;
  region.contours = trace_cycles(res.clipper, res.subject);
  for (ResultContour& c : containment_fallback(res.clipper, res.subject, op, options.rule).contours) {
    region.contours.push_back(std::move(c));
  }
  region = canonicalize(drop_zero_area(std::move(region), &res.dropped_edges));
  if (options.simplify) region = simplify(std::move(region));
  res.region = std::move(region);
  return res;
}

ResultRegion boolean_op(const Polygon& clipper, const Polygon& subject, BooleanOp op, const ClipOptions& options) {
  return clip(clipper, subject, op, options).region;
}

FlagStructure check_flag_structure(const Polygon& poly) {
  FlagStructure s;
  for (const Contour& c : poly.contours()) {
    VertexFlag first = VertexFlag::kNone;
    VertexFlag last = VertexFlag::kNone;
    for (VertexIndex i : c.ring_order()) {
      const VertexFlag f = c[i].flag;
      if (f == VertexFlag::kNone) continue;
      if (f == VertexFlag::kEn) ++s.en;
      else ++s.ex;
      if (first == VertexFlag::kNone) first = f;
      if (last == f) s.alternating = false;
      last = f;
    }
    // The ring wraps around: the last flag must differ from the first.
    if (first != VertexFlag::kNone && first == last) s.alternating = false;
  }
  return s;
}

}  // namespace fixclip
