#include <gtest/gtest.h>

#include "corpus.hpp"
#include "fixclip/boolean_op.hpp"
#include "fixclip/error.hpp"
#include "fixclip/oracle.hpp"
#include "fixclip/tracing.hpp"

namespace fixclip {
namespace {

using testing::ring;

Point pt(double x, double y) { return ring({{x, y}}).front(); }

Polygon square(double x0, double y0, double x1, double y1, Role role) {
  return make_polygon({ring({{x0, y0}, {x1, y0}, {x1, y1}, {x0, y1}})}, role);
}

Scalar twice_area(const ResultRegion& r) {
  Scalar a;
  for (const auto& c : r.contours) a += twice_signed_area(c.points());
  return a;
}

void expect_closed(const ResultRegion& r) {
  for (const auto& c : r.contours) {
    ASSERT_FALSE(c.edges.empty());
    for (std::size_t i = 0; i < c.edges.size(); ++i) {
      EXPECT_EQ(c.edges[i].to, c.edges[(i + 1) % c.edges.size()].from);
    }
  }
}

void expect_oracle(const Polygon& red, const Polygon& black, BooleanOp op, const ResultRegion& r) {
  const auto report = check_boolean(red, black, op, r, {.seed = 3, .count = 1000});
  EXPECT_TRUE(report.ok()) << report.witnesses.size() << " disagreements, first at "
                           << (report.witnesses.empty() ? Point{} : report.witnesses.front());
}

TEST(Trace, ShiftedSquares) {
  const Polygon red = square(0, 0, 1, 1, Role::kClipper);
  const Polygon black = square(0.5, 0.5, 1.5, 1.5, Role::kSubject);

  const ResultRegion i = boolean_op(red, black, BooleanOp::kIntersection);
  ASSERT_EQ(i.contours.size(), 1u);
  EXPECT_EQ(i.contours[0].points(), ring({{0.5, 0.5}, {1, 0.5}, {1, 1}, {0.5, 1}}));
  EXPECT_EQ(i.contours[0].edges[0].origin, Origin::kSubject);
  EXPECT_EQ(i.contours[0].edges[1].origin, Origin::kClipper);
  EXPECT_EQ(i.contours[0].edges[2].origin, Origin::kClipper);
  EXPECT_EQ(i.contours[0].edges[3].origin, Origin::kSubject);

  const ResultRegion u = boolean_op(red, black, BooleanOp::kUnion);
  ASSERT_EQ(u.contours.size(), 1u);
  EXPECT_EQ(u.contours[0].edges.size(), 8u);
  EXPECT_EQ(twice_area(u), Scalar(mpq_class(7, 2)));

  const ResultRegion d = boolean_op(red, black, BooleanOp::kDifference);
  ASSERT_EQ(d.contours.size(), 1u);
  EXPECT_EQ(d.contours[0].edges.size(), 6u);
  EXPECT_EQ(twice_area(d), Scalar(mpq_class(3, 2)));
  for (auto op : {BooleanOp::kIntersection, BooleanOp::kUnion, BooleanOp::kDifference}) {
    expect_oracle(red, black, op, boolean_op(red, black, op));
  }
}

TEST(Trace, IdenticalSquaresUseTheSubjectBorder) {
  const Polygon red = square(0, 0, 1, 1, Role::kClipper);
  const Polygon black = square(0, 0, 1, 1, Role::kSubject);
  for (auto op : {BooleanOp::kIntersection, BooleanOp::kUnion}) {
    const ClipResult r = clip(red, black, op);
    EXPECT_EQ(r.outcome, MarkingOutcome::kNoFlags);
    ASSERT_EQ(r.region.contours.size(), 1u);
    for (const auto& e : r.region.contours[0].edges) EXPECT_EQ(e.origin, Origin::kSubject);
    EXPECT_EQ(twice_area(r.region), Scalar(2));
  }
  EXPECT_TRUE(boolean_op(red, black, BooleanOp::kDifference).empty());
}

TEST(Trace, OppositelyOrientedIdenticalSquares) {
  const Polygon red = square(0, 0, 1, 1, Role::kClipper);
  const Polygon black = reversed(square(0, 0, 1, 1, Role::kSubject));
  const ResultRegion r = boolean_op(red, black, BooleanOp::kIntersection);
  ASSERT_EQ(r.contours.size(), 1u);
  EXPECT_EQ(twice_area(r), Scalar(2));
}

TEST(Trace, DisjointAndContained) {
  const Polygon a = square(0, 0, 1, 1, Role::kClipper);
  const Polygon far = square(2, 2, 3, 3, Role::kSubject);
  EXPECT_TRUE(boolean_op(a, far, BooleanOp::kIntersection).empty());
  EXPECT_EQ(boolean_op(a, far, BooleanOp::kUnion).contours.size(), 2u);
  EXPECT_EQ(boolean_op(a, far, BooleanOp::kDifference).contours.size(), 1u);

  const Polygon big = square(-1, -1, 2, 2, Role::kSubject);
  const ResultRegion i = boolean_op(a, big, BooleanOp::kIntersection);
  ASSERT_EQ(i.contours.size(), 1u);
  EXPECT_EQ(i.contours[0].edges[0].origin, Origin::kClipper);
  EXPECT_EQ(twice_area(i), Scalar(2));

  const ResultRegion u = boolean_op(a, big, BooleanOp::kUnion);
  ASSERT_EQ(u.contours.size(), 1u);
  EXPECT_EQ(twice_area(u), Scalar(18));

  // big minus a leaves a square with a hole.
  const ResultRegion d = boolean_op(a, big, BooleanOp::kDifference);
  ASSERT_EQ(d.contours.size(), 2u);
  EXPECT_EQ(twice_area(d), Scalar(16));
  expect_oracle(a, big, BooleanOp::kDifference, d);
}

TEST(Trace, SharedEdgeSquares) {
  const Polygon red = square(1, 0, 2, 1, Role::kClipper);
  const Polygon black = square(0, 0, 1, 1, Role::kSubject);
  EXPECT_TRUE(boolean_op(red, black, BooleanOp::kIntersection).empty());
  const ClipResult u = clip(red, black, BooleanOp::kUnion, {.simplify = true});
  ASSERT_EQ(u.region.contours.size(), 1u);
  EXPECT_EQ(u.region.contours[0].points(), ring({{0, 0}, {1, 0}, {2, 0}, {2, 1}, {1, 1}, {0, 1}}));
  EXPECT_EQ(twice_area(u.region), Scalar(4));
  const ResultRegion d = boolean_op(red, black, BooleanOp::kDifference);
  ASSERT_EQ(d.contours.size(), 1u);
  EXPECT_EQ(twice_area(d), Scalar(2));
  for (const auto& e : d.contours[0].edges) EXPECT_EQ(e.origin, Origin::kSubject);
}

TEST(Trace, HoleInSubject) {
  const Polygon red = square(1, 1, 3, 3, Role::kClipper);
  const Polygon black = make_polygon(
      {ring({{0, 0}, {4, 0}, {4, 4}, {0, 4}}), ring({{1.5, 1.5}, {1.5, 2.5}, {2.5, 2.5}, {2.5, 1.5}})},
      Role::kSubject);
  for (auto op : {BooleanOp::kIntersection, BooleanOp::kUnion, BooleanOp::kDifference}) {
    const ResultRegion r = boolean_op(red, black, op);
    expect_closed(r);
    expect_oracle(red, black, op, r);
  }
  EXPECT_EQ(twice_area(boolean_op(red, black, BooleanOp::kIntersection)), Scalar(6));
}

TEST(Trace, ContainmentFallbackRejectsDifference) {
  Polygon red = square(0, 0, 1, 1, Role::kClipper);
  Polygon black = square(2, 2, 3, 3, Role::kSubject);
  EXPECT_THROW(containment_fallback(red, black, BooleanOp::kDifference, MembershipRule::kNonzeroWinding),
               std::invalid_argument);
}

TEST(Trace, InOutOverlapFlagsOnlyTheFirstVertex) {
  const auto f = testing::in_out_con_overlap();
  const ClipResult r = clip(f.clipper, f.subject, BooleanOp::kIntersection);
  const Polygon& red = r.clipper;
  EXPECT_EQ(red.at(testing::vertex_at(red, f.a)).flag, VertexFlag::kEx);
  EXPECT_EQ(red.at(testing::vertex_at(red, f.c)).flag, VertexFlag::kNone);
  EXPECT_EQ(red.at(testing::vertex_at(red, f.b)).flag, VertexFlag::kNone);
  EXPECT_EQ(r.dropped_edges, 0u);
  expect_oracle(f.clipper, f.subject, BooleanOp::kIntersection, r.region);
}

TEST(Trace, OutInOverlapFlagsTheLastVertex) {
  const auto f = testing::out_in_opp_overlap();
  const ClipResult r = clip(f.clipper, f.subject, BooleanOp::kIntersection);
  const Polygon& red = r.clipper;
  EXPECT_EQ(red.at(testing::vertex_at(red, f.a)).flag, VertexFlag::kNone);
  EXPECT_EQ(red.at(testing::vertex_at(red, f.c)).flag, VertexFlag::kNone);
  EXPECT_EQ(red.at(testing::vertex_at(red, f.b)).flag, VertexFlag::kEn);
  EXPECT_EQ(r.dropped_edges, 0u);
  expect_oracle(f.clipper, f.subject, BooleanOp::kIntersection, r.region);
}

bool has_spike(const std::vector<ResultContour>& cycles) {
  for (const auto& c : cycles) {
    const std::size_t n = c.edges.size();
    for (std::size_t i = 0; i < n; ++i) {
      if (c.edges[i].from == c.edges[(i + 1) % n].to) return true;
    }
  }
  return false;
}

TEST(Trace, EnteringAtTheMiddleVertexLeavesASpike) {
  const auto f = testing::out_in_opp_overlap();
  auto prep = testing::prepare(f.clipper, f.subject);
  mark(prep.clipper, prep.subject, prep.types, BooleanOp::kIntersection);
  {
    Polygon red = prep.clipper, black = prep.subject;
    EXPECT_FALSE(has_spike(trace_cycles(red, black)));
  }
  prep.clipper.at(testing::vertex_at(prep.clipper, f.b)).flag = VertexFlag::kNone;
  prep.clipper.at(testing::vertex_at(prep.clipper, f.c)).flag = VertexFlag::kEn;
  for (std::size_t ci = 0; ci < prep.subject.contours().size(); ++ci) {
    const Contour& c = prep.subject.contours()[ci];
    for (VertexIndex i : c.ring_order()) prep.subject.at({ci, i}).flag = VertexFlag::kNone;
  }
  flag_subject(prep.clipper, prep.subject);
  const auto cycles = trace_cycles(prep.clipper, prep.subject);
  EXPECT_TRUE(has_spike(cycles));
  std::size_t removed = 0;
  drop_zero_area(ResultRegion{cycles}, &removed);
  EXPECT_EQ(removed, 2u);
}

TEST(DropZeroArea, RemovesSpikesAndFlatCycles) {
  const auto e = [](double x0, double y0, double x1, double y1) {
    return ResultEdge{pt(x0, y0), pt(x1, y1), Origin::kSubject};
  };
  ResultRegion r;
  r.contours.push_back({{e(0, 0, 2, 0), e(2, 0, 3, 0), e(3, 0, 2, 0), e(2, 0, 2, 2), e(2, 2, 0, 0)}});
  r.contours.push_back({{e(5, 5, 6, 5), e(6, 5, 5, 5)}});
  // Spike across the wrap-around.
  r.contours.push_back({{e(0, 5, 1, 5), e(1, 5, 1, 6), e(1, 6, 0, 5), e(0, 5, -1, 5), e(-1, 5, 0, 5)}});
  std::size_t removed = 0;
  const ResultRegion out = drop_zero_area(r, &removed);
  EXPECT_EQ(removed, 6u);
  ASSERT_EQ(out.contours.size(), 2u);
  EXPECT_EQ(out.contours[0].points(), ring({{0, 0}, {2, 0}, {2, 2}}));
  EXPECT_EQ(out.contours[1].points(), ring({{0, 5}, {1, 5}, {1, 6}}));
}

TEST(Canonicalize, RotationAndOrder) {
  const auto e = [](double x0, double y0, double x1, double y1, Origin o = Origin::kSubject) {
    return ResultEdge{pt(x0, y0), pt(x1, y1), o};
  };
  ResultRegion r;
  r.contours.push_back({{e(3, 3, 2, 3), e(2, 3, 2, 2), e(2, 2, 3, 2), e(3, 2, 3, 3)}});
  r.contours.push_back({{e(1, 0, 1, 1), e(1, 1, 0, 1), e(0, 1, 0, 0), e(0, 0, 1, 0, Origin::kClipper)}});
  const ResultRegion c = canonicalize(r);
  EXPECT_EQ(c.contours[0].points(), ring({{0, 0}, {1, 0}, {1, 1}, {0, 1}}));
  EXPECT_EQ(c.contours[0].edges[0].origin, Origin::kClipper);
  EXPECT_EQ(c.contours[1].points(), ring({{2, 2}, {3, 2}, {3, 3}, {2, 3}}));
  EXPECT_EQ(canonicalize(c), c);
}

TEST(Simplify, MergesCollinearRunsOfOneOrigin) {
  const auto e = [](double x0, double y0, double x1, double y1, Origin o) {
    return ResultEdge{pt(x0, y0), pt(x1, y1), o};
  };
  ResultRegion r;
  r.contours.push_back({{e(0, 0, 1, 0, Origin::kSubject), e(1, 0, 2, 0, Origin::kSubject),
                         e(2, 0, 3, 0, Origin::kClipper), e(3, 0, 3, 1, Origin::kClipper),
                         e(3, 1, 0, 1, Origin::kSubject), e(0, 1, 0, 0, Origin::kSubject)}});
  const ResultRegion s = simplify(r);
  ASSERT_EQ(s.contours.size(), 1u);
  EXPECT_EQ(s.contours[0].points(), ring({{0, 0}, {2, 0}, {3, 0}, {3, 1}, {0, 1}}));
}

}  // namespace
}  // namespace fixclip
