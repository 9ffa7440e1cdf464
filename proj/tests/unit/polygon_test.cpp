#include <gtest/gtest.h>

#include <random>

#include "corpus.hpp"
#include "fixclip/error.hpp"
#include "fixclip/polygon.hpp"

namespace fixclip {
namespace {

using testing::ring;

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::kParse;
}

TEST(BuildContour, SquareRing) {
  const Contour c = build_contour(ring({{0, 0}, {1, 0}, {1, 1}, {0, 1}}));
  EXPECT_EQ(c.size(), 4u);
  EXPECT_EQ(contour_hand(c), Hand::kLeft);
  VertexIndex i = c.head();
  for (int k = 0; k < 4; ++k) {
    EXPECT_EQ(c.prev(c.next(i)), i);
    i = c.next(i);
  }
  EXPECT_EQ(i, c.head());
}

TEST(BuildContour, Errors) {
  EXPECT_EQ(code_of([] { build_contour(ring({{0, 0}, {1, 0}})); }), ErrorCode::kTooFewVertices);
  EXPECT_EQ(code_of([] { build_contour(ring({{0, 0}, {0, 0}, {1, 1}})); }), ErrorCode::kDuplicateConsecutivePoint);
  // The closing edge counts as consecutive too.
  EXPECT_EQ(code_of([] { build_contour(ring({{0, 0}, {1, 0}, {1, 1}, {0, 0}})); }),
            ErrorCode::kDuplicateConsecutivePoint);
}

TEST(ContourHand, OrientationAndDeclared) {
  EXPECT_EQ(contour_hand(build_contour(ring({{0, 0}, {1, 0}, {1, 1}, {0, 1}}))), Hand::kLeft);
  EXPECT_EQ(contour_hand(build_contour(ring({{0, 0}, {0, 1}, {1, 1}, {1, 0}}))), Hand::kRight);
  const auto eight = ring({{0, 0}, {2, 2}, {2, 0}, {0, 2}});
  EXPECT_EQ(code_of([&] { contour_hand(build_contour(eight)); }), ErrorCode::kSelfIntersectingWithoutDeclaredHand);
  EXPECT_EQ(contour_hand(build_contour(eight, Hand::kRight)), Hand::kRight);
}

TEST(IsSimple, DetectsCrossingsAndPinches) {
  EXPECT_TRUE(is_simple(build_contour(ring({{0, 0}, {1, 0}, {1, 1}, {0, 1}}))));
  EXPECT_FALSE(is_simple(build_contour(ring({{0, 0}, {2, 2}, {2, 0}, {0, 2}}))));
  EXPECT_FALSE(is_simple(build_contour(ring({{0, 0}, {2, 2}, {4, 0}, {4, 4}, {2, 2}, {0, 4}}))));
  // Spike back along the previous edge.
  EXPECT_FALSE(is_simple(build_contour(ring({{0, 0}, {2, 0}, {1, 0}, {1, 1}}))));
}

TEST(InsertVertexOnEdge, SpecExamples) {
  Contour c = build_contour(ring({{0, 0}, {2, 0}, {2, 2}}));
  const VertexIndex a = c.head();
  const VertexIndex b = c.next(a);

  const VertexIndex m = insert_vertex_on_edge(c, a, ring({{1, 0}}).front());
  EXPECT_EQ(c.size(), 4u);
  EXPECT_TRUE(c[m].is_intersection);
  EXPECT_FALSE(c[m].original);
  EXPECT_EQ(c.next(a), m);
  EXPECT_EQ(c.next(m), b);

  const VertexIndex same = insert_vertex_on_edge(c, a, ring({{0, 0}}).front());
  EXPECT_EQ(same, a);
  EXPECT_EQ(c.size(), 4u);
  EXPECT_TRUE(c[a].is_intersection);

  EXPECT_EQ(code_of([&] { insert_vertex_on_edge(c, a, ring({{1, 1}}).front()); }), ErrorCode::kPointNotOnEdge);
}

TEST(InsertVertexOnEdge, RingStaysConsistentUnderRandomInsertions) {
  std::mt19937_64 rng(7);
  Contour c = build_contour(ring({{0, 0}, {4, 0}, {4, 4}, {0, 4}}));
  for (int k = 0; k < 200; ++k) {
    const std::vector<VertexIndex> order = c.ring_order();
    const VertexIndex from = order[std::uniform_int_distribution<std::size_t>(0, order.size() - 1)(rng)];
    const Point p = midpoint(c[from].position, c[c.next(from)].position);
    insert_vertex_on_edge(c, from, p);
  }
  EXPECT_EQ(c.size(), 204u);
  const auto order = c.ring_order();
  ASSERT_EQ(order.size(), c.size());
  for (VertexIndex i : order) EXPECT_EQ(c.next(c.prev(i)), i);
  // Positions along each side increase monotonically.
  EXPECT_EQ(twice_signed_area(c.points()), Scalar(32));
}

TEST(Polygon, ReversedFlipsDeclaredHand) {
  const Polygon p = make_polygon({ring({{0, 0}, {1, 0}, {1, 1}})}, Role::kClipper, Hand::kLeft);
  const Polygon r = reversed(p);
  EXPECT_EQ(r.contours()[0].declared_hand(), Hand::kRight);
  EXPECT_EQ(contour_hand(build_contour(r.contours()[0].points())), Hand::kRight);
  EXPECT_EQ(r.role(), Role::kClipper);
}

}  // namespace
}  // namespace fixclip
