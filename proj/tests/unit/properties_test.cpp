#include <gtest/gtest.h>

#include <random>

#include "corpus.hpp"
#include "fixclip/boolean_op.hpp"
#include "fixclip/io.hpp"
#include "fixclip/oracle.hpp"

namespace fixclip {
namespace {

std::string clip_text(const PolygonFile& c, const PolygonFile& s, BooleanOp op, const ClipOptions& o = {}) {
  return write_result_file(boolean_op(c.to_polygon(Role::kClipper), s.to_polygon(Role::kSubject), op, o), op);
}

void oracle_agrees(BooleanOp op) {
  for (const auto& c : testing::degenerate_corpus(41, 60)) {
    const Polygon red = c.clipper.to_polygon(Role::kClipper);
    const Polygon black = c.subject.to_polygon(Role::kSubject);
    const ResultRegion r = boolean_op(red, black, op);
    const OracleReport report = check_boolean(red, black, op, r, {.seed = 2, .count = 300});
    EXPECT_TRUE(report.ok()) << c.name << ": " << report.witnesses.size() << " disagreements";
  }
}

void flags_alternate(BooleanOp op) {
  for (const auto& c : testing::degenerate_corpus(42, 60)) {
    const ClipResult r = clip(c.clipper.to_polygon(Role::kClipper), c.subject.to_polygon(Role::kSubject), op);
    const FlagStructure red = check_flag_structure(r.clipper);
    const FlagStructure black = check_flag_structure(r.subject);
    EXPECT_TRUE(red.ok()) << c.name;
    EXPECT_TRUE(black.ok()) << c.name;
    EXPECT_EQ(red.en + red.ex, black.en + black.ex) << c.name;
  }
}

void deterministic(BooleanOp op) {
  std::mt19937_64 rng(43);
  for (const auto& c : testing::degenerate_corpus(43, 30)) {
    const std::string base = clip_text(c.clipper, c.subject, op);
    EXPECT_EQ(clip_text(testing::rotate_start(c.clipper, 1), testing::rotate_start(c.subject, 2), op), base)
        << c.name;
    EXPECT_EQ(clip_text(c.clipper, c.subject, op, {.intersection = {.reverse_pair_order = true}}), base) << c.name;
    const ClipOptions simple{.simplify = true};
    EXPECT_EQ(clip_text(testing::insert_midpoints(c.clipper, rng), testing::insert_midpoints(c.subject, rng), op,
                        simple),
              clip_text(c.clipper, c.subject, op, simple))
        << c.name;
  }
}

TEST(OracleAgrees, Intersection) { oracle_agrees(BooleanOp::kIntersection); }
TEST(OracleAgrees, Union) { oracle_agrees(BooleanOp::kUnion); }
TEST(OracleAgrees, Difference) { oracle_agrees(BooleanOp::kDifference); }

TEST(FlagsAlternate, Intersection) { flags_alternate(BooleanOp::kIntersection); }
TEST(FlagsAlternate, Union) { flags_alternate(BooleanOp::kUnion); }
TEST(FlagsAlternate, Difference) { flags_alternate(BooleanOp::kDifference); }

TEST(Deterministic, Intersection) { deterministic(BooleanOp::kIntersection); }
TEST(Deterministic, Union) { deterministic(BooleanOp::kUnion); }
TEST(Deterministic, Difference) { deterministic(BooleanOp::kDifference); }

TEST(Corpus, IsValidAndDegenerate) {
  const auto cases = testing::degenerate_corpus(1, 200);
  ASSERT_EQ(cases.size(), 200u);
  std::size_t with_overlap = 0;
  for (const auto& c : cases) {
    for (const auto* f : {&c.clipper, &c.subject}) {
      const Polygon p = f->to_polygon(Role::kSubject);
      for (const Contour& k : p.contours()) {
        EXPECT_TRUE(is_simple(k)) << c.name;
        EXPECT_LE(k.size(), 64u);
      }
    }
    const Polygon red = c.clipper.to_polygon(Role::kClipper);
    const Polygon black = c.subject.to_polygon(Role::kSubject);
    bool overlap = false;
    for (const Segment& a : red.edges()) {
      for (const Segment& b : black.edges()) {
        overlap |= intersect_segments(a, b).kind() == SegmentIntersection::Kind::kOverlap;
      }
    }
    with_overlap += overlap;
  }
  EXPECT_GT(with_overlap, 100u);
}

}  // namespace
}  // namespace fixclip
