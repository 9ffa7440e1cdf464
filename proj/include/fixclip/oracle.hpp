#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "fixclip/marking.hpp"
#include "fixclip/polygon.hpp"
#include "fixclip/tracing.hpp"

namespace fixclip {

// Brute-force region membership used to validate clipping results. It shares
// no code with the classification winding count.

class OnBoundary : public std::runtime_error {
 public:
  OnBoundary() : std::runtime_error("sample lies on a boundary") {}
};

/// Crossing-number winding of p (upward crossings count +1, downward -1).
/// Throws OnBoundary when p lies on an edge.
long winding_number(const Point& p, const std::vector<std::vector<Point>>& rings);

/// Region membership of p under `rule`, honouring Polygon::complemented().
bool membership(const Point& p, const Polygon& poly, MembershipRule rule);

/// Result regions are read with the nonzero rule (contours carry their
/// interior on the left, holes run the other way).
bool membership(const Point& p, const ResultRegion& region);

struct SamplePlan {
  std::uint64_t seed = 1;
  std::size_t count = 1000;
  // Bounding box grows by this fraction of its extent on every side.
  Scalar inflation = Scalar(mpq_class(1, 8));
  // Samples sit on a grid with this many cells per axis; a prime keeps them
  // off the dyadic lattices used by typical inputs.
  long grid = 4093;
};

struct OracleReport {
  std::size_t samples = 0;
  std::size_t resampled = 0;
  std::vector<Point> witnesses;

  bool ok() const { return witnesses.empty(); }
};

/// Compares `result` against the pointwise combination of the inputs:
/// intersection a and b, union a or b, difference subject and not clipper.
OracleReport check_boolean(const Polygon& clipper, const Polygon& subject, BooleanOp op,
                           const ResultRegion& result, const SamplePlan& plan,
                           MembershipRule rule = MembershipRule::kNonzeroWinding);

}  // namespace fixclip
