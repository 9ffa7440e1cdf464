#include "fixclip/oracle.hpp"

#include <algorithm>
#include <optional>
#include <random>

namespace fixclip {

namespace {

std::vector<std::vector<Point>> rings_of(const Polygon& poly) {
  std::vector<std::vector<Point>> rings;
  for (const Contour& c : poly.contours()) rings.push_back(c.points());
  return rings;
}

std::vector<std::vector<Point>> rings_of(const ResultRegion& r) {
  std::vector<std::vector<Point>> rings;
  for (const ResultContour& c : r.contours) rings.push_back(c.points());
  return rings;
}

// Sign of (b - a) x (p - a) without going through the geometry kernel.
int side(const Point& a, const Point& b, const Point& p) {
  const mpq_class v = (b.x.raw() - a.x.raw()) * (p.y.raw() - a.y.raw()) -
                      (b.y.raw() - a.y.raw()) * (p.x.raw() - a.x.raw());
  return sgn(v);
}

bool inside(long winding, MembershipRule rule) {
  return rule == MembershipRule::kEvenOdd ? (winding & 1) != 0 : winding != 0;
}

struct Box {
  Scalar x0, y0, x1, y1;
};

void grow(std::optional<Box>& box, const Point& p) {
  if (!box) {
    box = Box{p.x, p.y, p.x, p.y};
    return;
  }
  box->x0 = std::min(box->x0, p.x);
  box->y0 = std::min(box->y0, p.y);
  box->x1 = std::max(box->x1, p.x);
  box->y1 = std::max(box->y1, p.y);
}

}  // namespace

long winding_number(const Point& p, const std::vector<std::vector<Point>>& rings) {
  long w = 0;
  for (const auto& ring : rings) {
    const std::size_t n = ring.size();
    for (std::size_t i = 0; i < n; ++i) {
      const Point& a = ring[i];
      const Point& b = ring[(i + 1) % n];
      const bool a_below = a.y <= p.y;
      const bool b_below = b.y <= p.y;
      // Cheap rejection before any product is formed.
      if (a_below == b_below) {
        if (a.y == p.y && b.y == p.y && std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x)) {
          throw OnBoundary();
        }
        if (a == p) throw OnBoundary();
        continue;
      }
      const int s = side(a, b, p);
      if (s == 0) throw OnBoundary();
      if (a_below && s > 0) ++w;
      else if (!a_below && s < 0) --w;
    }
  }
  return w;
}

bool membership(const Point& p, const Polygon& poly, MembershipRule rule) {
  const bool in = inside(winding_number(p, rings_of(poly)), rule);
  return poly.complemented() ? !in : in;
}

bool membership(const Point& p, const ResultRegion& region) {
  return winding_number(p, rings_of(region)) != 0;
}

OracleReport check_boolean(const Polygon& clipper, const Polygon& subject, BooleanOp op,
                           const ResultRegion& result, const SamplePlan& plan, MembershipRule rule) {
  OracleReport report;
  const auto red = rings_of(clipper);
  const auto black = rings_of(subject);
  const auto out = rings_of(result);

  std::optional<Box> box;
  for (const auto* rings : {&red, &black, &out}) {
    for (const auto& ring : *rings) {
      for (const Point& p : ring) grow(box, p);
    }
  }
  if (!box) return report;
  Scalar w = box->x1 - box->x0;
  Scalar h = box->y1 - box->y0;
  if (w.sign() == 0) w = Scalar(1);
  if (h.sign() == 0) h = Scalar(1);
  const Scalar x0 = box->x0 - w * plan.inflation;
  const Scalar y0 = box->y0 - h * plan.inflation;
  const Scalar sx = w * (Scalar(1) + Scalar(2) * plan.inflation) / Scalar(plan.grid);
  const Scalar sy = h * (Scalar(1) + Scalar(2) * plan.inflation) / Scalar(plan.grid);

  std::mt19937_64 rng(plan.seed);
  std::uniform_int_distribution<long> cell(0, plan.grid);
  const std::size_t max_attempts = plan.count * 20 + 100;
  std::size_t attempts = 0;
  while (report.samples < plan.count && attempts++ < max_attempts) {
    const Point p{x0 + sx * Scalar(cell(rng)), y0 + sy * Scalar(cell(rng))};
    bool expected = false;
    bool actual = false;
    try {
      const bool in_red = inside(winding_number(p, red), rule) != clipper.complemented();
      const bool in_black = inside(winding_number(p, black), rule) != subject.complemented();
      actual = winding_number(p, out) != 0;
      switch (op) {
        case BooleanOp::kIntersection: expected = in_red && in_black; break;
        case BooleanOp::kUnion: expected = in_red || in_black; break;
        case BooleanOp::kDifference: expected = in_black && !in_red; break;
      }
    } catch (const OnBoundary&) {
      ++report.resampled;
      continue;
    }
    ++report.samples;
    if (expected != actual) report.witnesses.push_back(p);
  }
  return report;
}

}  // namespace fixclip
