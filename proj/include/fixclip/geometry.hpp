#pragma once

#include <gmpxx.h>

#include <compare>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

namespace fixclip {

/// Exact rational coordinate. Every arithmetic operation is error free, so
/// vertex-on-edge and edge-overlap configurations are represented exactly.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long v) : value_(v) {}  // NOLINT(google-explicit-constructor)
  explicit Scalar(mpq_class v) : value_(std::move(v)) { value_.canonicalize(); }

  /// Parses an integer ("-3"), a decimal ("0.25", "1.5e-2") or a fraction
  /// ("1/3") without rounding. Throws Error(kBadScalar) on malformed text.
  static Scalar parse(std::string_view text);

  /// Shortest exact text: integer, terminating decimal, or "p/q".
  std::string to_string() const;
  double to_double() const { return value_.get_d(); }
  int sign() const { return sgn(value_); }
  const mpq_class& raw() const { return value_; }

  Scalar operator-() const { return Scalar(mpq_class(-value_)); }
  Scalar& operator+=(const Scalar& o) { value_ += o.value_; return *this; }
  Scalar& operator-=(const Scalar& o) { value_ -= o.value_; return *this; }
  Scalar& operator*=(const Scalar& o) { value_ *= o.value_; return *this; }
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  friend bool operator==(const Scalar& a, const Scalar& b) { return cmp(a.value_, b.value_) == 0; }
  friend std::strong_ordering operator<=>(const Scalar& a, const Scalar& b) {
    return cmp(a.value_, b.value_) <=> 0;
  }

 private:
  mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

struct Point {
  Scalar x;
  Scalar y;

  friend bool operator==(const Point&, const Point&) = default;
  // Lexicographic (x, then y); used for canonical ordering.
  friend std::strong_ordering operator<=>(const Point& a, const Point& b) {
    if (auto c = a.x <=> b.x; c != 0) return c;
    return a.y <=> b.y;
  }
};

std::ostream& operator<<(std::ostream& os, const Point& p);

Point midpoint(const Point& a, const Point& b);

/// Oriented edge a->b of positive length.
class Segment {
 public:
  /// Throws Error(kZeroLengthSegment) when a == b.
  Segment(Point a, Point b);

  const Point& a() const { return a_; }
  const Point& b() const { return b_; }
  Segment reversed() const { return Segment(b_, a_); }

  friend bool operator==(const Segment&, const Segment&) = default;

 private:
  Point a_;
  Point b_;
};

enum class Orientation { kLeft, kRight, kCollinear };

/// Exact cross product (q - p) x (r - p).
Scalar cross(const Point& p, const Point& q, const Point& r);
Orientation orientation(const Point& p, const Point& q, const Point& r);

/// True iff p is collinear with s and inside its closed extent.
bool point_on_segment(const Point& p, const Segment& s);

/// Position of p along s, 0 at s.a() and 1 at s.b(). Only meaningful for
/// points on the supporting line.
Scalar parameter_along(const Segment& s, const Point& p);
Point point_at(const Segment& s, const Scalar& t);

class SegmentIntersection {
 public:
  enum class Kind { kEmpty, kSinglePoint, kOverlap };

  static SegmentIntersection empty() { return SegmentIntersection(); }
  static SegmentIntersection single(Point p);
  static SegmentIntersection overlap(Segment s);

  Kind kind() const { return kind_; }
  /// Valid for kSinglePoint.
  const Point& point() const { return *point_; }
  /// Valid for kOverlap; endpoints are stored in lexicographic order.
  const Segment& overlap_segment() const { return *overlap_; }

  friend bool operator==(const SegmentIntersection&, const SegmentIntersection&) = default;

 private:
  Kind kind_ = Kind::kEmpty;
  std::optional<Point> point_;
  std::optional<Segment> overlap_;
};

/// Common part of two closed segments. Endpoint touches are kSinglePoint;
/// collinear overlaps of positive length are kOverlap.
SegmentIntersection intersect_segments(const Segment& s1, const Segment& s2);

}  // namespace fixclip
