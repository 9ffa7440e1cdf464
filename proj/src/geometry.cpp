#include "fixclip/geometry.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>

#include "fixclip/error.hpp"

namespace fixclip {

namespace {

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) {
    return std::isdigit(static_cast<unsigned char>(c)) != 0;
  });
}

[[noreturn]] void bad_scalar(std::string_view text) {
  throw Error(ErrorCode::kBadScalar, "cannot parse '" + std::string(text) + "' as an exact number");
}

mpz_class pow10(unsigned long e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, e);
  return r;
}

Scalar parse_decimal(std::string_view text) {
  std::string_view s = text;
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  long exponent = 0;
  if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
    std::string_view exp_text = s.substr(e + 1);
    s = s.substr(0, e);
    bool exp_negative = false;
    if (!exp_text.empty() && (exp_text.front() == '-' || exp_text.front() == '+')) {
      exp_negative = exp_text.front() == '-';
      exp_text.remove_prefix(1);
    }
    if (!all_digits(exp_text) || exp_text.size() > 6) bad_scalar(text);
    exponent = std::stol(std::string(exp_text));
    if (exp_negative) exponent = -exponent;
  }
  std::string_view int_part = s;
  std::string_view frac_part;
  if (auto dot = s.find('.'); dot != std::string_view::npos) {
    int_part = s.substr(0, dot);
    frac_part = s.substr(dot + 1);
  }
  if (int_part.empty() && frac_part.empty()) bad_scalar(text);
  if (!int_part.empty() && !all_digits(int_part)) bad_scalar(text);
  if (!frac_part.empty() && !all_digits(frac_part)) bad_scalar(text);

  mpz_class num(std::string(int_part.empty() ? "0" : int_part) + std::string(frac_part), 10);
  exponent -= static_cast<long>(frac_part.size());
  mpq_class q;
  if (exponent >= 0) {
    q = mpq_class(num * pow10(static_cast<unsigned long>(exponent)));
  } else {
    q = mpq_class(num, pow10(static_cast<unsigned long>(-exponent)));
  }
  if (negative) q = -q;
  return Scalar(q);
}

}  // namespace

Scalar Scalar::parse(std::string_view text) {
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    std::string_view num = text.substr(0, slash);
    std::string_view den = text.substr(slash + 1);
    bool negative = false;
    if (!num.empty() && (num.front() == '-' || num.front() == '+')) {
      negative = num.front() == '-';
      num.remove_prefix(1);
    }
    if (!all_digits(num) || !all_digits(den)) bad_scalar(text);
    mpz_class d(std::string(den), 10);
    if (d == 0) bad_scalar(text);
    mpq_class q(mpz_class(std::string(num), 10), d);
    if (negative) q = -q;
    return Scalar(q);
  }
  return parse_decimal(text);
}

std::string Scalar::to_string() const {
  const mpz_class& den = value_.get_den();
  if (den == 1) return value_.get_num().get_str();

  mpz_class rest = den;
  unsigned long twos = 0;
  unsigned long fives = 0;
  while (mpz_divisible_ui_p(rest.get_mpz_t(), 2) != 0) {
    rest /= 2;
    ++twos;
  }
  while (mpz_divisible_ui_p(rest.get_mpz_t(), 5) != 0) {
    rest /= 5;
    ++fives;
  }
  if (rest != 1) return value_.get_num().get_str() + "/" + den.get_str();

  unsigned long digits = std::max(twos, fives);
  mpz_class scaled = value_.get_num() * pow10(digits) / den;
  bool negative = scaled < 0;
  std::string body = mpz_class(abs(scaled)).get_str();
  if (body.size() <= digits) body.insert(0, digits + 1 - body.size(), '0');
  body.insert(body.size() - digits, ".");
  return negative ? "-" + body : body;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.sign() == 0) throw Error(ErrorCode::kBadScalar, "division by zero");
  value_ /= o.value_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

std::ostream& operator<<(std::ostream& os, const Point& p) {
  return os << '(' << p.x << ", " << p.y << ')';
}

Point midpoint(const Point& a, const Point& b) {
  const Scalar half(mpq_class(1, 2));
  return {(a.x + b.x) * half, (a.y + b.y) * half};
}

Segment::Segment(Point a, Point b) : a_(std::move(a)), b_(std::move(b)) {
  if (a_ == b_) {
    std::string where = a_.x.to_string() + "," + a_.y.to_string();
    throw Error(ErrorCode::kZeroLengthSegment, "segment endpoints coincide at " + where);
  }
}

Scalar cross(const Point& p, const Point& q, const Point& r) {
  return (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x);
}

Orientation orientation(const Point& p, const Point& q, const Point& r) {
  int s = cross(p, q, r).sign();
  if (s > 0) return Orientation::kLeft;
  if (s < 0) return Orientation::kRight;
  return Orientation::kCollinear;
}

bool point_on_segment(const Point& p, const Segment& s) {
  if (orientation(s.a(), s.b(), p) != Orientation::kCollinear) return false;
  const auto& [lo_x, hi_x] = std::minmax(s.a().x, s.b().x);
  const auto& [lo_y, hi_y] = std::minmax(s.a().y, s.b().y);
  return lo_x <= p.x && p.x <= hi_x && lo_y <= p.y && p.y <= hi_y;
}

Scalar parameter_along(const Segment& s, const Point& p) {
  if (s.a().x != s.b().x) return (p.x - s.a().x) / (s.b().x - s.a().x);
  return (p.y - s.a().y) / (s.b().y - s.a().y);
}

Point point_at(const Segment& s, const Scalar& t) {
  return {s.a().x + t * (s.b().x - s.a().x), s.a().y + t * (s.b().y - s.a().y)};
}

SegmentIntersection SegmentIntersection::single(Point p) {
  SegmentIntersection r;
  r.kind_ = Kind::kSinglePoint;
  r.point_ = std::move(p);
  return r;
}

SegmentIntersection SegmentIntersection::overlap(Segment s) {
  SegmentIntersection r;
  r.kind_ = Kind::kOverlap;
  if (s.b() < s.a()) s = s.reversed();
  r.overlap_ = std::move(s);
  return r;
}

SegmentIntersection intersect_segments(const Segment& s1, const Segment& s2) {
  const int o1 = cross(s1.a(), s1.b(), s2.a()).sign();
  const int o2 = cross(s1.a(), s1.b(), s2.b()).sign();

  if (o1 == 0 && o2 == 0) {
    // Collinear: clip the parameter range of s2 against [0, 1] along s1.
    Scalar ta = parameter_along(s1, s2.a());
    Scalar tb = parameter_along(s1, s2.b());
    if (tb < ta) std::swap(ta, tb);
    Scalar lo = std::max(ta, Scalar(0));
    Scalar hi = std::min(tb, Scalar(1));
    if (hi < lo) return SegmentIntersection::empty();
    if (hi == lo) return SegmentIntersection::single(point_at(s1, lo));
    return SegmentIntersection::overlap(Segment(point_at(s1, lo), point_at(s1, hi)));
  }

  const int o3 = cross(s2.a(), s2.b(), s1.a()).sign();
  const int o4 = cross(s2.a(), s2.b(), s1.b()).sign();
  if (o1 * o2 > 0 || o3 * o4 > 0) return SegmentIntersection::empty();

  if (o1 == 0) return SegmentIntersection::single(s2.a());
  if (o2 == 0) return SegmentIntersection::single(s2.b());
  if (o3 == 0) return SegmentIntersection::single(s1.a());
  if (o4 == 0) return SegmentIntersection::single(s1.b());

  // Proper crossing: solve along s1 with the exact line-line parameter.
  const Point d1{s1.b().x - s1.a().x, s1.b().y - s1.a().y};
  const Point d2{s2.b().x - s2.a().x, s2.b().y - s2.a().y};
  const Scalar denom = d1.x * d2.y - d1.y * d2.x;
  const Scalar num = (s2.a().x - s1.a().x) * d2.y - (s2.a().y - s1.a().y) * d2.x;
  return SegmentIntersection::single(point_at(s1, num / denom));
}

}  // namespace fixclip
