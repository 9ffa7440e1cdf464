#include "fixclip/svg.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace fixclip {

namespace {

struct Frame {
  double x0 = 0, y0 = 0, x1 = 1, y1 = 1;
  double scale = 1;
  double margin = 0;

  double sx(const Scalar& x) const { return margin + (x.to_double() - x0) * scale; }
  // SVG y grows downwards.
  double sy(const Scalar& y) const { return margin + (y1 - y.to_double()) * scale; }
};

Frame fit(const Polygon& a, const Polygon& b, const SvgStyle& style) {
  Frame f;
  bool first = true;
  for (const Polygon* p : {&a, &b}) {
    for (const Contour& c : p->contours()) {
      for (const Point& q : c.points()) {
        const double x = q.x.to_double();
        const double y = q.y.to_double();
        if (first) {
          f.x0 = f.x1 = x;
          f.y0 = f.y1 = y;
          first = false;
        }
        f.x0 = std::min(f.x0, x);
        f.x1 = std::max(f.x1, x);
        f.y0 = std::min(f.y0, y);
        f.y1 = std::max(f.y1, y);
      }
    }
  }
  const double span = std::max({f.x1 - f.x0, f.y1 - f.y0, 1e-9});
  f.margin = style.margin;
  f.scale = (style.width - 2 * style.margin) / span;
  return f;
}

bool overlaps_any(const Segment& s, const std::vector<Segment>& others) {
  return std::any_of(others.begin(), others.end(), [&](const Segment& o) {
    return intersect_segments(s, o).kind() == SegmentIntersection::Kind::kOverlap;
  });
}

void line(std::ostream& os, const Frame& f, const Segment& s, const char* cls, double offset) {
  double x1 = f.sx(s.a().x), y1 = f.sy(s.a().y);
  double x2 = f.sx(s.b().x), y2 = f.sy(s.b().y);
  if (offset != 0) {
    const double dx = x2 - x1, dy = y2 - y1;
    const double len = std::hypot(dx, dy);
    // Shift towards the screen-left of the edge direction.
    const double nx = dy / len * offset, ny = -dx / len * offset;
    x1 += nx; x2 += nx; y1 += ny; y2 += ny;
  }
  os << "  <line class=\"" << cls << "\" x1=\"" << x1 << "\" y1=\"" << y1 << "\" x2=\"" << x2 << "\" y2=\"" << y2
     << "\"/>\n";
}

}  // namespace

std::string render_svg(const Polygon& clipper, const Polygon& subject, const ClipResult& result,
                       const SvgStyle& style) {
  const Frame f = fit(clipper, subject, style);
  const double height = (f.y1 - f.y0) * f.scale + 2 * style.margin;
  std::ostringstream os;
  os.precision(6);
  os << std::fixed;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << style.width << "\" height=\"" << height
     << "\" viewBox=\"0 0 " << style.width << " " << height << "\">\n"
     << "  <style>\n"
     << "    .result { fill: #7fe5f0; fill-opacity: 0.6; fill-rule: nonzero; stroke: none; }\n"
     << "    .subject { stroke: black; stroke-width: 1.5; }\n"
     << "    .clipper { stroke: red; stroke-width: 1.5; }\n"
     << "    .en { fill: green; } .ex { fill: purple; }\n"
     << "    text { font: 11px sans-serif; }\n"
     << "  </style>\n";

  if (!result.region.empty()) {
    os << "  <path class=\"result\" d=\"";
    for (const ResultContour& c : result.region.contours) {
      bool first = true;
      for (const ResultEdge& e : c.edges) {
        os << (first ? "M" : " L") << f.sx(e.from.x) << "," << f.sy(e.from.y);
        first = false;
      }
      os << " Z ";
    }
    os << "\"/>\n";
  }

  const std::vector<Segment> black = subject.edges();
  for (const Segment& s : black) line(os, f, s, "subject", 0);
  for (const Segment& s : clipper.edges()) line(os, f, s, "clipper", overlaps_any(s, black) ? style.overlap_offset : 0);

  for (const FlaggedVertex& v : result.flags()) {
    const bool red = v.role == Role::kClipper;
    const char* name = v.flag == VertexFlag::kEn ? "en" : "ex";
    const double x = f.sx(v.position.x);
    const double y = f.sy(v.position.y);
    const double dy = red ? -8 : 14;
    os << "  <circle class=\"" << name << "\" cx=\"" << x << "\" cy=\"" << y << "\" r=\"3\"/>\n"
       << "  <text x=\"" << x + 4 << "\" y=\"" << y + dy << "\" fill=\"" << (red ? "red" : "black") << "\">" << name
       << "</text>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace fixclip
