#include "fixclip/io.hpp"

#include <json.hpp>

#include <charconv>
#include <fstream>
#include <sstream>

#include "fixclip/error.hpp"

namespace fixclip {

using nlohmann::json;

namespace {

[[noreturn]] void parse_error(const std::string& where, const std::string& what) {
  throw Error(ErrorCode::kParse, where.empty() ? what : where + ": " + what);
}

Scalar scalar_from_json(const json& v, const std::string& where) {
  try {
    if (v.is_number_integer()) return Scalar::parse(v.dump());
    if (v.is_number_float()) {
      const double d = v.get<double>();
      char buf[64];
      const auto res = std::to_chars(buf, buf + sizeof buf, d);
      return Scalar::parse(std::string_view(buf, static_cast<std::size_t>(res.ptr - buf)));
    }
    if (v.is_string()) return Scalar::parse(v.get<std::string>());
  } catch (const Error& e) {
    parse_error(where, e.what());
  }
  parse_error(where, "coordinate must be an integer, a number, or a string");
}

Point point_from_json(const json& v, const std::string& where) {
  if (!v.is_array() || v.size() != 2) parse_error(where, "point must be a two-element array [x, y]");
  return {scalar_from_json(v[0], where + " x"), scalar_from_json(v[1], where + " y")};
}

json point_to_json(const Point& p) { return json::array({p.x.to_string(), p.y.to_string()}); }

}  // namespace

std::optional<MembershipRule> parse_rule(std::string_view name) {
  if (name == "nonzero") return MembershipRule::kNonzeroWinding;
  if (name == "evenodd") return MembershipRule::kEvenOdd;
  return std::nullopt;
}

std::string_view to_string(MembershipRule rule) {
  return rule == MembershipRule::kEvenOdd ? "evenodd" : "nonzero";
}

std::optional<BooleanOp> parse_op(std::string_view name) {
  if (name == "intersection") return BooleanOp::kIntersection;
  if (name == "union") return BooleanOp::kUnion;
  if (name == "difference") return BooleanOp::kDifference;
  return std::nullopt;
}

Polygon PolygonFile::to_polygon(Role role) const {
  std::vector<Contour> built;
  for (std::size_t i = 0; i < contours.size(); ++i) {
    try {
      built.push_back(build_contour(contours[i], hand));
    } catch (const Error& e) {
      throw Error(e.code(), "contour " + std::to_string(i) + ": " + e.what());
    }
  }
  return Polygon(std::move(built), role);
}

PolygonFile parse_polygon_file(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    parse_error("", std::string("malformed JSON (") + e.what() + ")");
  }
  if (!doc.is_object()) parse_error("", "top level must be an object");
  PolygonFile f;
  if (!doc.contains("contours") || !doc["contours"].is_array()) parse_error("", "missing \"contours\" array");
  const json& contours = doc["contours"];
  for (std::size_t ci = 0; ci < contours.size(); ++ci) {
    const std::string where = "contour " + std::to_string(ci);
    if (!contours[ci].is_array()) parse_error(where, "contour must be an array of points");
    std::vector<Point> pts;
    for (std::size_t vi = 0; vi < contours[ci].size(); ++vi) {
      pts.push_back(point_from_json(contours[ci][vi], where + ", vertex " + std::to_string(vi)));
    }
    f.contours.push_back(std::move(pts));
  }
  if (doc.contains("hand")) {
    const json& h = doc["hand"];
    if (h == "left") f.hand = Hand::kLeft;
    else if (h == "right") f.hand = Hand::kRight;
    else parse_error("hand", "expected \"left\" or \"right\"");
  }
  if (doc.contains("rule")) {
    const json& r = doc["rule"];
    if (r.is_string()) f.rule = parse_rule(r.get<std::string>());
    if (!f.rule) parse_error("rule", "expected \"nonzero\" or \"evenodd\"");
  }
  return f;
}

PolygonFile read_polygon_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kParse, "cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  try {
    return parse_polygon_file(ss.str());
  } catch (const Error& e) {
    throw Error(e.code(), path.string() + ": " + e.what());
  }
}

std::string write_polygon_file(const PolygonFile& file) {
  json doc = json::object();
  json contours = json::array();
  for (const auto& c : file.contours) {
    json pts = json::array();
    for (const Point& p : c) pts.push_back(point_to_json(p));
    contours.push_back(std::move(pts));
  }
  doc["contours"] = std::move(contours);
  if (file.hand) doc["hand"] = *file.hand == Hand::kLeft ? "left" : "right";
  if (file.rule) doc["rule"] = std::string(to_string(*file.rule));
  return doc.dump(1) + "\n";
}

std::string write_result_file(const ResultRegion& region, BooleanOp op) {
  json doc = json::object();
  doc["op"] = std::string(to_string(op));
  doc["empty"] = region.empty();
  json contours = json::array();
  for (const ResultContour& c : region.contours) {
    json edges = json::array();
    for (const ResultEdge& e : c.edges) {
      edges.push_back({{"from", point_to_json(e.from)}, {"to", point_to_json(e.to)},
                       {"origin", std::string(to_string(e.origin))}});
    }
    contours.push_back({{"edges", std::move(edges)}});
  }
  doc["contours"] = std::move(contours);
  return doc.dump(2) + "\n";
}

ResultRegion parse_result_file(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    parse_error("", std::string("malformed JSON (") + e.what() + ")");
  }
  ResultRegion r;
  if (!doc.contains("contours") || !doc["contours"].is_array()) parse_error("", "missing \"contours\" array");
  for (std::size_t ci = 0; ci < doc["contours"].size(); ++ci) {
    const json& c = doc["contours"][ci];
    const std::string where = "contour " + std::to_string(ci);
    if (!c.contains("edges") || !c["edges"].is_array()) parse_error(where, "missing \"edges\"");
    ResultContour rc;
    for (std::size_t ei = 0; ei < c["edges"].size(); ++ei) {
      const json& e = c["edges"][ei];
      const std::string at = where + ", edge " + std::to_string(ei);
      if (!e.is_object() || !e.contains("from") || !e.contains("to")) parse_error(at, "edge needs from and to");
      ResultEdge edge{point_from_json(e["from"], at), point_from_json(e["to"], at), Origin::kSubject};
      const std::string origin = e.value("origin", "subject");
      if (origin == "clipper") edge.origin = Origin::kClipper;
      else if (origin != "subject") parse_error(at, "origin must be clipper or subject");
      rc.edges.push_back(std::move(edge));
    }
    r.contours.push_back(std::move(rc));
  }
  return r;
}

}  // namespace fixclip
