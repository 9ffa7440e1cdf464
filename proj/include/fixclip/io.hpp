#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "fixclip/marking.hpp"
#include "fixclip/polygon.hpp"
#include "fixclip/tracing.hpp"

namespace fixclip {

// Polygon file:
//   { "contours": [ [ [x, y], ... ], ... ], "hand": "left"|"right", "rule": "nonzero"|"evenodd" }
// Coordinates are integers, decimal strings, or "p/q" strings and are read
// exactly. JSON floating point numbers are accepted through their shortest
// round-trip decimal text.
struct PolygonFile {
  std::vector<std::vector<Point>> contours;
  std::optional<Hand> hand;
  std::optional<MembershipRule> rule;

  Polygon to_polygon(Role role) const;
};

/// Throws Error(kParse) naming the contour and vertex of the fault.
PolygonFile parse_polygon_file(const std::string& text);
PolygonFile read_polygon_file(const std::filesystem::path& path);
std::string write_polygon_file(const PolygonFile& file);

std::optional<MembershipRule> parse_rule(std::string_view name);
std::string_view to_string(MembershipRule rule);
std::optional<BooleanOp> parse_op(std::string_view name);

// Result file:
//   { "op": "...", "empty": bool, "contours": [ { "edges": [ {"from": [x, y], "to": [x, y],
//     "origin": "clipper"|"subject"} ] } ] }
// Coordinates are written as exact strings. Equal regions give equal text.
std::string write_result_file(const ResultRegion& region, BooleanOp op);
ResultRegion parse_result_file(const std::string& text);

}  // namespace fixclip
