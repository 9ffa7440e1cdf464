#pragma once

#include <string>

#include "fixclip/boolean_op.hpp"

namespace fixclip {

struct SvgStyle {
  double width = 640;
  double margin = 24;
  // Screen distance between a clipper edge and the subject edge it overlaps.
  double overlap_offset = 3;
};

/// Plot of the inputs (clipper red, subject black), the result region filled
/// cyan, and every en/ex flag as a labelled marker. Clipper edges lying on
/// subject edges are drawn as close parallels; geometry is not altered.
std::string render_svg(const Polygon& clipper, const Polygon& subject, const ClipResult& result,
                       const SvgStyle& style = {});

}  // namespace fixclip
