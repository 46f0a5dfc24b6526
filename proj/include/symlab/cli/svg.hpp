#pragma once

#include <string>

#include "symlab/sets/any_set.hpp"

namespace symlab {

/// Deterministic SVG rendering: grid cells as squares, point sets as dots,
/// polygons as filled paths, interval unions as bars. The viewport derives
/// from the bounding box with a 5% margin. 3-D grids render one z-slice.
std::string render_svg(const AnySet& set, int slice = std::numeric_limits<int>::min());

void write_svg_file(const AnySet& set, const std::string& path,
                    int slice = std::numeric_limits<int>::min());

}  // namespace symlab
