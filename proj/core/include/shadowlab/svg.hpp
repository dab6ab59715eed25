#pragma once

#include <iosfwd>
#include <vector>

#include "shadowlab/shadow.hpp"

namespace shadowlab {

struct SvgOptions {
  unsigned width = 800;
  unsigned height = 600;
  unsigned margin = 40;
  unsigned decimal_digits = 6;
};

/// Emits the shadow polygon (outline plus vertex dots) and, when nonempty,
/// an overlay polyline through the given points. The viewport is scaled
/// uniformly to fit all geometry; the scaling transform is computed in
/// exact arithmetic and only the final coordinates are rendered in decimal.
void write_polygon_svg(std::ostream& os, const ShadowPolygon& polygon,
                       const std::vector<Point2>& overlay = {},
                       const SvgOptions& options = {});

}  // namespace shadowlab
