#include "shadowlab/svg.hpp"

#include <algorithm>
#include <ostream>

namespace shadowlab {

namespace {

struct Frame {
  Rational min_x, min_y, scale_x, scale_y, margin, height;

  Rational tx(const Point2& p) const {
    return margin + (p.y1 - min_x) * scale_x;
  }
  // SVG's y axis points down
  Rational ty(const Point2& p) const {
    return height - (margin + (p.y2 - min_y) * scale_y);
  }
};

// Axes are scaled independently: shadows of the deformed cube are thinner
// than 2^-3(d-1) along one axis, so a uniform fit would collapse them to a
// line on screen.
Frame fit(const std::vector<Point2>& points, const SvgOptions& o) {
  Rational min_x = points.front().y1, max_x = min_x;
  Rational min_y = points.front().y2, max_y = min_y;
  for (const auto& p : points) {
    min_x = std::min(min_x, p.y1);
    max_x = std::max(max_x, p.y1);
    min_y = std::min(min_y, p.y2);
    max_y = std::max(max_y, p.y2);
  }
  Rational span_x = max_x - min_x;
  Rational span_y = max_y - min_y;
  if (span_x.is_zero()) span_x = 1;
  if (span_y.is_zero()) span_y = 1;

  Frame f;
  f.min_x = min_x;
  f.min_y = min_y;
  f.scale_x = Rational(static_cast<long long>(o.width - 2 * o.margin)) / span_x;
  f.scale_y =
      Rational(static_cast<long long>(o.height - 2 * o.margin)) / span_y;
  f.margin = Rational(static_cast<long long>(o.margin));
  f.height = Rational(static_cast<long long>(o.height));
  return f;
}

}  // namespace

void write_polygon_svg(std::ostream& os, const ShadowPolygon& polygon,
                       const std::vector<Point2>& overlay,
                       const SvgOptions& options) {
  if (polygon.vertices.empty())
    throw ParameterError("cannot plot an empty polygon");

  std::vector<Point2> all = polygon.vertices;
  all.insert(all.end(), overlay.begin(), overlay.end());
  const Frame frame = fit(all, options);
  const unsigned digits = options.decimal_digits;

  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << options.width
     << "\" height=\"" << options.height << "\" viewBox=\"0 0 "
     << options.width << ' ' << options.height << "\">\n";
  os << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  if (polygon.size() >= 2) {
    os << (polygon.degenerate ? "  <polyline" : "  <polygon") << " points=\"";
    for (std::size_t i = 0; i < polygon.size(); ++i) {
      if (i) os << ' ';
      const Point2& p = polygon.vertices[i];
      os << frame.tx(p).decimal(digits) << ',' << frame.ty(p).decimal(digits);
    }
    os << "\" fill=\"#cfe2f3\" fill-opacity=\"0.6\" stroke=\"#1c4587\" "
          "stroke-width=\"2\"/>\n";
  }
  for (const auto& p : polygon.vertices) {
    os << "  <circle cx=\"" << frame.tx(p).decimal(digits) << "\" cy=\""
       << frame.ty(p).decimal(digits) << "\" r=\"3\" fill=\"#1c4587\"/>\n";
  }

  if (overlay.size() >= 2) {
    os << "  <polyline points=\"";
    for (std::size_t i = 0; i < overlay.size(); ++i) {
      if (i) os << ' ';
      os << frame.tx(overlay[i]).decimal(digits) << ','
         << frame.ty(overlay[i]).decimal(digits);
    }
    os << "\" fill=\"none\" stroke=\"#cc0000\" stroke-width=\"1\" "
          "stroke-dasharray=\"4 2\"/>\n";
  }
  os << "</svg>\n";
}

}  // namespace shadowlab
