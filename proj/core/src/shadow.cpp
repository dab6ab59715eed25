#include "shadowlab/shadow.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <sstream>
#include <utility>

namespace shadowlab {

Rational cross(const Point2& o, const Point2& a, const Point2& b) {
  return (a.y1 - o.y1) * (b.y2 - o.y2) - (a.y2 - o.y2) * (b.y1 - o.y1);
}

ProjectionPair::ProjectionPair(RatVector c, RatVector d)
    : c_(std::move(c)), d_(std::move(d)) {
  if (c_.size() != d_.size() || c_.empty())
    throw DimensionError("projection vectors must share a positive length");
  bool independent = false;
  for (std::size_t i = 0; i < c_.size() && !independent; ++i)
    for (std::size_t j = i + 1; j < c_.size() && !independent; ++j)
      if (c_[i] * d_[j] != c_[j] * d_[i]) independent = true;
  if (!independent)
    throw IndependenceError("projection vectors are linearly dependent");
}

Point2 project(const ProjectionPair& pp, const RatVector& x) {
  return Point2{dot(pp.c(), x), dot(pp.d(), x)};
}

ShadowPolygon hull2d(std::vector<Point2> points) {
  if (points.empty()) throw ParameterError("hull of empty point set");
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  const std::size_t m = points.size();

  if (m == 1) return ShadowPolygon{{points[0]}, true};

  bool collinear = true;
  for (std::size_t i = 2; i < m && collinear; ++i)
    if (!cross(points[0], points[1], points[i]).is_zero()) collinear = false;
  if (collinear) return ShadowPolygon{{points.front(), points.back()}, true};

  // Andrew's monotone chain; popping non-left turns keeps the hull strictly
  // convex, so edge-interior points never appear as vertices.
  std::vector<Point2> hull(2 * m);
  std::size_t k = 0;
  for (std::size_t i = 0; i < m; ++i) {
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], points[i]).sign() <= 0)
      --k;
    hull[k++] = points[i];
  }
  const std::size_t lower_end = k + 1;
  for (std::size_t i = m - 1; i-- > 0;) {
    while (k >= lower_end &&
           cross(hull[k - 2], hull[k - 1], points[i]).sign() <= 0)
      --k;
    hull[k++] = points[i];
  }
  hull.resize(k - 1);
  return ShadowPolygon{std::move(hull), false};
}

ShadowResult shadow_of_vertices(const ProjectionPair& pp,
                                const std::vector<RatVector>& vertices) {
  if (vertices.empty()) throw ParameterError("shadow of empty vertex set");
  std::vector<Point2> projected;
  projected.reserve(vertices.size());
  for (const auto& v : vertices) projected.push_back(project(pp, v));

  std::map<Point2, std::vector<std::size_t>> by_point;
  for (std::size_t i = 0; i < projected.size(); ++i)
    by_point[projected[i]].push_back(i);

  ShadowResult out;
  out.polygon = hull2d(projected);
  out.preimages.reserve(out.polygon.size());
  for (const auto& hv : out.polygon.vertices)
    out.preimages.push_back(by_point.at(hv));
  return out;
}

namespace {

Point2 add(const Point2& a, const Point2& b) {
  return Point2{a.y1 + b.y1, a.y2 + b.y2};
}

Point2 subtract(const Point2& a, const Point2& b) {
  return Point2{a.y1 - b.y1, a.y2 - b.y2};
}

/// Outward normal of a counterclockwise polygon edge with direction t.
Point2 outward_normal(const Point2& t) { return Point2{t.y2, -t.y1}; }

std::size_t first_preimage_not(const std::vector<std::size_t>& candidates,
                               std::size_t excluded) {
  for (std::size_t i : candidates)
    if (i != excluded) return i;
  return candidates.front();
}

}  // namespace

ShadowCertificate certify_shadow_vertex(const ProjectionPair& pp,
                                        const std::vector<RatVector>& vertices,
                                        std::size_t target) {
  if (target >= vertices.size())
    throw ParameterError("certification target out of range");

  std::vector<Point2> projected;
  projected.reserve(vertices.size());
  for (const auto& v : vertices) projected.push_back(project(pp, v));
  const Point2 w = projected[target];

  ShadowCertificate cert;
  for (std::size_t i = 0; i < projected.size(); ++i) {
    if (i != target && projected[i] == w) {
      cert.witness = i;  // tie: no lifted objective can separate them
      return cert;
    }
  }
  if (vertices.size() == 1) {
    cert.certified = true;
    cert.a1 = 1;
    cert.a2 = 0;
    cert.direction = pp.c();
    return cert;
  }

  const ShadowPolygon hull = hull2d(projected);
  Point2 a;
  if (hull.degenerate) {
    // Collinear projections: only the two segment endpoints are extreme.
    const auto& ends = hull.vertices;
    if (w == ends.front()) {
      a = subtract(w, ends.back());
    } else if (w == ends.back()) {
      a = subtract(w, ends.front());
    } else {
      std::map<Point2, std::vector<std::size_t>> by_point;
      for (std::size_t i = 0; i < projected.size(); ++i)
        by_point[projected[i]].push_back(i);
      cert.witness = first_preimage_not(by_point.at(std::max(ends.front(), ends.back())), target);
      return cert;
    }
  } else {
    const auto& hv = hull.vertices;
    const auto it = std::find(hv.begin(), hv.end(), w);
    if (it == hv.end()) {
      // Not extreme: report a preimage of the lexicographically largest
      // projection, which beats the target in the (1,0)-then-(0,1) order.
      const Point2 beats = *std::max_element(projected.begin(), projected.end());
      std::map<Point2, std::vector<std::size_t>> by_point;
      for (std::size_t i = 0; i < projected.size(); ++i)
        by_point[projected[i]].push_back(i);
      cert.witness = first_preimage_not(by_point.at(beats), target);
      return cert;
    }
    const std::size_t k = static_cast<std::size_t>(it - hv.begin());
    const Point2& prev = hv[(k + hv.size() - 1) % hv.size()];
    const Point2& next = hv[(k + 1) % hv.size()];
    // Sum of the incident edges' outward normals points strictly into the
    // normal cone of w.
    a = add(outward_normal(subtract(w, prev)),
            outward_normal(subtract(next, w)));
  }

  const Rational best = a.y1 * w.y1 + a.y2 * w.y2;
  for (std::size_t i = 0; i < projected.size(); ++i) {
    if (i == target) continue;
    if (a.y1 * projected[i].y1 + a.y2 * projected[i].y2 >= best) {
      cert.witness = i;
      return cert;
    }
  }
  cert.certified = true;
  cert.a1 = a.y1;
  cert.a2 = a.y2;
  cert.direction = cert.a1 * pp.c() + cert.a2 * pp.d();
  return cert;
}

namespace {

struct Ray {
  BigInt x;
  BigInt y;
};

/// 0 for angles in [0, pi), 1 for [pi, 2*pi).
int half_plane(const Ray& r) {
  if (r.y > 0 || (r.y == 0 && r.x > 0)) return 0;
  return 1;
}

BigInt ray_cross(const Ray& a, const Ray& b) { return a.x * b.y - a.y * b.x; }

bool angular_less(const Ray& a, const Ray& b) {
  const int ha = half_plane(a), hb = half_plane(b);
  if (ha != hb) return ha < hb;
  return ray_cross(a, b) > 0;
}

bool same_direction(const Ray& a, const Ray& b) {
  return half_plane(a) == half_plane(b) && ray_cross(a, b) == 0;
}

/// Scales a nonzero rational direction to a primitive integer vector,
/// preserving orientation.
Ray primitive_ray(const Rational& x, const Rational& y) {
  BigInt nx = x.numerator() * y.denominator();
  BigInt ny = y.numerator() * x.denominator();
  BigInt g = boost::multiprecision::gcd(boost::multiprecision::abs(nx),
                                        boost::multiprecision::abs(ny));
  if (g == 0) throw ParameterError("zero direction has no primitive form");
  return Ray{nx / g, ny / g};
}

}  // namespace

SignPatternSet box_sign_patterns(const RatVector& c, const RatVector& d) {
  if (c.size() != d.size() || c.empty())
    throw DimensionError("sign patterns need equal-length nonempty vectors");

  SignPatternSet out;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i].is_zero() && d[i].is_zero())
      out.dropped.push_back(i);
    else
      out.kept.push_back(i);
  }
  if (out.kept.empty())
    throw ParameterError("all coordinate pairs vanish; no lines to arrange");

  // Distinct lines through the origin, as primitive direction vectors with
  // a canonical sign.
  std::vector<Ray> lines;
  for (std::size_t i : out.kept) {
    Ray dir = primitive_ray(-d[i], c[i]);
    if (dir.x < 0 || (dir.x == 0 && dir.y < 0)) {
      dir.x = -dir.x;
      dir.y = -dir.y;
    }
    bool known = false;
    for (const auto& l : lines)
      if (l.x == dir.x && l.y == dir.y) {
        known = true;
        break;
      }
    if (!known) lines.push_back(dir);
  }

  std::vector<Point2> witnesses;
  if (lines.size() == 1) {
    // One line, two half-plane cells; witnesses perpendicular to it.
    const Ray& l = lines.front();
    witnesses.push_back(Point2{Rational(BigInt(-l.y)), Rational(BigInt(l.x))});
    witnesses.push_back(Point2{Rational(BigInt(l.y)), Rational(BigInt(-l.x))});
  } else {
    std::vector<Ray> rays;
    rays.reserve(2 * lines.size());
    for (const auto& l : lines) {
      rays.push_back(l);
      rays.push_back(Ray{-l.x, -l.y});
    }
    std::sort(rays.begin(), rays.end(), angular_less);
    // With two or more distinct lines, adjacent rays are never opposite, so
    // the sum of two consecutive rays lies strictly inside their cell.
    for (std::size_t k = 0; k < rays.size(); ++k) {
      const Ray& r1 = rays[k];
      const Ray& r2 = rays[(k + 1) % rays.size()];
      if (same_direction(r1, r2))
        throw FormulaMismatchError("duplicate ray in arrangement walk");
      witnesses.push_back(
          Point2{Rational(r1.x + r2.x), Rational(r1.y + r2.y)});
    }
  }

  for (const auto& w : witnesses) {
    SignPattern pattern;
    pattern.witness = w;
    pattern.signs.reserve(out.kept.size());
    for (std::size_t i : out.kept) {
      const int s = (w.y1 * c[i] + w.y2 * d[i]).sign();
      if (s == 0)
        throw FormulaMismatchError("cell witness landed on a line");
      pattern.signs.push_back(s);
    }
    out.patterns.push_back(std::move(pattern));
  }
  return out;
}

SignPatternSet box_sign_patterns(const ProjectionPair& pp) {
  return box_sign_patterns(pp.c(), pp.d());
}

BoxShadowReport box_shadow_report(const Box& box, const ProjectionPair& pp,
                                  std::size_t guard_dim) {
  const std::size_t d = box.lowers.size();
  if (d != pp.dim()) throw DimensionError("box and projection dimensions differ");
  make_box(box);  // validates bounds
  if (d > guard_dim)
    throw InstanceTooLargeError("box corner enumeration guarded at dimension " +
                                std::to_string(guard_dim));

  // corner(idx): bit i of idx selects the upper bound of coordinate i
  const std::uint64_t corners = std::uint64_t(1) << d;
  std::vector<RatVector> points;
  points.reserve(corners);
  for (std::uint64_t idx = 0; idx < corners; ++idx) {
    RatVector v(d);
    for (std::size_t i = 0; i < d; ++i)
      v[i] = ((idx >> i) & 1u) ? box.uppers[i] : box.lowers[i];
    points.push_back(std::move(v));
  }

  const ShadowResult shadow = shadow_of_vertices(pp, points);
  const SignPatternSet patterns = box_sign_patterns(pp);

  BoxShadowReport report;
  report.dim = d;
  report.hull_size = shadow.polygon.size();
  report.bound = 2 * d;
  report.pattern_count = patterns.patterns.size();
  report.hull_within_bound = report.hull_size <= report.bound;
  report.patterns_within_bound =
      report.pattern_count <= 2 * patterns.kept.size();
  report.polygon = shadow.polygon;

  report.preimages_match_patterns = true;
  for (const auto& preimage : shadow.preimages) {
    bool matched = false;
    for (std::size_t corner_idx : preimage) {
      for (const auto& pattern : patterns.patterns) {
        bool fits = true;
        for (std::size_t k = 0; k < patterns.kept.size() && fits; ++k) {
          const std::size_t coord = patterns.kept[k];
          const bool upper = (std::uint64_t(corner_idx) >> coord) & 1u;
          fits = (pattern.signs[k] > 0) == upper;
        }
        if (fits) {
          matched = true;
          break;
        }
      }
      if (matched) break;
    }
    if (!matched) {
      report.preimages_match_patterns = false;
      break;
    }
  }
  return report;
}

void write_polygon_csv(std::ostream& os, const ShadowResult& shadow,
                       const std::vector<std::string>& preimage_labels,
                       unsigned decimal_digits) {
  os << "k,y1_exact,y2_exact,y1_dec,y2_dec,preimage_codes\n";
  for (std::size_t k = 0; k < shadow.polygon.size(); ++k) {
    const Point2& v = shadow.polygon.vertices[k];
    os << k << ',' << v.y1 << ',' << v.y2 << ',' << v.y1.decimal(decimal_digits)
       << ',' << v.y2.decimal(decimal_digits) << ',';
    const auto& pre = shadow.preimages[k];
    for (std::size_t j = 0; j < pre.size(); ++j) {
      if (j) os << ';';
      os << preimage_labels.at(pre[j]);
    }
    os << '\n';
  }
}

}  // namespace shadowlab
