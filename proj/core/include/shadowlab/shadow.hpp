#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "shadowlab/polytope.hpp"

namespace shadowlab {

/// Exact point in the projection plane.
struct Point2 {
  Rational y1;
  Rational y2;

  bool operator==(const Point2&) const = default;
  auto operator<=>(const Point2&) const = default;  // lexicographic
};

/// Orientation predicate: sign of the cross product (a-o) x (b-o).
/// Positive means o,a,b make a strict left turn.
Rational cross(const Point2& o, const Point2& a, const Point2& b);

/// Pair of linearly independent vectors spanning the projection plane.
/// Dependence (including a zero vector) is rejected at construction.
class ProjectionPair {
 public:
  ProjectionPair(RatVector c, RatVector d);

  const RatVector& c() const { return c_; }
  const RatVector& d() const { return d_; }
  std::size_t dim() const { return c_.size(); }

 private:
  RatVector c_;
  RatVector d_;
};

/// (c^T x, d^T x), exactly.
Point2 project(const ProjectionPair& pp, const RatVector& x);

/// Strictly convex polygon: counterclockwise vertices starting at the
/// lexicographically smallest point; no three collinear vertices kept.
/// `degenerate` marks inputs whose hull has fewer than 3 extreme points.
struct ShadowPolygon {
  std::vector<Point2> vertices;
  bool degenerate = false;

  std::size_t size() const { return vertices.size(); }
  bool operator==(const ShadowPolygon&) const = default;
};

/// Exact 2D convex hull (monotone chain). Collinear input collapses to a
/// 1- or 2-vertex polygon with the degenerate flag set.
ShadowPolygon hull2d(std::vector<Point2> points);

struct ShadowResult {
  ShadowPolygon polygon;
  /// For each hull vertex, every input index projecting onto it.
  std::vector<std::vector<std::size_t>> preimages;
};

/// Hull of the projected vertices with the full preimage map.
ShadowResult shadow_of_vertices(const ProjectionPair& pp,
                                const std::vector<RatVector>& vertices);

/// Outcome of the extreme-direction search for one vertex.
struct ShadowCertificate {
  bool certified = false;
  /// Plane direction (a1, a2); e = a1*c + a2*d is the certified objective.
  Rational a1;
  Rational a2;
  RatVector direction;
  /// On refusal: a vertex that ties with or beats the target.
  std::optional<std::size_t> witness;
};

/// Searches for a plane direction whose lift uniquely maximizes at the
/// target vertex. Candidate directions come from the hull's edge normals,
/// so the search is exact and deterministic; refusal is a value, not an
/// error.
ShadowCertificate certify_shadow_vertex(const ProjectionPair& pp,
                                        const std::vector<RatVector>& vertices,
                                        std::size_t target);

/// One full-dimensional cell of the central line arrangement, identified
/// by the signs it induces on the kept coordinate pairs.
struct SignPattern {
  std::vector<int> signs;  ///< -1/+1 per kept coordinate
  Point2 witness;          ///< interior point of the cell
};

struct SignPatternSet {
  std::vector<SignPattern> patterns;
  std::vector<std::size_t> kept;     ///< coordinates with (c_i, d_i) != (0,0)
  std::vector<std::size_t> dropped;  ///< recorded reduction
};

/// Enumerates the full-dimensional cells of the arrangement of the lines
/// {y : y1*c_i + y2*d_i = 0} by angular ray walking. At most 2*|kept|
/// patterns, each with an exact witness. Coordinates with c_i = d_i = 0
/// are dropped first and recorded.
SignPatternSet box_sign_patterns(const RatVector& c, const RatVector& d);
SignPatternSet box_sign_patterns(const ProjectionPair& pp);

struct BoxShadowReport {
  std::size_t dim = 0;
  std::size_t hull_size = 0;
  std::size_t bound = 0;          ///< 2*dim
  std::size_t pattern_count = 0;  ///< <= 2*|kept|
  bool hull_within_bound = false;
  bool patterns_within_bound = false;
  /// Every hull vertex has a preimage corner matching some sign pattern
  /// (upper bound where the sign is +, lower where it is -).
  bool preimages_match_patterns = false;
  ShadowPolygon polygon;

  bool pass() const {
    return hull_within_bound && patterns_within_bound &&
           preimages_match_patterns;
  }
};

/// Projects all 2^d box corners (guarded), enumerates sign patterns, and
/// cross-checks hull vertices against pattern-induced corners.
BoxShadowReport box_shadow_report(const Box& box, const ProjectionPair& pp,
                                  std::size_t guard_dim = 20);

/// Polygon CSV: "k,y1_exact,y2_exact,y1_dec,y2_dec,preimage_codes" with one
/// row per hull vertex. preimage_labels[i] names input vertex i (vertex
/// codes for Klee-Minty instances, plain indices otherwise); multiple
/// preimages are joined with ';'.
void write_polygon_csv(std::ostream& os, const ShadowResult& shadow,
                       const std::vector<std::string>& preimage_labels,
                       unsigned decimal_digits = 12);

}  // namespace shadowlab
