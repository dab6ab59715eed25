#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "shadowlab/km_cube.hpp"
#include "shadowlab/polytope.hpp"

namespace shadowlab {

/// Endpoint of a parameter interval. The infinite sentinels are a dedicated
/// enumeration, never encoded as large rationals.
struct LambdaBound {
  enum class Kind { neg_inf, finite, pos_inf };
  Kind kind = Kind::finite;
  Rational value;  ///< meaningful only when finite

  static LambdaBound neg_inf() { return {Kind::neg_inf, Rational()}; }
  static LambdaBound finite(Rational v) { return {Kind::finite, std::move(v)}; }
  static LambdaBound pos_inf() { return {Kind::pos_inf, Rational()}; }

  bool is_finite() const { return kind == Kind::finite; }
  /// this <= r, treating the sentinels as -/+ infinity.
  bool at_most(const Rational& r) const;
  /// this >= r.
  bool at_least(const Rational& r) const;

  std::string str() const;  ///< "-inf" | exact rational | "inf"
};

/// One pivot of the sweep: row `leaving_row` is relaxed and `entering_row`
/// becomes tight while crossing breakpoint `lambda` along `edge_direction`.
struct PivotEvent {
  std::size_t leaving_row = 0;
  std::size_t entering_row = 0;
  Rational lambda;
  RatVector edge_direction;
};

struct PathStep {
  Basis basis;
  RatVector vertex;
  std::optional<VertexCode> code;  ///< present for Klee-Minty instances
  LambdaBound lo;
  LambdaBound hi;

  PathStep(Basis b, RatVector v) : basis(std::move(b)), vertex(std::move(v)) {}
};

/// Full sweep output: step k is optimal for the objective c + lambda*d on
/// [lo_k, hi_k]; the M-1 finite breakpoints strictly increase and
/// consecutive bases differ in exactly one row.
struct ParametricPath {
  std::vector<PathStep> steps;
  std::vector<Rational> breakpoints;
  std::vector<PivotEvent> pivots;

  std::size_t vertex_count() const { return steps.size(); }
};

/// For each basis row i, the direction z_i that keeps the other basis rows
/// tight and relaxes row i into the feasible side (A_i z_i = -1).
/// Requires a feasible, nondegenerate basis.
std::vector<std::pair<std::size_t, RatVector>> edge_directions(
    const HPolytope& P, const Basis& B);

/// Parametric sweep over the objective c + lambda*d, from a start basis
/// optimal as lambda -> -infinity, up to lambda -> +infinity.
///
/// Errors: BadStartError when the start vertex is not initially optimal,
/// GenericityError on any exact tie (two minimizing edges, a constant edge,
/// or coincident breakpoints), DegeneracyError at non-simple vertices,
/// UnboundedError when an improving edge never hits another constraint.
ParametricPath gass_saaty_path(const HPolytope& P, const RatVector& c,
                               const RatVector& d, const Basis& start);

/// Maximizes c^T x from the given start vertex by sweeping against the
/// auxiliary objective -sum of the start basis rows (uniquely minimized at
/// the start vertex) and reading off the interval containing lambda = 0.
std::pair<Basis, RatVector> shadow_vertex_solve(const HPolytope& P,
                                                const RatVector& c,
                                                const Basis& start);

struct OracleReport {
  bool pass = false;
  std::size_t samples_checked = 0;
  std::optional<Rational> failing_lambda;
  std::string message;
};

/// Replays the path against brute-force vertex enumeration: at every finite
/// breakpoint midpoint, one point below the first breakpoint, one above
/// the last, and extra interior points until at least `samples` parameter
/// values are covered, the enumerated argmax must equal the path's vertex
/// for that interval (and be unique).
OracleReport verify_path_against_oracle(const HPolytope& P,
                                        const ParametricPath& path,
                                        const RatVector& c, const RatVector& d,
                                        std::size_t samples = 1);

/// Path CSV: "k,lambda_exact,lambda_decimal,code,x1..xd"; lambda is the
/// lower end of step k's interval, so row 0 reads "-inf".
void write_path_csv(std::ostream& os, const ParametricPath& path,
                    unsigned decimal_digits = 12);

}  // namespace shadowlab
