#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "shadowlab/linalg.hpp"

namespace shadowlab {

/// Provenance of a generated polytope, round-tripped through .hpoly files.
struct GeneratorInfo {
  std::string tag;  // "box" | "klee-minty" | "custom"
  std::vector<std::pair<std::string, std::string>> params;

  std::optional<std::string> param(const std::string& key) const;
};

/// Polytope in inequality form A x <= b. Immutable after construction.
///
/// Generator-produced instances are bounded with nonempty interior by
/// construction; custom input is trusted (boundedness is detected lazily by
/// the parametric sweep).
class HPolytope {
 public:
  HPolytope(RatMatrix A, RatVector b,
            std::optional<GeneratorInfo> generator = std::nullopt);

  std::size_t num_rows() const { return A_.row_count(); }
  std::size_t dim() const { return A_.col_count(); }
  const RatMatrix& lhs() const { return A_; }
  const RatVector& rhs() const { return b_; }
  const RatVector& row(std::size_t i) const { return A_.row(i); }
  const Rational& rhs(std::size_t i) const { return b_[i]; }
  const std::optional<GeneratorInfo>& generator() const { return generator_; }

 private:
  RatMatrix A_;
  RatVector b_;
  std::optional<GeneratorInfo> generator_;
};

/// Axis-parallel box lowers[i] <= x_i <= uppers[i].
struct Box {
  RatVector lowers;
  RatVector uppers;
};

/// Sorted set of exactly dim row indices whose tight intersection is a vertex.
class Basis {
 public:
  explicit Basis(std::vector<std::size_t> rows);

  std::size_t size() const { return rows_.size(); }
  const std::vector<std::size_t>& indices() const { return rows_; }
  std::size_t operator[](std::size_t k) const { return rows_[k]; }
  bool contains(std::size_t row) const;

  /// Basis after one pivot: `leaving` is relaxed, `entering` becomes tight.
  Basis pivoted(std::size_t leaving, std::size_t entering) const;

  bool operator==(const Basis&) const = default;
  auto operator<=>(const Basis&) const = default;

  /// "i,j,k" with ascending row indices.
  std::string str() const;

 private:
  std::vector<std::size_t> rows_;
};

/// 1-sparse polytope with 2d rows: pairs (-x_i <= -l_i, x_i <= u_i),
/// lower bound first, pairs in coordinate order.
/// Throws DegenerateBoxError unless l_i < u_i for every i.
HPolytope make_box(const Box& box);

/// 2-sparse deformed cube with 2d rows in d pairs. Pair 1 bounds
/// 0 <= x_1 <= 1; pair j >= 2 bounds eps*x_{j-1} <= x_j <= 1 - eps*x_{j-1}.
/// Rows pair-by-pair, lower bound then upper bound, so that
/// lower_j = row 2j-2 and upper_j = row 2j-1 (0-based).
/// Throws ParameterError unless 0 < eps < 1/2.
HPolytope make_klee_minty(std::size_t d, const Rational& eps);

/// Maximum number of nonzero coefficients over all rows of A.
std::size_t sparsity(const HPolytope& P);

/// Componentwise exact check of A x <= b.
bool is_feasible(const HPolytope& P, const RatVector& x);

/// The point with A_B x = b_B, verified feasible before return.
/// Throws NonBasisError for singular A_B, InfeasibleBasisError when the
/// solution violates some other row.
RatVector vertex_of(const HPolytope& P, const Basis& B);

struct VertexEnumeration {
  /// All feasible bases with their vertices, sorted by basis index set.
  std::vector<std::pair<Basis, RatVector>> vertices;
  /// True when two bases produced the same point (non-simple vertex).
  bool degenerate = false;
  std::uint64_t bases_tried = 0;
};

inline constexpr std::uint64_t kDefaultEnumerationGuard = 10'000'000;

/// Brute-force vertex enumeration over all d-subsets of rows. Intended for
/// small instances; throws InstanceTooLargeError when C(n,d) exceeds the
/// guard. Duplicate points are reported, not merged.
VertexEnumeration enumerate_vertices(
    const HPolytope& P, std::uint64_t guard = kDefaultEnumerationGuard);

/// C(n,k) saturating at 2^64-1.
std::uint64_t binomial_guarded(std::uint64_t n, std::uint64_t k);

// --- .hpoly text format ---------------------------------------------------
//
// line 1: "n d"
// line 2: optional "# generator: <tag> key=value ..."
// then n lines "a_1 a_2 ... a_d | b_i", rationals in canonical p/q form.
// Writing then reading then writing again is byte-identical.

void write_hpoly(std::ostream& os, const HPolytope& P);
HPolytope read_hpoly(std::istream& is);

void write_hpoly_file(const std::string& path, const HPolytope& P);
HPolytope read_hpoly_file(const std::string& path);

}  // namespace shadowlab
