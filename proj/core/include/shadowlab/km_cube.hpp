#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "shadowlab/polytope.hpp"

namespace shadowlab {

/// Bit vector u in {0,1}^d selecting, for each inequality pair of the
/// Klee-Minty cube, whether the lower (0) or upper (1) bound is tight.
class VertexCode {
 public:
  explicit VertexCode(std::vector<int> bits);
  static VertexCode zeros(std::size_t d);
  /// Parses a bit string such as "101".
  static VertexCode parse(std::string_view text);
  /// Code whose bits are the binary digits of idx, u_1 most significant,
  /// so that idx order equals lexicographic order of (u_1,...,u_d).
  static VertexCode from_index(std::size_t d, std::uint64_t idx);

  std::size_t size() const { return bits_.size(); }
  /// 1-based bit access: bit(1) = u_1.
  int bit(std::size_t j) const { return bits_[j - 1]; }
  /// Code with bit l flipped (1-based).
  VertexCode flipped(std::size_t l) const;

  std::uint64_t index() const;
  std::string str() const;

  bool operator==(const VertexCode&) const = default;
  auto operator<=>(const VertexCode&) const = default;

 private:
  std::vector<std::uint8_t> bits_;
};

/// Klee-Minty instance parameters; requires 0 < eps < 1/2.
struct KmParams {
  std::size_t d;
  Rational eps;

  KmParams(std::size_t d_, Rational eps_);
};

/// Vertex x(u): x_j = u_j + (1 - 2 u_j) * eps * x_{j-1}, x_0 = 0.
RatVector km_vertex(const VertexCode& u, const KmParams& p);

/// Parity product prod_{k=i}^{j} (1 - 2 u_k), in {-1,+1}. Empty products
/// (i > j) are 1; indices must lie in [1, d+1].
int parity_sign(const VertexCode& u, std::size_t i, std::size_t j);

/// Coordinate-l gap to the l-flipped neighbor,
/// x_l(u + flip l) - x_l(u), also equal to (1-2u_l)(1 - 2 eps x_{l-1}).
/// Both routes are evaluated and compared; a disagreement throws
/// FormulaMismatchError (and indicates a broken build).
Rational neighbor_gap(const VertexCode& u, std::size_t l, const KmParams& p);

/// Edge offset x(u + flip l) - x(u) via the closed form
/// (0 for j < l, parity * eps^{j-l} * gap for j >= l), cross-checked
/// against the direct vertex difference.
RatVector edge_delta(const VertexCode& u, std::size_t l, const KmParams& p);

/// Scale-free edge direction: component j is 0 for j < l and
/// parity_{l+1..j} * eps^{j-l} for j >= l, so that
/// edge_delta = edge_direction * neighbor_gap.
RatVector edge_direction(const VertexCode& u, std::size_t l,
                         const KmParams& p);

/// Projection objective (eps^{3(d-1)}, eps^{3(d-2)}, ..., eps^3, 0).
/// For d = 1 this degenerates to the zero vector; shadow construction
/// rejects it, so the full-shadow claims are supported for d >= 2 only.
RatVector objective_c(const KmParams& p);

struct ObjectiveD {
  RatVector vec;    ///< (0, ..., 0, lambda)
  Rational lambda;  ///< -sum_{j=0}^{d-1} parity_{j+1..d}(u) * eps^{2(d-j)}
};

/// Per-vertex multiple of (0,...,0,1) that makes c + d(u) uniquely
/// maximized at x(u).
ObjectiveD objective_d_u(const VertexCode& u, const KmParams& p);

struct NeighborDominanceReport {
  /// For l = 1..d: e(u)^T  (x(u + flip l) - x(u)), e(u) = c + d(u).
  std::vector<Rational> neighbor_gaps;
  bool all_negative = false;
};

/// Evaluates the strict local-maximality certificate of x(u) under e(u).
/// A non-negative gap is reported, never thrown.
NeighborDominanceReport check_neighbor_dominance(const VertexCode& u,
                                                 const KmParams& p);

/// Brute-force argmin of x_d(u) over all 2^d codes; the unique code optimal
/// for the sweep objective as lambda -> -infinity. Guarded at d <= 24.
VertexCode km_start_code(const KmParams& p);

/// Rows tight at x(u) under the generator's row convention
/// (lower_j = row 2j-2, upper_j = row 2j-1, 0-based).
Basis km_code_basis(const VertexCode& u);

/// Inverse of km_code_basis; nullopt when B is not one-row-per-pair.
std::optional<VertexCode> km_code_from_basis(const Basis& B, std::size_t d);

}  // namespace shadowlab
