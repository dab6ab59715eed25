#include "shadowlab/km_cube.hpp"

#include <algorithm>

namespace shadowlab {

VertexCode::VertexCode(std::vector<int> bits) {
  if (bits.empty()) throw ParameterError("vertex code must be nonempty");
  bits_.reserve(bits.size());
  for (int b : bits) {
    if (b != 0 && b != 1)
      throw ParameterError("vertex code bits must be 0 or 1");
    bits_.push_back(static_cast<std::uint8_t>(b));
  }
}

VertexCode VertexCode::zeros(std::size_t d) {
  return VertexCode(std::vector<int>(d, 0));
}

VertexCode VertexCode::parse(std::string_view text) {
  std::vector<int> bits;
  bits.reserve(text.size());
  for (char c : text) {
    if (c != '0' && c != '1')
      throw ParseError("vertex code must be a bit string, got '" +
                       std::string(text) + "'");
    bits.push_back(c - '0');
  }
  return VertexCode(std::move(bits));
}

VertexCode VertexCode::from_index(std::size_t d, std::uint64_t idx) {
  std::vector<int> bits(d);
  for (std::size_t j = 0; j < d; ++j)
    bits[j] = static_cast<int>((idx >> (d - 1 - j)) & 1u);
  return VertexCode(std::move(bits));
}

VertexCode VertexCode::flipped(std::size_t l) const {
  if (l < 1 || l > size())
    throw ParameterError("flip index " + std::to_string(l) + " out of range");
  VertexCode copy(*this);
  copy.bits_[l - 1] ^= 1u;
  return copy;
}

std::uint64_t VertexCode::index() const {
  std::uint64_t idx = 0;
  for (std::uint8_t b : bits_) idx = (idx << 1) | b;
  return idx;
}

std::string VertexCode::str() const {
  std::string s;
  s.reserve(bits_.size());
  for (std::uint8_t b : bits_) s.push_back(b ? '1' : '0');
  return s;
}

KmParams::KmParams(std::size_t d_, Rational eps_) : d(d_), eps(std::move(eps_)) {
  if (d < 1) throw ParameterError("klee-minty dimension must be >= 1");
  if (!(Rational(0) < eps && eps < Rational(1, 2)))
    throw ParameterError("eps must satisfy 0 < eps < 1/2, got " + eps.str());
}

RatVector km_vertex(const VertexCode& u, const KmParams& p) {
  if (u.size() != p.d)
    throw DimensionError("code length " + std::to_string(u.size()) +
                         " != instance dimension " + std::to_string(p.d));
  RatVector x(p.d);
  Rational prev;  // x_0 = 0
  for (std::size_t j = 1; j <= p.d; ++j) {
    const int uj = u.bit(j);
    x[j - 1] = Rational(uj) + Rational(1 - 2 * uj) * p.eps * prev;
    prev = x[j - 1];
  }
  return x;
}

int parity_sign(const VertexCode& u, std::size_t i, std::size_t j) {
  const std::size_t d = u.size();
  if (i < 1 || j < 1 || i > d + 1 || j > d + 1)
    throw ParameterError("parity indices out of [1, d+1]");
  if (i > j) return 1;  // empty product
  if (j > d) throw ParameterError("parity upper index exceeds dimension");
  int sign = 1;
  for (std::size_t k = i; k <= j; ++k) sign *= 1 - 2 * u.bit(k);
  return sign;
}

Rational neighbor_gap(const VertexCode& u, std::size_t l, const KmParams& p) {
  if (l < 1 || l > p.d) throw ParameterError("q index out of [1, d]");
  const RatVector xu = km_vertex(u, p);
  const RatVector xf = km_vertex(u.flipped(l), p);
  const Rational difference = xf[l - 1] - xu[l - 1];
  const Rational x_prev = l >= 2 ? xu[l - 2] : Rational(0);
  const Rational closed =
      Rational(1 - 2 * u.bit(l)) * (Rational(1) - 2 * p.eps * x_prev);
  if (difference != closed)
    throw FormulaMismatchError(
        "gap closed form diverged from vertex difference at u=" + u.str() +
        " l=" + std::to_string(l));
  return closed;
}

RatVector edge_direction(const VertexCode& u, std::size_t l,
                         const KmParams& p) {
  if (u.size() != p.d) throw DimensionError("code length != dimension");
  if (l < 1 || l > p.d) throw ParameterError("edge index out of [1, d]");
  RatVector direction(p.d);
  Rational eps_power(1);
  for (std::size_t j = l; j <= p.d; ++j) {
    direction[j - 1] = Rational(parity_sign(u, l + 1, j)) * eps_power;
    eps_power *= p.eps;
  }
  return direction;
}

RatVector edge_delta(const VertexCode& u, std::size_t l, const KmParams& p) {
  const RatVector closed = edge_direction(u, l, p) * neighbor_gap(u, l, p);
  const RatVector direct = km_vertex(u.flipped(l), p) - km_vertex(u, p);
  if (closed != direct)
    throw FormulaMismatchError(
        "edge closed form diverged from vertex difference at u=" + u.str() +
        " l=" + std::to_string(l));
  return closed;
}

RatVector objective_c(const KmParams& p) {
  RatVector c(p.d);
  for (std::size_t j = 1; j + 1 <= p.d; ++j)
    c[j - 1] = p.eps.pow(static_cast<unsigned>(3 * (p.d - j)));
  // last entry stays 0
  return c;
}

ObjectiveD objective_d_u(const VertexCode& u, const KmParams& p) {
  if (u.size() != p.d) throw DimensionError("code length != dimension");
  Rational sum;
  for (std::size_t j = 0; j + 1 <= p.d; ++j) {
    sum += Rational(parity_sign(u, j + 1, p.d)) *
           p.eps.pow(static_cast<unsigned>(2 * (p.d - j)));
  }
  ObjectiveD out;
  out.lambda = -sum;
  out.vec = RatVector(p.d);
  out.vec[p.d - 1] = out.lambda;
  return out;
}

NeighborDominanceReport check_neighbor_dominance(const VertexCode& u,
                                                 const KmParams& p) {
  const RatVector e = objective_c(p) + objective_d_u(u, p).vec;
  const RatVector xu = km_vertex(u, p);
  NeighborDominanceReport report;
  report.neighbor_gaps.reserve(p.d);
  report.all_negative = true;
  for (std::size_t l = 1; l <= p.d; ++l) {
    Rational gap = dot(e, km_vertex(u.flipped(l), p) - xu);
    if (gap.sign() >= 0) report.all_negative = false;
    report.neighbor_gaps.push_back(std::move(gap));
  }
  return report;
}

VertexCode km_start_code(const KmParams& p) {
  if (p.d > 24)
    throw InstanceTooLargeError("start-code search enumerates 2^d codes; d=" +
                                std::to_string(p.d) + " exceeds 24");
  std::uint64_t best_idx = 0;
  Rational best_last;
  bool tie = false;
  const std::uint64_t total = std::uint64_t(1) << p.d;
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    const VertexCode u = VertexCode::from_index(p.d, idx);
    Rational last = km_vertex(u, p)[p.d - 1];
    if (idx == 0 || last < best_last) {
      best_last = std::move(last);
      best_idx = idx;
      tie = false;
    } else if (last == best_last) {
      tie = true;
    }
  }
  if (tie)
    throw FormulaMismatchError("start code is not unique; last coordinates tie");
  return VertexCode::from_index(p.d, best_idx);
}

Basis km_code_basis(const VertexCode& u) {
  std::vector<std::size_t> rows;
  rows.reserve(u.size());
  for (std::size_t j = 1; j <= u.size(); ++j)
    rows.push_back(2 * (j - 1) + static_cast<std::size_t>(u.bit(j)));
  return Basis(std::move(rows));
}

std::optional<VertexCode> km_code_from_basis(const Basis& B, std::size_t d) {
  if (B.size() != d) return std::nullopt;
  std::vector<int> bits(d);
  for (std::size_t j = 0; j < d; ++j) {
    const bool lower = B.contains(2 * j);
    const bool upper = B.contains(2 * j + 1);
    if (lower == upper) return std::nullopt;  // need exactly one per pair
    bits[j] = upper ? 1 : 0;
  }
  return VertexCode(std::move(bits));
}

}  // namespace shadowlab
