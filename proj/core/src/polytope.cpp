#include "shadowlab/polytope.hpp"

#include <algorithm>
#include <fstream>
#include <limits>
#include <map>
#include <sstream>

namespace shadowlab {

std::optional<std::string> GeneratorInfo::param(const std::string& key) const {
  for (const auto& [k, v] : params)
    if (k == key) return v;
  return std::nullopt;
}

HPolytope::HPolytope(RatMatrix A, RatVector b,
                     std::optional<GeneratorInfo> generator)
    : A_(std::move(A)), b_(std::move(b)), generator_(std::move(generator)) {
  const std::size_t n = A_.row_count();
  const std::size_t d = A_.col_count();
  if (d < 1) throw DimensionError("polytope dimension must be >= 1");
  if (n < d) throw DimensionError("polytope needs at least dim rows");
  if (b_.size() != n) throw DimensionError("rhs length != row count");
  for (std::size_t i = 0; i < n; ++i)
    if (A_.row(i).is_zero())
      throw ParameterError("zero row " + std::to_string(i) + " in constraint matrix");
}

Basis::Basis(std::vector<std::size_t> rows) : rows_(std::move(rows)) {
  std::sort(rows_.begin(), rows_.end());
  if (std::adjacent_find(rows_.begin(), rows_.end()) != rows_.end())
    throw ParameterError("duplicate row index in basis");
}

bool Basis::contains(std::size_t row) const {
  return std::binary_search(rows_.begin(), rows_.end(), row);
}

Basis Basis::pivoted(std::size_t leaving, std::size_t entering) const {
  std::vector<std::size_t> rows;
  rows.reserve(rows_.size());
  for (std::size_t r : rows_)
    if (r != leaving) rows.push_back(r);
  rows.push_back(entering);
  return Basis(std::move(rows));
}

std::string Basis::str() const {
  std::ostringstream os;
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    if (k) os << ',';
    os << rows_[k];
  }
  return os.str();
}

HPolytope make_box(const Box& box) {
  const std::size_t d = box.lowers.size();
  if (d == 0 || box.uppers.size() != d)
    throw DimensionError("box bounds must be nonempty and of equal length");
  for (std::size_t i = 0; i < d; ++i)
    if (!(box.lowers[i] < box.uppers[i]))
      throw DegenerateBoxError("box bound " + std::to_string(i) +
                               ": lower must be strictly below upper");
  RatMatrix A(2 * d, d);
  RatVector b(2 * d);
  for (std::size_t i = 0; i < d; ++i) {
    A(2 * i, i) = -1;
    b[2 * i] = -box.lowers[i];
    A(2 * i + 1, i) = 1;
    b[2 * i + 1] = box.uppers[i];
  }
  return HPolytope(std::move(A), std::move(b), GeneratorInfo{"box", {}});
}

HPolytope make_klee_minty(std::size_t d, const Rational& eps) {
  if (d < 1) throw ParameterError("klee-minty dimension must be >= 1");
  if (!(Rational(0) < eps && eps < Rational(1, 2)))
    throw ParameterError("klee-minty eps must satisfy 0 < eps < 1/2, got " +
                         eps.str());
  RatMatrix A(2 * d, d);
  RatVector b(2 * d);
  // pair j (0-based): eps*x_{j-1} <= x_j <= 1 - eps*x_{j-1}, with x_0 = 0
  for (std::size_t j = 0; j < d; ++j) {
    A(2 * j, j) = -1;
    b[2 * j] = 0;
    A(2 * j + 1, j) = 1;
    b[2 * j + 1] = 1;
    if (j > 0) {
      A(2 * j, j - 1) = eps;
      A(2 * j + 1, j - 1) = eps;
    }
  }
  return HPolytope(std::move(A), std::move(b),
                   GeneratorInfo{"klee-minty", {{"eps", eps.str()}}});
}

std::size_t sparsity(const HPolytope& P) {
  std::size_t best = 0;
  for (std::size_t i = 0; i < P.num_rows(); ++i) {
    std::size_t nz = 0;
    for (const auto& a : P.row(i))
      if (!a.is_zero()) ++nz;
    best = std::max(best, nz);
  }
  return best;
}

bool is_feasible(const HPolytope& P, const RatVector& x) {
  if (x.size() != P.dim()) throw DimensionError("point dimension mismatch");
  for (std::size_t i = 0; i < P.num_rows(); ++i)
    if (dot(P.row(i), x) > P.rhs(i)) return false;
  return true;
}

RatVector vertex_of(const HPolytope& P, const Basis& B) {
  const std::size_t d = P.dim();
  if (B.size() != d)
    throw NonBasisError("basis has " + std::to_string(B.size()) +
                        " rows, need " + std::to_string(d));
  for (std::size_t r : B.indices())
    if (r >= P.num_rows())
      throw NonBasisError("basis row " + std::to_string(r) + " out of range");
  std::vector<RatVector> rows;
  RatVector rhs(d);
  rows.reserve(d);
  for (std::size_t k = 0; k < d; ++k) {
    rows.push_back(P.row(B[k]));
    rhs[k] = P.rhs(B[k]);
  }
  RatVector x;
  try {
    x = solve_square(RatMatrix::from_rows(std::move(rows)), rhs);
  } catch (const SingularSystemError&) {
    throw NonBasisError("rows {" + B.str() + "} do not form a basis");
  }
  if (!is_feasible(P, x))
    throw InfeasibleBasisError("basis {" + B.str() +
                               "} solves outside the polytope");
  return x;
}

std::uint64_t binomial_guarded(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t result = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    if (result > kMax / (n - k + i)) return kMax;  // saturate
    result = result * (n - k + i) / i;
  }
  return result;
}

VertexEnumeration enumerate_vertices(const HPolytope& P, std::uint64_t guard) {
  const std::size_t n = P.num_rows();
  const std::size_t d = P.dim();
  const std::uint64_t candidates = binomial_guarded(n, d);
  if (candidates > guard)
    throw InstanceTooLargeError(
        "C(" + std::to_string(n) + "," + std::to_string(d) + ") = " +
        std::to_string(candidates) + " candidate bases exceed guard " +
        std::to_string(guard));

  VertexEnumeration out;
  std::vector<std::size_t> pick(d);
  for (std::size_t i = 0; i < d; ++i) pick[i] = i;
  while (true) {
    ++out.bases_tried;
    Basis basis(pick);
    try {
      RatVector x = vertex_of(P, basis);
      out.vertices.emplace_back(std::move(basis), std::move(x));
    } catch (const NonBasisError&) {
    } catch (const InfeasibleBasisError&) {
    }
    // next lexicographic d-combination of {0..n-1}
    std::size_t i = d;
    while (i > 0 && pick[i - 1] == n - d + (i - 1)) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (std::size_t j = i; j < d; ++j) pick[j] = pick[j - 1] + 1;
  }

  // combinations were generated in sorted order already
  std::vector<RatVector> points;
  points.reserve(out.vertices.size());
  for (const auto& [b, x] : out.vertices) points.push_back(x);
  std::sort(points.begin(), points.end(),
            [](const RatVector& a, const RatVector& b) {
              for (std::size_t i = 0; i < a.size(); ++i) {
                if (a[i] != b[i]) return a[i] < b[i];
              }
              return false;
            });
  out.degenerate =
      std::adjacent_find(points.begin(), points.end()) != points.end();
  return out;
}

// --- .hpoly ----------------------------------------------------------------

void write_hpoly(std::ostream& os, const HPolytope& P) {
  os << P.num_rows() << ' ' << P.dim() << '\n';
  if (P.generator()) {
    os << "# generator: " << P.generator()->tag;
    for (const auto& [k, v] : P.generator()->params) os << ' ' << k << '=' << v;
    os << '\n';
  }
  for (std::size_t i = 0; i < P.num_rows(); ++i) {
    for (std::size_t j = 0; j < P.dim(); ++j) {
      if (j) os << ' ';
      os << P.lhs()(i, j);
    }
    os << " | " << P.rhs(i) << '\n';
  }
}

HPolytope read_hpoly(std::istream& is) {
  std::string line;
  if (!std::getline(is, line)) throw ParseError("empty .hpoly input");
  std::istringstream header(line);
  std::size_t n = 0, d = 0;
  if (!(header >> n >> d)) throw ParseError("bad .hpoly header: " + line);

  std::optional<GeneratorInfo> gen;
  std::streampos after_header = is.tellg();
  if (std::getline(is, line)) {
    if (line.rfind("# generator: ", 0) == 0) {
      GeneratorInfo info;
      std::istringstream ls(line.substr(13));
      ls >> info.tag;
      std::string kv;
      while (ls >> kv) {
        const auto eq = kv.find('=');
        if (eq == std::string::npos)
          throw ParseError("bad generator parameter: " + kv);
        info.params.emplace_back(kv.substr(0, eq), kv.substr(eq + 1));
      }
      gen = std::move(info);
    } else {
      is.seekg(after_header);
    }
  }

  RatMatrix A(n, d);
  RatVector b(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!std::getline(is, line))
      throw ParseError("truncated .hpoly: expected " + std::to_string(n) +
                       " rows, got " + std::to_string(i));
    std::istringstream ls(line);
    std::string tok;
    for (std::size_t j = 0; j < d; ++j) {
      if (!(ls >> tok)) throw ParseError("short row " + std::to_string(i));
      A(i, j) = Rational::parse(tok);
    }
    if (!(ls >> tok) || tok != "|")
      throw ParseError("row " + std::to_string(i) + ": missing '|' separator");
    if (!(ls >> tok)) throw ParseError("row " + std::to_string(i) + ": missing rhs");
    b[i] = Rational::parse(tok);
    if (ls >> tok) throw ParseError("row " + std::to_string(i) + ": trailing token " + tok);
  }
  return HPolytope(std::move(A), std::move(b), std::move(gen));
}

void write_hpoly_file(const std::string& path, const HPolytope& P) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw IoError("cannot open for writing: " + path);
  write_hpoly(os, P);
  if (!os) throw IoError("write failed: " + path);
}

HPolytope read_hpoly_file(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw IoError("cannot open: " + path);
  return read_hpoly(is);
}

}  // namespace shadowlab
