#include "shadowlab/linalg.hpp"

#include <sstream>
#include <utility>

namespace shadowlab {

RatVector RatVector::unit(std::size_t n, std::size_t i) {
  RatVector v(n);
  v[i] = 1;
  return v;
}

RatVector& RatVector::operator+=(const RatVector& o) {
  if (size() != o.size()) throw DimensionError("vector length mismatch in +");
  for (std::size_t i = 0; i < e_.size(); ++i) e_[i] += o.e_[i];
  return *this;
}

RatVector& RatVector::operator-=(const RatVector& o) {
  if (size() != o.size()) throw DimensionError("vector length mismatch in -");
  for (std::size_t i = 0; i < e_.size(); ++i) e_[i] -= o.e_[i];
  return *this;
}

RatVector& RatVector::operator*=(const Rational& s) {
  for (auto& x : e_) x *= s;
  return *this;
}

RatVector RatVector::operator-() const {
  RatVector r(*this);
  for (auto& x : r.e_) x = -x;
  return r;
}

bool RatVector::is_zero() const {
  for (const auto& x : e_)
    if (!x.is_zero()) return false;
  return true;
}

std::string RatVector::str() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < e_.size(); ++i) {
    if (i) os << ' ';
    os << e_[i];
  }
  return os.str();
}

Rational dot(const RatVector& u, const RatVector& v) {
  if (u.size() != v.size())
    throw DimensionError("dot: lengths " + std::to_string(u.size()) + " vs " +
                         std::to_string(v.size()));
  Rational acc;
  for (std::size_t i = 0; i < u.size(); ++i) acc += u[i] * v[i];
  return acc;
}

RatMatrix::RatMatrix(std::size_t rows, std::size_t cols) : cols_(cols) {
  rows_.reserve(rows);
  for (std::size_t i = 0; i < rows; ++i) rows_.emplace_back(cols);
}

RatMatrix RatMatrix::identity(std::size_t n) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RatMatrix RatMatrix::from_rows(std::vector<RatVector> rows) {
  RatMatrix m;
  if (!rows.empty()) {
    m.cols_ = rows.front().size();
    for (const auto& r : rows)
      if (r.size() != m.cols_)
        throw DimensionError("matrix rows of unequal length");
  }
  m.rows_ = std::move(rows);
  return m;
}

RatVector RatMatrix::apply(const RatVector& x) const {
  if (x.size() != cols_) throw DimensionError("matrix-vector size mismatch");
  RatVector out(row_count());
  for (std::size_t i = 0; i < row_count(); ++i) out[i] = dot(rows_[i], x);
  return out;
}

namespace {

// Shared elimination kernel: reduces [A | rhs...] to the identity on the
// left, leaving the solution(s) on the right. rhs is column-major.
void gauss_jordan(RatMatrix& a, std::vector<RatVector>& rhs_cols) {
  const std::size_t n = a.row_count();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a(pivot, col).is_zero()) ++pivot;
    if (pivot == n) throw SingularSystemError("singular matrix");
    if (pivot != col) {
      for (std::size_t j = 0; j < n; ++j)
        std::swap(a(pivot, j), a(col, j));
      for (auto& rhs : rhs_cols) std::swap(rhs[pivot], rhs[col]);
    }
    const Rational inv = Rational(1) / a(col, col);
    for (std::size_t j = 0; j < n; ++j) a(col, j) *= inv;
    for (auto& rhs : rhs_cols) rhs[col] *= inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || a(i, col).is_zero()) continue;
      const Rational f = a(i, col);
      for (std::size_t j = 0; j < n; ++j) a(i, j) -= f * a(col, j);
      for (auto& rhs : rhs_cols) rhs[i] -= f * rhs[col];
    }
  }
}

}  // namespace

RatVector solve_square(const RatMatrix& A, const RatVector& b) {
  if (A.row_count() != A.col_count())
    throw DimensionError("solve_square: matrix not square");
  if (b.size() != A.row_count())
    throw DimensionError("solve_square: rhs length mismatch");
  RatMatrix a = A;
  std::vector<RatVector> rhs{b};
  gauss_jordan(a, rhs);
  return rhs.front();
}

RatMatrix invert(const RatMatrix& A) {
  const std::size_t n = A.row_count();
  if (n != A.col_count()) throw DimensionError("invert: matrix not square");
  RatMatrix a = A;
  std::vector<RatVector> cols;
  cols.reserve(n);
  for (std::size_t j = 0; j < n; ++j) cols.push_back(RatVector::unit(n, j));
  gauss_jordan(a, cols);
  RatMatrix inv(n, n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) inv(i, j) = cols[j][i];
  return inv;
}

}  // namespace shadowlab
