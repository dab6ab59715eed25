#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "shadowlab/rational.hpp"

namespace shadowlab {

/// Dense vector of exact rationals. Length is fixed after construction.
class RatVector {
 public:
  RatVector() = default;
  explicit RatVector(std::size_t n) : e_(n) {}
  RatVector(std::initializer_list<Rational> xs) : e_(xs) {}
  explicit RatVector(std::vector<Rational> xs) : e_(std::move(xs)) {}

  static RatVector unit(std::size_t n, std::size_t i);

  std::size_t size() const { return e_.size(); }
  bool empty() const { return e_.empty(); }

  Rational& operator[](std::size_t i) { return e_[i]; }
  const Rational& operator[](std::size_t i) const { return e_[i]; }

  auto begin() const { return e_.begin(); }
  auto end() const { return e_.end(); }

  bool operator==(const RatVector&) const = default;

  RatVector& operator+=(const RatVector& o);
  RatVector& operator-=(const RatVector& o);
  RatVector& operator*=(const Rational& s);
  RatVector operator-() const;

  friend RatVector operator+(RatVector a, const RatVector& b) { return a += b; }
  friend RatVector operator-(RatVector a, const RatVector& b) { return a -= b; }
  friend RatVector operator*(RatVector a, const Rational& s) { return a *= s; }
  friend RatVector operator*(const Rational& s, RatVector a) { return a *= s; }

  bool is_zero() const;

  /// "x1 x2 ... xn" with canonical rational literals.
  std::string str() const;

 private:
  std::vector<Rational> e_;
};

/// Exact inner product. Throws DimensionError on length mismatch.
Rational dot(const RatVector& u, const RatVector& v);

/// Dense row-major rational matrix. Rectangular by construction.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols);
  static RatMatrix identity(std::size_t n);
  static RatMatrix from_rows(std::vector<RatVector> rows);

  std::size_t row_count() const { return rows_.size(); }
  std::size_t col_count() const { return cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return rows_[i][j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const {
    return rows_[i][j];
  }
  const RatVector& row(std::size_t i) const { return rows_[i]; }

  bool operator==(const RatMatrix&) const = default;

  /// Matrix-vector product A x.
  RatVector apply(const RatVector& x) const;

 private:
  std::vector<RatVector> rows_;
  std::size_t cols_ = 0;
};

/// Solves A x = b for square nonsingular A by Gaussian elimination with
/// first-nonzero pivoting (exact arithmetic needs no magnitude heuristics).
/// Throws SingularSystemError when A is singular, DimensionError on shape
/// mismatch.
RatVector solve_square(const RatMatrix& A, const RatVector& b);

/// Exact inverse via Gauss-Jordan. Same error contract as solve_square.
RatMatrix invert(const RatMatrix& A);

}  // namespace shadowlab
