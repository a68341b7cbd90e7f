#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "focs/scalar.hpp"

namespace focs {

using Vector = std::vector<Scalar>;

/// Dense row-major matrix over Q(i, sqrt 2).
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n);
  static Matrix zero(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }
  static Matrix from_rows(std::initializer_list<std::initializer_list<Scalar>> rows);
  static Matrix from_rows(const std::vector<std::vector<Scalar>>& rows);
  static Matrix from_columns(std::span<const Vector> columns, std::size_t rows);
  static Matrix diagonal(std::span<const Scalar> entries);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Vector column(std::size_t j) const;
  void set_column(std::size_t j, const Vector& v);
  Matrix block(std::size_t row, std::size_t col, std::size_t rows, std::size_t cols) const;
  void set_block(std::size_t row, std::size_t col, const Matrix& m);

  bool is_zero() const;
  bool is_real() const;
  bool is_rational() const;
  bool is_hermitian() const;
  bool is_symmetric() const;

  Matrix conj_transpose() const;
  Matrix transpose() const;
  Matrix conj() const;

  friend bool operator==(const Matrix& x, const Matrix& y) {
    return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.data_ == y.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

Matrix operator+(const Matrix& x, const Matrix& y);
Matrix operator-(const Matrix& x, const Matrix& y);
Matrix operator*(const Matrix& x, const Matrix& y);
Matrix operator*(const Scalar& s, const Matrix& m);
Vector operator*(const Matrix& m, const Vector& v);

Vector operator+(const Vector& x, const Vector& y);
Vector operator-(const Vector& x, const Vector& y);
Vector operator*(const Scalar& s, const Vector& v);
Vector conj(const Vector& v);
bool is_zero(const Vector& v);

/// Block-diagonal direct sum.
Matrix direct_sum(std::span<const Matrix> blocks);

/// X - lambda * I.
Matrix shifted(const Matrix& x, const Scalar& lambda);

/// Reduced row echelon form. Pivot rule: leftmost column, topmost nonzero entry.
struct Echelon {
  Matrix reduced;
  std::vector<std::size_t> pivot_columns;
};
Echelon row_reduce(const Matrix& x);

std::size_t rank(const Matrix& x);
bool is_invertible(const Matrix& x);

/// Basis of the null space; each vector is scaled so its first nonzero entry is 1.
std::vector<Vector> kernel_basis(const Matrix& x);

/// Particular solution of x * result = b with free variables set to zero.
/// Throws kInconsistent if no solution exists.
Vector solve(const Matrix& x, const Vector& b);

/// Throws kSingular (with the rank) if x is not invertible.
Matrix inverse(const Matrix& x);

/// Incrementally maintained echelon basis of a span; answers membership queries.
class SpanBasis {
 public:
  explicit SpanBasis(std::size_t dimension) : dimension_(dimension) {}

  /// Adds v if it is independent of the current span; returns whether it was added.
  bool insert(const Vector& v);
  bool contains(const Vector& v) const;
  std::size_t size() const { return rows_.size(); }

 private:
  Vector reduce(Vector v) const;

  std::size_t dimension_;
  std::vector<Vector> rows_;
  std::vector<std::size_t> pivots_;
};

}  // namespace focs
