#include "focs/matrix.hpp"

#include <string>
#include <utility>

#include "focs/error.hpp"

namespace focs {

namespace {

std::string shape(const Matrix& m) { return std::to_string(m.rows()) + "x" + std::to_string(m.cols()); }

void require_same_shape(const Matrix& x, const Matrix& y, const char* op) {
  if (x.rows() != y.rows() || x.cols() != y.cols()) {
    throw Error(ErrorKind::kDimensionMismatch, std::string(op) + ": " + shape(x) + " vs " + shape(y));
  }
}

void require_same_length(const Vector& x, const Vector& y) {
  if (x.size() != y.size()) throw Error(ErrorKind::kDimensionMismatch, "vector lengths differ");
}

}  // namespace

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(std::initializer_list<std::initializer_list<Scalar>> rows) {
  std::vector<std::vector<Scalar>> copy;
  for (const auto& row : rows) copy.emplace_back(row);
  return from_rows(copy);
}

Matrix Matrix::from_rows(const std::vector<std::vector<Scalar>>& rows) {
  if (rows.empty()) return {};
  Matrix m(rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols()) throw Error(ErrorKind::kDimensionMismatch, "ragged rows");
    for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = rows[i][j];
  }
  return m;
}

Matrix Matrix::from_columns(std::span<const Vector> columns, std::size_t rows) {
  Matrix m(rows, columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) m.set_column(j, columns[j]);
  return m;
}

Matrix Matrix::diagonal(std::span<const Scalar> entries) {
  Matrix m(entries.size(), entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = entries[i];
  return m;
}

Vector Matrix::column(std::size_t j) const {
  Vector v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

void Matrix::set_column(std::size_t j, const Vector& v) {
  if (v.size() != rows_) throw Error(ErrorKind::kDimensionMismatch, "column length mismatch");
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = v[i];
}

Matrix Matrix::block(std::size_t row, std::size_t col, std::size_t rows, std::size_t cols) const {
  if (row + rows > rows_ || col + cols > cols_) throw Error(ErrorKind::kDimensionMismatch, "block out of range");
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = (*this)(row + i, col + j);
  return m;
}

void Matrix::set_block(std::size_t row, std::size_t col, const Matrix& m) {
  if (row + m.rows() > rows_ || col + m.cols() > cols_) throw Error(ErrorKind::kDimensionMismatch, "block out of range");
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) (*this)(row + i, col + j) = m(i, j);
}

bool Matrix::is_zero() const {
  for (const auto& x : data_)
    if (!x.is_zero()) return false;
  return true;
}

bool Matrix::is_real() const {
  for (const auto& x : data_)
    if (!x.is_real()) return false;
  return true;
}

bool Matrix::is_rational() const {
  for (const auto& x : data_)
    if (!x.is_rational()) return false;
  return true;
}

bool Matrix::is_hermitian() const {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i; j < cols_; ++j)
      if (!((*this)(i, j) == (*this)(j, i).conj())) return false;
  return true;
}

bool Matrix::is_symmetric() const {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i + 1; j < cols_; ++j)
      if (!((*this)(i, j) == (*this)(j, i))) return false;
  return true;
}

Matrix Matrix::conj_transpose() const {
  Matrix m(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m(j, i) = (*this)(i, j).conj();
  return m;
}

Matrix Matrix::transpose() const {
  Matrix m(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m(j, i) = (*this)(i, j);
  return m;
}

Matrix Matrix::conj() const {
  Matrix m(rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m(i, j) = (*this)(i, j).conj();
  return m;
}

Matrix operator+(const Matrix& x, const Matrix& y) {
  require_same_shape(x, y, "add");
  Matrix m = x;
  for (std::size_t i = 0; i < x.rows(); ++i)
    for (std::size_t j = 0; j < x.cols(); ++j) m(i, j) += y(i, j);
  return m;
}

Matrix operator-(const Matrix& x, const Matrix& y) {
  require_same_shape(x, y, "sub");
  Matrix m = x;
  for (std::size_t i = 0; i < x.rows(); ++i)
    for (std::size_t j = 0; j < x.cols(); ++j) m(i, j) -= y(i, j);
  return m;
}

Matrix operator*(const Matrix& x, const Matrix& y) {
  if (x.cols() != y.rows()) {
    throw Error(ErrorKind::kDimensionMismatch, "matmul: " + shape(x) + " * " + shape(y));
  }
  Matrix m(x.rows(), y.cols());
  for (std::size_t i = 0; i < x.rows(); ++i) {
    for (std::size_t k = 0; k < x.cols(); ++k) {
      const Scalar& xik = x(i, k);
      if (xik.is_zero()) continue;
      for (std::size_t j = 0; j < y.cols(); ++j) {
        if (!y(k, j).is_zero()) m(i, j) += xik * y(k, j);
      }
    }
  }
  return m;
}

Matrix operator*(const Scalar& s, const Matrix& m) {
  Matrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = s * m(i, j);
  return out;
}

Vector operator*(const Matrix& m, const Vector& v) {
  if (m.cols() != v.size()) throw Error(ErrorKind::kDimensionMismatch, "matvec: " + shape(m));
  Vector out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_zero() && !v[j].is_zero()) out[i] += m(i, j) * v[j];
  return out;
}

Vector operator+(const Vector& x, const Vector& y) {
  require_same_length(x, y);
  Vector out = x;
  for (std::size_t i = 0; i < x.size(); ++i) out[i] += y[i];
  return out;
}

Vector operator-(const Vector& x, const Vector& y) {
  require_same_length(x, y);
  Vector out = x;
  for (std::size_t i = 0; i < x.size(); ++i) out[i] -= y[i];
  return out;
}

Vector operator*(const Scalar& s, const Vector& v) {
  Vector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = s * v[i];
  return out;
}

Vector conj(const Vector& v) {
  Vector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i].conj();
  return out;
}

bool is_zero(const Vector& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

Matrix direct_sum(std::span<const Matrix> blocks) {
  std::size_t rows = 0, cols = 0;
  for (const auto& b : blocks) {
    rows += b.rows();
    cols += b.cols();
  }
  Matrix m(rows, cols);
  std::size_t r = 0, c = 0;
  for (const auto& b : blocks) {
    m.set_block(r, c, b);
    r += b.rows();
    c += b.cols();
  }
  return m;
}

Matrix shifted(const Matrix& x, const Scalar& lambda) {
  if (!x.is_square()) throw Error(ErrorKind::kDimensionMismatch, "shift of non-square " + shape(x));
  Matrix m = x;
  for (std::size_t i = 0; i < x.rows(); ++i) m(i, i) -= lambda;
  return m;
}

Echelon row_reduce(const Matrix& x) {
  Echelon e{x, {}};
  Matrix& m = e.reduced;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t pivot = row;
    while (pivot < m.rows() && m(pivot, col).is_zero()) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != row) {
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(pivot, j), m(row, j));
    }
    Scalar scale = m(row, col).inverse();
    for (std::size_t j = col; j < m.cols(); ++j) m(row, j) = m(row, j) * scale;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || m(i, col).is_zero()) continue;
      Scalar factor = m(i, col);
      for (std::size_t j = col; j < m.cols(); ++j) {
        if (!m(row, j).is_zero()) m(i, j) -= factor * m(row, j);
      }
    }
    e.pivot_columns.push_back(col);
    ++row;
  }
  return e;
}

std::size_t rank(const Matrix& x) { return row_reduce(x).pivot_columns.size(); }

bool is_invertible(const Matrix& x) { return x.is_square() && rank(x) == x.rows(); }

std::vector<Vector> kernel_basis(const Matrix& x) {
  Echelon e = row_reduce(x);
  std::vector<bool> is_pivot(x.cols(), false);
  for (auto c : e.pivot_columns) is_pivot[c] = true;

  std::vector<Vector> basis;
  for (std::size_t free = 0; free < x.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector v(x.cols());
    v[free] = 1;
    for (std::size_t r = 0; r < e.pivot_columns.size(); ++r) v[e.pivot_columns[r]] = -e.reduced(r, free);
    for (const auto& entry : v) {
      if (!entry.is_zero()) {
        Scalar scale = entry.inverse();
        for (auto& y : v) y = y * scale;
        break;
      }
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

Vector solve(const Matrix& x, const Vector& b) {
  if (b.size() != x.rows()) throw Error(ErrorKind::kDimensionMismatch, "solve: right-hand side length");
  Matrix augmented(x.rows(), x.cols() + 1);
  augmented.set_block(0, 0, x);
  augmented.set_column(x.cols(), b);
  Echelon e = row_reduce(augmented);
  Vector result(x.cols());
  for (std::size_t r = 0; r < e.pivot_columns.size(); ++r) {
    std::size_t c = e.pivot_columns[r];
    if (c == x.cols()) throw Error(ErrorKind::kInconsistent, "solve: system is inconsistent");
    result[c] = e.reduced(r, x.cols());
  }
  return result;
}

Matrix inverse(const Matrix& x) {
  if (!x.is_square()) throw Error(ErrorKind::kDimensionMismatch, "inverse of non-square " + shape(x));
  std::size_t n = x.rows();
  Matrix augmented(n, 2 * n);
  augmented.set_block(0, 0, x);
  augmented.set_block(0, n, Matrix::identity(n));
  Echelon e = row_reduce(augmented);
  std::size_t r = 0;
  while (r < e.pivot_columns.size() && e.pivot_columns[r] < n) ++r;
  if (r < n) throw Error(ErrorKind::kSingular, "matrix is singular (rank " + std::to_string(r) + " of " + std::to_string(n) + ")");
  return e.reduced.block(0, n, n, n);
}

Vector SpanBasis::reduce(Vector v) const {
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const Scalar& coeff = v[pivots_[r]];
    if (coeff.is_zero()) continue;
    Scalar factor = coeff;
    for (std::size_t j = 0; j < dimension_; ++j) {
      if (!rows_[r][j].is_zero()) v[j] -= factor * rows_[r][j];
    }
  }
  return v;
}

bool SpanBasis::contains(const Vector& v) const { return is_zero(reduce(v)); }

bool SpanBasis::insert(const Vector& v) {
  if (v.size() != dimension_) throw Error(ErrorKind::kDimensionMismatch, "span vector length");
  Vector w = reduce(v);
  std::size_t pivot = 0;
  while (pivot < dimension_ && w[pivot].is_zero()) ++pivot;
  if (pivot == dimension_) return false;
  Scalar scale = w[pivot].inverse();
  for (auto& x : w) x = x * scale;
  // Keep existing rows reduced against the new pivot so reduce() stays one pass.
  for (auto& row : rows_) {
    if (row[pivot].is_zero()) continue;
    Scalar factor = row[pivot];
    for (std::size_t j = 0; j < dimension_; ++j) row[j] -= factor * w[j];
  }
  rows_.push_back(std::move(w));
  pivots_.push_back(pivot);
  return true;
}

}  // namespace focs
