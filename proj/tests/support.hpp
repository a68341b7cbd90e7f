#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "focs/canonical.hpp"
#include "focs/matrix.hpp"
#include "focs/polynomial.hpp"
#include "focs/scalar.hpp"

namespace focs::testing {

using Rng = std::mt19937_64;

inline Rational random_rational(Rng& rng, int bound = 5, int max_den = 4) {
  std::uniform_int_distribution<int> num(-bound, bound), den(1, max_den);
  Rational q(num(rng), den(rng));
  q.canonicalize();
  return q;
}

inline Scalar random_scalar(Rng& rng, int bound = 5) {
  return Scalar(random_rational(rng, bound), random_rational(rng, bound), random_rational(rng, bound),
                random_rational(rng, bound));
}

inline Matrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols, int bound = 3) {
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = random_scalar(rng, bound);
  return m;
}

inline Matrix random_rational_matrix(Rng& rng, std::size_t n, int bound = 4) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = Scalar(random_rational(rng, bound, 3));
  return m;
}

inline Matrix random_integer_matrix(Rng& rng, std::size_t n, int bound = 3) {
  std::uniform_int_distribution<int> d(-bound, bound);
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = Scalar(d(rng));
  return m;
}

inline Matrix random_invertible_integer(Rng& rng, std::size_t n, int bound = 3) {
  for (;;) {
    Matrix m = random_integer_matrix(rng, n, bound);
    if (is_invertible(m)) return m;
  }
}

// det(xI - A) by Laplace expansion along the first row, entries as polynomials.
inline Polynomial cofactor_det(const std::vector<std::vector<Polynomial>>& m) {
  std::size_t n = m.size();
  if (n == 1) return m[0][0];
  Polynomial total;
  for (std::size_t c = 0; c < n; ++c) {
    if (m[0][c].is_zero()) continue;
    std::vector<std::vector<Polynomial>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<Polynomial> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != c) row.push_back(m[r][k]);
      minor.push_back(std::move(row));
    }
    Polynomial term = m[0][c] * cofactor_det(minor);
    total = (c % 2 == 0) ? total + term : total - term;
  }
  return total;
}

inline Polynomial charpoly_by_cofactors(const Matrix& a) {
  std::size_t n = a.rows();
  std::vector<std::vector<Polynomial>> m(n, std::vector<Polynomial>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Rational entry = -a(i, j).rational_part();
      m[i][j] = (i == j) ? Polynomial({entry, Rational(1)}) : Polynomial({entry});
    }
  }
  return cofactor_det(m);
}

inline std::vector<std::tuple<std::string, std::size_t, int>> sign_multiset(const SignCharacteristic& signs) {
  std::vector<std::tuple<std::string, std::size_t, int>> out;
  for (const auto& e : signs) out.emplace_back(e.lambda.get_str(), e.size, e.eps);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace focs::testing
