#pragma once

#include <string>
#include <utility>
#include <vector>

#include "focs/scalar.hpp"

namespace focs {

/// Univariate polynomial over Q; coefficients in ascending degree, no trailing zeros.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> ascending);

  static Polynomial monomial(const Rational& coeff, std::size_t degree);
  /// x - root.
  static Polynomial linear(const Rational& root);

  const std::vector<Rational>& coefficients() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  /// Degree of the zero polynomial is reported as 0.
  std::size_t degree() const { return c_.empty() ? 0 : c_.size() - 1; }
  const Rational& leading() const { return c_.back(); }
  Rational coefficient(std::size_t k) const { return k < c_.size() ? c_[k] : Rational(0); }

  Polynomial monic() const;
  Polynomial derivative() const;
  Scalar evaluate(const Scalar& x) const;

  friend Polynomial operator+(const Polynomial& x, const Polynomial& y);
  friend Polynomial operator-(const Polynomial& x, const Polynomial& y);
  friend Polynomial operator*(const Polynomial& x, const Polynomial& y);
  friend bool operator==(const Polynomial& x, const Polynomial& y) { return x.c_ == y.c_; }

  /// Euclidean division; divisor must be nonzero.
  std::pair<Polynomial, Polynomial> divmod(const Polynomial& divisor) const;

  /// Human-readable, descending powers, e.g. "x^2 - 2".
  std::string to_string(const std::string& var = "x") const;

 private:
  void trim();
  std::vector<Rational> c_;
};

/// Monic greatest common divisor.
Polynomial gcd(Polynomial x, Polynomial y);

/// Integer coefficients with content 1 and positive leading coefficient, same roots.
std::vector<mpz_class> primitive_integer_coefficients(const Polynomial& p);

}  // namespace focs
