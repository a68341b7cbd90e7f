#pragma once

#include <gmpxx.h>

#include <optional>
#include <ostream>
#include <string>
#include <string_view>

namespace focs {

/// Arbitrary-precision rational; GMP keeps it reduced with a positive denominator.
using Rational = mpq_class;

Rational parse_rational(std::string_view text);

/// Element a + b*sqrt(2) + c*i + d*i*sqrt(2) of the eighth cyclotomic field Q(i, sqrt 2).
///
/// The four coordinates are unique, so equality is componentwise. Values are
/// immutable in spirit: every arithmetic operation returns a fresh Scalar.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long value) : a_(value) {}  // NOLINT(google-explicit-constructor)
  Scalar(int value) : a_(value) {}   // NOLINT(google-explicit-constructor)
  Scalar(Rational value) : a_(std::move(value)) {}  // NOLINT(google-explicit-constructor)
  Scalar(Rational a, Rational b, Rational c, Rational d)
      : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {}

  static Scalar i() { return {0, 0, 1, 0}; }
  static Scalar sqrt2() { return {0, 1, 0, 0}; }
  /// 1/sqrt(2), stored as sqrt(2)/2.
  static Scalar inv_sqrt2() { return {0, Rational(1, 2), 0, 0}; }
  /// Gaussian rational sigma + tau*i.
  static Scalar gaussian(Rational re, Rational im) { return {std::move(re), 0, std::move(im), 0}; }

  const Rational& rational_part() const { return a_; }
  const Rational& sqrt2_part() const { return b_; }
  const Rational& i_part() const { return c_; }
  const Rational& i_sqrt2_part() const { return d_; }

  bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0 && sgn(c_) == 0 && sgn(d_) == 0; }
  bool is_one() const { return a_ == 1 && sgn(b_) == 0 && sgn(c_) == 0 && sgn(d_) == 0; }
  bool is_real() const { return sgn(c_) == 0 && sgn(d_) == 0; }
  bool is_gaussian() const { return sgn(b_) == 0 && sgn(d_) == 0; }
  bool is_rational() const { return is_real() && sgn(b_) == 0; }

  /// a + b*sqrt(2).
  Scalar real_part() const { return {a_, b_, 0, 0}; }
  /// c + d*sqrt(2), returned as a real Scalar.
  Scalar imag_part() const { return {c_, d_, 0, 0}; }

  Scalar conj() const { return {a_, b_, -c_, -d_}; }
  /// Throws Error(kDivisionByZero) on zero.
  Scalar inverse() const;

  Scalar operator-() const { return {-a_, -b_, -c_, -d_}; }
  Scalar& operator+=(const Scalar& rhs);
  Scalar& operator-=(const Scalar& rhs);
  Scalar& operator*=(const Scalar& rhs);
  Scalar& operator/=(const Scalar& rhs) { return *this *= rhs.inverse(); }

  friend Scalar operator+(Scalar lhs, const Scalar& rhs) { return lhs += rhs; }
  friend Scalar operator-(Scalar lhs, const Scalar& rhs) { return lhs -= rhs; }
  friend Scalar operator*(const Scalar& lhs, const Scalar& rhs);
  friend Scalar operator/(const Scalar& lhs, const Scalar& rhs) { return lhs * rhs.inverse(); }

  friend bool operator==(const Scalar& x, const Scalar& y) {
    return x.a_ == y.a_ && x.b_ == y.b_ && x.c_ == y.c_ && x.d_ == y.d_;
  }

  /// Canonical text, e.g. "1/2 + -3 i r2" is printed as "1/2 - 3 i r2".
  std::string to_string() const;
  /// Accepts the grammar "a/b + c/d r2 + e/f i + g/h i r2" with any subset of
  /// terms, optional coefficients, either sign, and arbitrary whitespace.
  static Scalar parse(std::string_view text);

  /// Lossy, display only.
  double real_to_double() const;
  double imag_to_double() const;

 private:
  Rational a_, b_, c_, d_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& x);

/// Sign (-1, 0, +1) of a real element of Q(sqrt 2). Throws kInvalidArgument if x is not real.
int real_sign(const Scalar& x);

/// Total order used for canonical sorting: lexicographic on (a, b, c, d).
bool canonical_less(const Scalar& x, const Scalar& y);

/// Exact square root within Q(i, sqrt 2), or nullopt when x is not a square there.
std::optional<Scalar> exact_sqrt(const Scalar& x);

/// Square root of a rational if it is the square of a rational.
std::optional<Rational> rational_sqrt(const Rational& q);

}  // namespace focs
