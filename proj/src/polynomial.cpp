#include "focs/polynomial.hpp"

#include <algorithm>

#include "focs/error.hpp"

namespace focs {

Polynomial::Polynomial(std::vector<Rational> ascending) : c_(std::move(ascending)) { trim(); }

void Polynomial::trim() {
  while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

Polynomial Polynomial::monomial(const Rational& coeff, std::size_t degree) {
  std::vector<Rational> c(degree + 1);
  c[degree] = coeff;
  return Polynomial(std::move(c));
}

Polynomial Polynomial::linear(const Rational& root) { return Polynomial({-root, 1}); }

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  std::vector<Rational> c = c_;
  Rational lead = c.back();
  for (auto& x : c) x /= lead;
  return Polynomial(std::move(c));
}

Polynomial Polynomial::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<Rational> c(c_.size() - 1);
  for (std::size_t k = 1; k < c_.size(); ++k) c[k - 1] = c_[k] * static_cast<long>(k);
  return Polynomial(std::move(c));
}

Scalar Polynomial::evaluate(const Scalar& x) const {
  Scalar acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + Scalar(*it);
  return acc;
}

Polynomial operator+(const Polynomial& x, const Polynomial& y) {
  std::vector<Rational> c(std::max(x.c_.size(), y.c_.size()));
  for (std::size_t k = 0; k < c.size(); ++k) c[k] = x.coefficient(k) + y.coefficient(k);
  return Polynomial(std::move(c));
}

Polynomial operator-(const Polynomial& x, const Polynomial& y) {
  std::vector<Rational> c(std::max(x.c_.size(), y.c_.size()));
  for (std::size_t k = 0; k < c.size(); ++k) c[k] = x.coefficient(k) - y.coefficient(k);
  return Polynomial(std::move(c));
}

Polynomial operator*(const Polynomial& x, const Polynomial& y) {
  if (x.is_zero() || y.is_zero()) return {};
  std::vector<Rational> c(x.c_.size() + y.c_.size() - 1);
  for (std::size_t i = 0; i < x.c_.size(); ++i)
    for (std::size_t j = 0; j < y.c_.size(); ++j) c[i + j] += x.c_[i] * y.c_[j];
  return Polynomial(std::move(c));
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& divisor) const {
  if (divisor.is_zero()) throw Error(ErrorKind::kDivisionByZero, "polynomial division by zero");
  std::vector<Rational> rem = c_;
  if (rem.size() < divisor.c_.size()) return {Polynomial(), *this};
  std::vector<Rational> quot(rem.size() - divisor.c_.size() + 1);
  const Rational& lead = divisor.leading();
  for (std::size_t k = quot.size(); k-- > 0;) {
    Rational q = rem[k + divisor.c_.size() - 1] / lead;
    quot[k] = q;
    if (sgn(q) == 0) continue;
    for (std::size_t j = 0; j < divisor.c_.size(); ++j) rem[k + j] -= q * divisor.c_[j];
  }
  return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

std::string Polynomial::to_string(const std::string& var) const {
  if (c_.empty()) return "0";
  std::string out;
  for (std::size_t k = c_.size(); k-- > 0;) {
    const Rational& coeff = c_[k];
    if (sgn(coeff) == 0) continue;
    Rational magnitude = abs(coeff);
    if (out.empty()) {
      if (sgn(coeff) < 0) out += "-";
    } else {
      out += sgn(coeff) < 0 ? " - " : " + ";
    }
    if (k == 0 || magnitude != 1) out += magnitude.get_str();
    if (k > 0) {
      if (magnitude != 1) out += " ";
      out += var;
      if (k > 1) out += "^" + std::to_string(k);
    }
  }
  return out;
}

Polynomial gcd(Polynomial x, Polynomial y) {
  while (!y.is_zero()) {
    Polynomial r = x.divmod(y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

std::vector<mpz_class> primitive_integer_coefficients(const Polynomial& p) {
  const auto& c = p.coefficients();
  mpz_class lcm_den = 1;
  for (const auto& q : c) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), q.get_den_mpz_t());
  std::vector<mpz_class> out;
  out.reserve(c.size());
  mpz_class content = 0;
  for (const auto& q : c) {
    mpz_class v = q.get_num() * (lcm_den / q.get_den());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
    out.push_back(std::move(v));
  }
  if (sgn(content) == 0) return out;
  if (!out.empty() && sgn(out.back()) < 0) content = -content;
  for (auto& v : out) v /= content;
  return out;
}

}  // namespace focs
