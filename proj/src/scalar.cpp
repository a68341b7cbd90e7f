#include "focs/scalar.hpp"

#include <cctype>
#include <sstream>

#include "focs/error.hpp"

namespace focs {

std::string_view error_name(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::kParse: return "ParseError";
    case ErrorKind::kDimensionMismatch: return "DimensionMismatch";
    case ErrorKind::kDivisionByZero: return "DivisionByZero";
    case ErrorKind::kSingular: return "Singular";
    case ErrorKind::kInconsistent: return "Inconsistent";
    case ErrorKind::kNotHermitian: return "NotHermitian";
    case ErrorKind::kNotSelfadjoint: return "NotSelfadjoint";
    case ErrorKind::kIrrationalSpectrum: return "IrrationalSpectrum";
    case ErrorKind::kNonconstructibleScaling: return "NonconstructibleScaling";
    case ErrorKind::kBadSignature: return "BadSignature";
    case ErrorKind::kBadGamma: return "BadGamma";
    case ErrorKind::kGeneratorExhausted: return "GeneratorExhausted";
    case ErrorKind::kInvalidArgument: return "InvalidArgument";
    case ErrorKind::kInternalStructureMismatch: return "InternalStructureMismatch";
  }
  return "Unknown";
}

namespace {

// Gaussian rational, the intermediate field for square roots.
struct Gaussian {
  Rational re, im;
};

Gaussian operator*(const Gaussian& x, const Gaussian& y) {
  return {x.re * y.re - x.im * y.im, x.re * y.im + x.im * y.re};
}
Gaussian operator+(const Gaussian& x, const Gaussian& y) { return {x.re + y.re, x.im + y.im}; }
Gaussian operator-(const Gaussian& x, const Gaussian& y) { return {x.re - y.re, x.im - y.im}; }
bool is_zero(const Gaussian& x) { return sgn(x.re) == 0 && sgn(x.im) == 0; }

Gaussian inverse(const Gaussian& x) {
  Rational n = x.re * x.re + x.im * x.im;
  return {x.re / n, -x.im / n};
}

Gaussian scale(const Gaussian& x, const Rational& q) { return {x.re * q, x.im * q}; }

std::optional<Gaussian> gaussian_sqrt(const Gaussian& z) {
  if (sgn(z.im) == 0) {
    if (sgn(z.re) >= 0) {
      if (auto r = rational_sqrt(z.re)) return Gaussian{*r, 0};
      return std::nullopt;
    }
    if (auto r = rational_sqrt(-z.re)) return Gaussian{0, *r};
    return std::nullopt;
  }
  auto modulus = rational_sqrt(z.re * z.re + z.im * z.im);
  if (!modulus) return std::nullopt;
  auto re = rational_sqrt((z.re + *modulus) / 2);
  if (!re || sgn(*re) == 0) return std::nullopt;
  return Gaussian{*re, z.im / (2 * *re)};
}

bool parse_unsigned_integer(std::string_view s, std::size_t& pos, mpz_class& out) {
  std::size_t start = pos;
  while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
  if (pos == start) return false;
  out.set_str(std::string(s.substr(start, pos - start)), 10);
  return true;
}

[[noreturn]] void parse_failure(std::string_view text, const std::string& why) {
  throw Error(ErrorKind::kParse, "invalid scalar '" + std::string(text) + "': " + why);
}

void append_term(std::string& out, const Rational& coefficient, std::string_view unit) {
  if (sgn(coefficient) == 0) return;
  Rational magnitude = abs(coefficient);
  if (out.empty()) {
    if (sgn(coefficient) < 0) out += "-";
  } else {
    out += sgn(coefficient) < 0 ? " - " : " + ";
  }
  if (unit.empty()) {
    out += magnitude.get_str();
  } else if (magnitude == 1) {
    out += unit;
  } else {
    out += magnitude.get_str();
    out += ' ';
    out += unit;
  }
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::size_t pos = 0;
  bool negative = false;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
    negative = text[pos] == '-';
    ++pos;
  }
  mpz_class num, den = 1;
  if (!parse_unsigned_integer(text, pos, num)) {
    throw Error(ErrorKind::kParse, "invalid rational '" + std::string(text) + "'");
  }
  if (pos < text.size() && text[pos] == '/') {
    ++pos;
    if (!parse_unsigned_integer(text, pos, den)) {
      throw Error(ErrorKind::kParse, "invalid rational '" + std::string(text) + "'");
    }
  }
  if (pos != text.size()) throw Error(ErrorKind::kParse, "invalid rational '" + std::string(text) + "'");
  if (sgn(den) == 0) throw Error(ErrorKind::kParse, "zero denominator in '" + std::string(text) + "'");
  Rational q(negative ? mpz_class(-num) : num, den);
  q.canonicalize();
  return q;
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
  a_ += rhs.a_;
  b_ += rhs.b_;
  c_ += rhs.c_;
  d_ += rhs.d_;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) {
  a_ -= rhs.a_;
  b_ -= rhs.b_;
  c_ -= rhs.c_;
  d_ -= rhs.d_;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& rhs) {
  *this = *this * rhs;
  return *this;
}

Scalar operator*(const Scalar& x, const Scalar& y) {
  // (re_x + i im_x)(re_y + i im_y) with re, im in Q(sqrt 2) and sqrt(2)^2 = 2.
  const Rational &a = x.a_, &b = x.b_, &c = x.c_, &d = x.d_;
  const Rational &e = y.a_, &f = y.b_, &g = y.c_, &h = y.d_;
  return Scalar(a * e + 2 * b * f - c * g - 2 * d * h,
                a * f + b * e - c * h - d * g,
                a * g + 2 * b * h + c * e + 2 * d * f,
                a * h + b * g + c * f + d * e);
}

Scalar Scalar::inverse() const {
  // Two-stage norm descent: x * conj(x) lies in Q(sqrt 2), and
  // (p + q sqrt2)(p - q sqrt2) = p^2 - 2 q^2 lies in Q.
  if (is_zero()) throw Error(ErrorKind::kDivisionByZero, "inverse of zero");
  Rational p = a_ * a_ + 2 * b_ * b_ + c_ * c_ + 2 * d_ * d_;
  Rational q = 2 * a_ * b_ + 2 * c_ * d_;
  Rational rational_norm = p * p - 2 * q * q;
  Scalar norm_inverse(p / rational_norm, -q / rational_norm, 0, 0);
  return conj() * norm_inverse;
}

std::string Scalar::to_string() const {
  std::string out;
  append_term(out, a_, "");
  append_term(out, b_, "r2");
  append_term(out, c_, "i");
  append_term(out, d_, "i r2");
  return out.empty() ? "0" : out;
}

Scalar Scalar::parse(std::string_view text) {
  std::string s;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  }
  if (s.empty()) parse_failure(text, "empty");

  Scalar result;
  std::size_t pos = 0;
  bool first = true;
  while (pos < s.size()) {
    bool negative = false;
    if (s[pos] == '+' || s[pos] == '-') {
      negative = s[pos] == '-';
      ++pos;
    } else if (!first) {
      parse_failure(text, "expected '+' or '-' between terms");
    }
    first = false;

    Rational coefficient = 1;
    bool have_coefficient = false;
    mpz_class num;
    if (parse_unsigned_integer(s, pos, num)) {
      mpz_class den = 1;
      if (pos < s.size() && s[pos] == '/') {
        ++pos;
        if (!parse_unsigned_integer(s, pos, den)) parse_failure(text, "missing denominator");
        if (sgn(den) == 0) throw Error(ErrorKind::kParse, "zero denominator in '" + std::string(text) + "'");
      }
      coefficient = Rational(num, den);
      coefficient.canonicalize();
      have_coefficient = true;
      if (pos < s.size() && s[pos] == '*') ++pos;
    }

    bool has_i = false, has_r2 = false;
    while (pos < s.size() && s[pos] != '+' && s[pos] != '-') {
      if (s[pos] == '*') {
        ++pos;
      } else if (s[pos] == 'i' && !has_i) {
        has_i = true;
        ++pos;
      } else if (s.compare(pos, 2, "r2") == 0 && !has_r2) {
        has_r2 = true;
        pos += 2;
      } else {
        parse_failure(text, "unexpected character at offset " + std::to_string(pos));
      }
    }
    if (!have_coefficient && !has_i && !has_r2) parse_failure(text, "empty term");
    if (negative) coefficient = -coefficient;

    if (has_i && has_r2) result.d_ += coefficient;
    else if (has_i) result.c_ += coefficient;
    else if (has_r2) result.b_ += coefficient;
    else result.a_ += coefficient;
  }
  return result;
}

double Scalar::real_to_double() const { return a_.get_d() + b_.get_d() * 1.4142135623730951; }
double Scalar::imag_to_double() const { return c_.get_d() + d_.get_d() * 1.4142135623730951; }

std::ostream& operator<<(std::ostream& os, const Scalar& x) { return os << x.to_string(); }

int real_sign(const Scalar& x) {
  if (!x.is_real()) throw Error(ErrorKind::kInvalidArgument, "sign of non-real scalar " + x.to_string());
  const Rational& p = x.rational_part();
  const Rational& q = x.sqrt2_part();
  int sp = sgn(p), sq = sgn(q);
  if (sq == 0) return sp;
  if (sp == 0 || sp == sq) return sq;
  // Opposite signs: the larger of p^2 and 2 q^2 wins.
  return (p * p > 2 * q * q) ? sp : sq;
}

bool canonical_less(const Scalar& x, const Scalar& y) {
  if (x.rational_part() != y.rational_part()) return x.rational_part() < y.rational_part();
  if (x.sqrt2_part() != y.sqrt2_part()) return x.sqrt2_part() < y.sqrt2_part();
  if (x.i_part() != y.i_part()) return x.i_part() < y.i_part();
  return x.i_sqrt2_part() < y.i_sqrt2_part();
}

std::optional<Rational> rational_sqrt(const Rational& q) {
  if (sgn(q) < 0) return std::nullopt;
  const mpz_class& num = q.get_num();
  const mpz_class& den = q.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t())) return std::nullopt;
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
  Rational r(rn, rd);
  r.canonicalize();
  return r;
}

std::optional<Scalar> exact_sqrt(const Scalar& x) {
  // Write x = u + v sqrt2 with u, v Gaussian and look for (s + t sqrt2)^2 = x:
  // s^2 + 2 t^2 = u and 2 s t = v, so (u^2 - 2 v^2) = (s^2 - 2 t^2)^2.
  if (x.is_zero()) return Scalar();
  Gaussian u{x.rational_part(), x.i_part()};
  Gaussian v{x.sqrt2_part(), x.i_sqrt2_part()};
  auto assemble = [](const Gaussian& s, const Gaussian& t) {
    return Scalar(s.re, t.re, s.im, t.im);
  };

  std::optional<Scalar> root;
  if (is_zero(v)) {
    if (auto s = gaussian_sqrt(u)) {
      root = assemble(*s, {0, 0});
    } else if (auto t = gaussian_sqrt(scale(u, Rational(1, 2)))) {
      root = assemble({0, 0}, *t);
    }
  } else if (auto delta = gaussian_sqrt(u * u - scale(v * v, 2))) {
    for (const Gaussian& s_squared : {scale(u + *delta, Rational(1, 2)), scale(u - *delta, Rational(1, 2))}) {
      if (is_zero(s_squared)) continue;
      if (auto s = gaussian_sqrt(s_squared)) {
        Gaussian t = scale(v * inverse(*s), Rational(1, 2));
        root = assemble(*s, t);
        break;
      }
    }
  }
  if (root && *root * *root == x) return root;
  return std::nullopt;
}

}  // namespace focs
