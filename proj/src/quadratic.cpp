#include "focs/quadratic.hpp"

#include <utility>

namespace focs {

namespace {

constexpr unsigned long kTrialLimit = 1UL << 20;

mpz_class powm(const mpz_class& base, const mpz_class& exp, const mpz_class& mod) {
  mpz_class out;
  mpz_powm(out.get_mpz_t(), base.get_mpz_t(), exp.get_mpz_t(), mod.get_mpz_t());
  return out;
}

mpz_class mod_positive(const mpz_class& a, const mpz_class& m) {
  mpz_class r = a % m;
  if (r < 0) r += m;
  return r;
}

bool is_perfect_square(const mpz_class& n, mpz_class& root) {
  if (n < 0) return false;
  if (mpz_perfect_square_p(n.get_mpz_t()) == 0) return false;
  mpz_sqrt(root.get_mpz_t(), n.get_mpz_t());
  return true;
}

// Tonelli-Shanks modulo an odd prime; a is a nonzero quadratic residue.
mpz_class sqrt_mod_prime(const mpz_class& a, const mpz_class& p) {
  mpz_class q = p - 1;
  unsigned long s = 0;
  while (mpz_even_p(q.get_mpz_t())) {
    q /= 2;
    ++s;
  }
  if (s == 1) return powm(a, (p + 1) / 4, p);
  mpz_class z = 2;
  while (mpz_legendre(z.get_mpz_t(), p.get_mpz_t()) != -1) ++z;
  mpz_class c = powm(z, q, p);
  mpz_class r = powm(a, (q + 1) / 2, p);
  mpz_class t = powm(a, q, p);
  unsigned long m = s;
  while (t != 1) {
    unsigned long i = 0;
    mpz_class t2 = t;
    while (t2 != 1) {
      t2 = t2 * t2 % p;
      ++i;
    }
    mpz_class b = c;
    for (unsigned long k = 0; k + i + 1 < m; ++k) b = b * b % p;
    r = r * b % p;
    c = b * b % p;
    t = t * c % p;
    m = i;
  }
  return r;
}

}  // namespace

std::optional<SquarefreeSplit> squarefree_split(const mpz_class& n) {
  SquarefreeSplit out{n < 0 ? mpz_class(-1) : mpz_class(1), 1, {}};
  mpz_class rest = abs(n);
  auto take = [&](const mpz_class& p) {
    unsigned count = 0;
    while (mpz_divisible_p(rest.get_mpz_t(), p.get_mpz_t())) {
      rest /= p;
      ++count;
    }
    for (unsigned k = 0; k + 1 < count; k += 2) out.root *= p;
    if (count % 2 == 1) {
      out.core *= p;
      out.core_primes.push_back(p);
    }
  };
  take(2);
  for (unsigned long d = 3; d < kTrialLimit && mpz_class(d) * d <= rest; d += 2) {
    if (mpz_divisible_ui_p(rest.get_mpz_t(), d)) take(mpz_class(d));
  }
  if (rest == 1) return out;
  mpz_class root;
  if (is_perfect_square(rest, root)) {
    out.root *= root;
    return out;
  }
  if (mpz_class(kTrialLimit) * kTrialLimit > rest || mpz_probab_prime_p(rest.get_mpz_t(), 30) > 0) {
    out.core *= rest;
    out.core_primes.push_back(rest);
    return out;
  }
  return std::nullopt;
}

std::optional<mpz_class> sqrt_mod(const mpz_class& a, const std::vector<mpz_class>& primes) {
  mpz_class modulus = 1, root = 0;
  for (const auto& p : primes) {
    mpz_class residue = mod_positive(a, p);
    mpz_class r;
    if (residue == 0 || p == 2) {
      r = residue;
    } else {
      if (mpz_legendre(residue.get_mpz_t(), p.get_mpz_t()) != 1) return std::nullopt;
      r = sqrt_mod_prime(residue, p);
    }
    // Chinese remaindering: root = r (mod p), root unchanged modulo the previous primes.
    mpz_class inv;
    mpz_invert(inv.get_mpz_t(), modulus.get_mpz_t(), p.get_mpz_t());
    mpz_class step = mod_positive((r - root) * inv, p);
    root += modulus * step;
    modulus *= p;
  }
  return mod_positive(root, modulus);
}

std::optional<LegendreSolution> solve_legendre(const mpz_class& a, const mpz_class& b) {
  if (a == 0 || b == 0) return std::nullopt;
  if (a < 0 && b < 0) return std::nullopt;
  mpz_class root;
  if (is_perfect_square(a, root)) return LegendreSolution{1, 0, root};
  if (is_perfect_square(b, root)) return LegendreSolution{0, 1, root};
  if (abs(a) > abs(b)) {
    auto swapped = solve_legendre(b, a);
    if (!swapped) return std::nullopt;
    return LegendreSolution{swapped->y, swapped->x, swapped->z};
  }

  // |a| <= |b|, |b| >= 2: pick t^2 = a (mod b) with |t| <= |b|/2.
  mpz_class modulus = abs(b);
  auto split_b = squarefree_split(modulus);
  if (!split_b || split_b->root != 1) return std::nullopt;
  auto t = sqrt_mod(a, split_b->core_primes);
  if (!t) return std::nullopt;
  if (2 * *t > modulus) *t -= modulus;

  mpz_class k_full = (*t * *t - a) / b;
  if (k_full == 0) return std::nullopt;
  auto split_k = squarefree_split(k_full);
  if (!split_k) return std::nullopt;
  auto inner = solve_legendre(a, split_k->core);
  if (!inner) return std::nullopt;

  // (t + sqrt a)(z1 + x1 sqrt a) has norm b (c k y1)^2.
  LegendreSolution out{*t * inner->x + inner->z, split_k->root * split_k->core * inner->y,
                       *t * inner->z + a * inner->x};
  if (out.x == 0 && out.y == 0) return std::nullopt;
  if (a * out.x * out.x + b * out.y * out.y != out.z * out.z) return std::nullopt;
  return out;
}

std::optional<std::pair<Rational, Rational>> represent_square_multiple(const Rational& d1, const Rational& d2,
                                                                      const Rational& target) {
  if (sgn(d1) == 0 || sgn(d2) == 0 || sgn(target) == 0) return std::nullopt;
  // d / target = core * (root / den)^2 with core a squarefree integer.
  auto reduce = [&](const Rational& d) -> std::optional<std::pair<mpz_class, Rational>> {
    Rational e = d / target;
    auto split = squarefree_split(e.get_num() * e.get_den());
    if (!split) return std::nullopt;
    Rational scale(split->root, e.get_den());
    scale.canonicalize();
    return std::make_pair(split->core, scale);
  };
  auto r1 = reduce(d1), r2 = reduce(d2);
  if (!r1 || !r2) return std::nullopt;
  auto solution = solve_legendre(r1->first, r2->first);
  if (!solution) return std::nullopt;
  return std::make_pair(Rational(solution->x) / r1->second, Rational(solution->y) / r2->second);
}

}  // namespace focs
