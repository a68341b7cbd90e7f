#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "focs/scalar.hpp"

namespace focs {

/// n = core * root^2 with core squarefree (sign of n kept in core) and its prime factors.
struct SquarefreeSplit {
  mpz_class core;
  mpz_class root;
  std::vector<mpz_class> core_primes;
};

/// Factors n by trial division plus a primality test on the cofactor; nullopt
/// when the cofactor is composite and not a perfect square. n must be nonzero.
std::optional<SquarefreeSplit> squarefree_split(const mpz_class& n);

/// Some t with t^2 = a (mod m) for squarefree m > 0 given by its primes, or nullopt.
std::optional<mpz_class> sqrt_mod(const mpz_class& a, const std::vector<mpz_class>& primes);

struct LegendreSolution {
  mpz_class x, y, z;
};

/// Nontrivial integer solution of a x^2 + b y^2 = z^2 for squarefree nonzero a, b
/// (Lagrange descent), or nullopt when none exists or factoring gave up.
std::optional<LegendreSolution> solve_legendre(const mpz_class& a, const mpz_class& b);

/// Rationals (x, y), not both zero, with d1 x^2 + d2 y^2 = target * s^2 for some
/// nonzero rational s. All inputs must be nonzero.
std::optional<std::pair<Rational, Rational>> represent_square_multiple(const Rational& d1, const Rational& d2,
                                                                      const Rational& target);

}  // namespace focs
