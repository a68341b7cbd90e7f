#include <gtest/gtest.h>

#include <cmath>
#include <cstdlib>

#include "focs/quadratic.hpp"

namespace focs {
namespace {

bool squarefree(long n) {
  for (long p = 2; p * p <= std::abs(n); ++p)
    if (n % (p * p) == 0) return false;
  return n != 0;
}

bool brute_force_solvable(long a, long b) {
  for (long x = 0; x <= 40; ++x) {
    for (long y = 0; y <= 40; ++y) {
      if (x == 0 && y == 0) continue;
      long v = a * x * x + b * y * y;
      if (v < 0) continue;
      long r = static_cast<long>(std::llround(std::sqrt(static_cast<double>(v))));
      if (r * r == v) return true;
    }
  }
  return false;
}

TEST(Squarefree, SplitsKnownNumbers) {
  auto s = squarefree_split(mpz_class(-360));  // -360 = -10 * 6^2
  ASSERT_TRUE(s.has_value());
  EXPECT_EQ(s->core, -10);
  EXPECT_EQ(s->root, 6);
  EXPECT_EQ(s->core_primes, (std::vector<mpz_class>{2, 5}));

  mpz_class big_prime("1000000009");
  auto p = squarefree_split(big_prime * big_prime * 3);
  ASSERT_TRUE(p.has_value());
  EXPECT_EQ(p->core, 3);
  EXPECT_EQ(p->root, big_prime);
}

TEST(SqrtMod, SquaresBackModuloSquarefree) {
  std::vector<mpz_class> primes{3, 7, 13};
  for (long a = 0; a < 273; ++a) {
    auto t = sqrt_mod(mpz_class(a), primes);
    bool residue = false;
    for (long x = 0; x < 273; ++x) residue = residue || (x * x - a) % 273 == 0;
    EXPECT_EQ(t.has_value(), residue) << a;
    if (t) {
      mpz_class r = (*t * *t - a) % 273;
      EXPECT_EQ(r, 0) << a;
    }
  }
}

TEST(Legendre, AgreesWithBruteForce) {
  int solved = 0;
  for (long a = -30; a <= 30; ++a) {
    for (long b = -30; b <= 30; ++b) {
      if (!squarefree(a) || !squarefree(b)) continue;
      auto s = solve_legendre(mpz_class(a), mpz_class(b));
      if (s) {
        ++solved;
        EXPECT_FALSE(s->x == 0 && s->y == 0) << a << ", " << b;
        EXPECT_EQ(a * s->x * s->x + b * s->y * s->y, s->z * s->z) << a << ", " << b;
      }
      EXPECT_EQ(s.has_value(), brute_force_solvable(a, b)) << a << ", " << b;
    }
  }
  EXPECT_GT(solved, 100);
}

TEST(Legendre, LargeCoefficients) {
  // 1000000009 = 1 (mod 4) is prime, so -1 is a residue; 1000000007 = 3 (mod 4) is not.
  auto s = solve_legendre(mpz_class(1), mpz_class("1000000009"));
  ASSERT_TRUE(s.has_value());
  auto t = solve_legendre(mpz_class("1000000009"), mpz_class("1000000009"));
  ASSERT_TRUE(t.has_value());
  EXPECT_EQ(mpz_class("1000000009") * (t->x * t->x + t->y * t->y), t->z * t->z);
  EXPECT_FALSE(solve_legendre(mpz_class("1000000007"), mpz_class("1000000007")).has_value());
  EXPECT_FALSE(solve_legendre(mpz_class(3), mpz_class(3)).has_value());
}

TEST(RepresentSquare, RationalForms) {
  // Positive d1, d2 cannot reach -2 s^2; 5/9 x^2 + 20/49 y^2 = s^2 is solvable.
  Rational d1(5, 9), d2(20, 49);
  EXPECT_FALSE(represent_square_multiple(d1, d2, Rational(-2)).has_value());
  auto xy = represent_square_multiple(d1, d2, Rational(1));
  ASSERT_TRUE(xy.has_value());
  Rational v = d1 * xy->first * xy->first + d2 * xy->second * xy->second;
  mpz_class num = v.get_num(), den = v.get_den();
  EXPECT_TRUE(mpz_perfect_square_p(num.get_mpz_t()) && mpz_perfect_square_p(den.get_mpz_t())) << v.get_str();
}

}  // namespace
}  // namespace focs
