#include <gtest/gtest.h>

#include "focs/error.hpp"
#include "focs/golden.hpp"
#include "focs/spectral.hpp"
#include "support.hpp"

namespace focs {
namespace {

using testing::charpoly_by_cofactors;
using testing::random_invertible_integer;
using testing::random_rational_matrix;
using testing::Rng;

TEST(Polynomial, ArithmeticAndDivision) {
  Polynomial x2m1({Rational(-1), Rational(0), Rational(1)});
  Polynomial xm1 = Polynomial::linear(1);
  auto [q, r] = x2m1.divmod(xm1);
  EXPECT_EQ(q, Polynomial::linear(-1));
  EXPECT_TRUE(r.is_zero());
  EXPECT_EQ(q * xm1, x2m1);
  EXPECT_EQ(x2m1.derivative(), Polynomial({Rational(0), Rational(2)}));
  EXPECT_EQ(x2m1.to_string(), "x^2 - 1");
}

TEST(Polynomial, GcdIsMonic) {
  Polynomial a = Polynomial({Rational(2)}) * Polynomial::linear(1) * Polynomial::linear(2);
  Polynomial b = Polynomial::linear(1) * Polynomial::linear(3);
  EXPECT_EQ(gcd(a, b), Polynomial::linear(1));
}

TEST(Polynomial, EvaluateAtGaussian) {
  Polynomial x2p1({Rational(1), Rational(0), Rational(1)});
  EXPECT_TRUE(x2p1.evaluate(Scalar::i()).is_zero());
  EXPECT_EQ(x2p1.evaluate(Scalar(2)), Scalar(5));
}

TEST(Polynomial, PrimitiveIntegerCoefficients) {
  Polynomial p({Rational(1, 2), Rational(-3, 4), Rational(1, 4)});
  EXPECT_EQ(primitive_integer_coefficients(p), (std::vector<mpz_class>{2, -3, 1}));
}

TEST(Spectral, CharPolyMatchesCofactorExpansion) {
  Rng rng(2024);
  for (int trial = 0; trial < 30; ++trial) {
    std::size_t n = 1 + trial % 5;
    Matrix a = random_rational_matrix(rng, n);
    EXPECT_EQ(char_poly(a).poly, charpoly_by_cofactors(a)) << "n = " << n;
  }
}

TEST(Spectral, CharPolyRejectsNonRational) {
  Matrix a = Matrix::from_rows({{Scalar::i()}});
  EXPECT_THROW((void)char_poly(a), Error);
}

TEST(Spectral, EigenvaluesOfExample) {
  auto ev = eigenvalues(char_poly(golden::example_A()));
  ASSERT_EQ(ev.size(), 2u);
  EXPECT_EQ(ev[0].value, Scalar::i());
  EXPECT_EQ(ev[1].value, -Scalar::i());
  EXPECT_EQ(ev[0].multiplicity, 2u);
  EXPECT_EQ(ev[1].multiplicity, 2u);
  JordanSpec spec = jordan_structure(golden::example_A());
  ASSERT_TRUE(spec.real.empty());
  ASSERT_EQ(spec.nonreal.size(), 1u);
  EXPECT_EQ(spec.nonreal[0].sigma, 0);
  EXPECT_EQ(spec.nonreal[0].tau, 1);
  EXPECT_EQ(spec.nonreal[0].sizes, (std::vector<std::size_t>{2}));
}

TEST(Spectral, EigenvalueOrdering) {
  // roots 3, -1/2, 1 +- 2i, -1 +- i
  Polynomial p = Polynomial::linear(3) * Polynomial::linear(Rational(-1, 2)) *
                 Polynomial({Rational(5), Rational(-2), Rational(1)}) *
                 Polynomial({Rational(2), Rational(2), Rational(1)});
  auto ev = eigenvalues(CharPoly{p});
  ASSERT_EQ(ev.size(), 6u);
  EXPECT_EQ(ev[0].value, Scalar(Rational(-1, 2)));
  EXPECT_EQ(ev[1].value, Scalar(3));
  EXPECT_EQ(ev[2].value, Scalar::gaussian(-1, 1));
  EXPECT_EQ(ev[3].value, Scalar::gaussian(-1, -1));
  EXPECT_EQ(ev[4].value, Scalar::gaussian(1, 2));
  EXPECT_EQ(ev[5].value, Scalar::gaussian(1, -2));
}

TEST(Spectral, GaussianRootsWithNonmonicFactor) {
  // 4x^2 + 1 has roots +-i/2.
  Polynomial p({Rational(1, 4), Rational(0), Rational(1)});
  auto ev = eigenvalues(CharPoly{p});
  ASSERT_EQ(ev.size(), 2u);
  EXPECT_EQ(ev[0].value, Scalar::gaussian(0, Rational(1, 2)));
}

TEST(Spectral, IrrationalSpectrumNamesFactor) {
  Matrix a = Matrix::from_rows({{1, 1}, {1, -1}});
  try {
    (void)eigenvalues(char_poly(a));
    FAIL() << "expected IrrationalSpectrum";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kIrrationalSpectrum);
    EXPECT_NE(std::string(e.what()).find("x^2 - 2"), std::string::npos) << e.what();
  }
}

JordanSpec sample_spec() {
  JordanSpec spec;
  spec.real.push_back({Rational(2), {3, 1}});
  spec.real.push_back({Rational(-1), {1, 1}});
  spec.nonreal.push_back({Rational(1, 2), Rational(1), {2}});
  spec.normalize();
  return spec;
}

TEST(Spectral, LayoutOrdersRealThenPaired) {
  JordanSpec spec = sample_spec();
  auto blocks = layout(spec);
  ASSERT_EQ(blocks.size(), 5u);
  EXPECT_EQ(blocks[0].lambda, Scalar(-1));
  EXPECT_EQ(blocks[2].lambda, Scalar(2));
  EXPECT_EQ(blocks[2].size, 3u);
  EXPECT_TRUE(blocks[4].paired);
  EXPECT_EQ(blocks[4].offset, 6u);
  EXPECT_EQ(blocks[4].width(), 4u);
  EXPECT_EQ(spec.dimension(), 10u);
}

TEST(Spectral, RealJordanFormHasRotationTiles) {
  JordanSpec spec;
  spec.nonreal.push_back({Rational(1), Rational(2), {2}});
  Matrix jr = real_jordan_form(spec);
  Matrix expected = Matrix::from_rows({{1, 2, 1, 0}, {-2, 1, 0, 1}, {0, 0, 1, 2}, {0, 0, -2, 1}});
  EXPECT_EQ(jr, expected);
  Matrix j = complex_jordan_form(spec);
  EXPECT_EQ(j(0, 0), Scalar::gaussian(1, 2));
  EXPECT_EQ(j(0, 1), Scalar(1));
  EXPECT_EQ(j(2, 2), Scalar::gaussian(1, -2));
}

TEST(Spectral, JordanStructureRoundTrip) {
  Rng rng(99);
  JordanSpec spec = sample_spec();
  for (int trial = 0; trial < 5; ++trial) {
    Matrix t = random_invertible_integer(rng, spec.dimension(), 2);
    Matrix a = t * real_jordan_form(spec) * inverse(t);
    EXPECT_EQ(jordan_structure(a), spec);
  }
}

TEST(Spectral, ChainsSatisfyJordanRelations) {
  Rng rng(7);
  JordanSpec spec = sample_spec();
  Matrix t = random_invertible_integer(rng, spec.dimension(), 2);
  Matrix a = t * real_jordan_form(spec) * inverse(t);
  JordanChainSet set = jordan_chains(a, spec);
  for (const auto& chain : set.chains) {
    Matrix shiftedA = shifted(a, chain.lambda);
    EXPECT_TRUE(is_zero(shiftedA * chain.vectors[0]));
    for (std::size_t k = 1; k < chain.vectors.size(); ++k) {
      EXPECT_EQ(shiftedA * chain.vectors[k], chain.vectors[k - 1]);
    }
  }
  Matrix basis = set.basis(spec.dimension());
  ASSERT_TRUE(is_invertible(basis));
  EXPECT_EQ(inverse(basis) * a * basis, complex_jordan_form(spec));
}

}  // namespace
}  // namespace focs
