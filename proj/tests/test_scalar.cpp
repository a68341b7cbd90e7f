#include <gtest/gtest.h>

#include "focs/error.hpp"
#include "focs/scalar.hpp"
#include "support.hpp"

namespace focs {
namespace {

using testing::random_scalar;
using testing::Rng;

TEST(Scalar, UnitsMultiplyAsExpected) {
  EXPECT_EQ(Scalar::i() * Scalar::i(), Scalar(-1));
  EXPECT_EQ(Scalar::sqrt2() * Scalar::sqrt2(), Scalar(2));
  EXPECT_EQ(Scalar::inv_sqrt2() * Scalar::sqrt2(), Scalar(1));
  Scalar i_r2 = Scalar::i() * Scalar::sqrt2();
  EXPECT_EQ(i_r2, Scalar(0, 0, 0, 1));
  EXPECT_EQ(i_r2 * i_r2, Scalar(-2));
}

TEST(Scalar, FieldAxiomsOnRandomValues) {
  Rng rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    Scalar x = random_scalar(rng), y = random_scalar(rng), z = random_scalar(rng);
    EXPECT_EQ(x + y, y + x);
    EXPECT_EQ(x * y, y * x);
    EXPECT_EQ((x * y) * z, x * (y * z));
    EXPECT_EQ(x * (y + z), x * y + x * z);
    EXPECT_EQ((x - y) + y, x);
    EXPECT_EQ((x * y).conj(), x.conj() * y.conj());
    if (!x.is_zero()) {
      EXPECT_EQ(x * x.inverse(), Scalar(1));
      EXPECT_EQ((y / x) * x, y);
    }
  }
}

TEST(Scalar, InverseOfZeroThrows) {
  try {
    (void)Scalar(0).inverse();
    FAIL() << "expected DivisionByZero";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kDivisionByZero);
  }
}

TEST(Scalar, InverseOfKnownValues) {
  // (1 + i)^-1 = (1 - i)/2
  EXPECT_EQ(Scalar::gaussian(1, 1).inverse(), Scalar::gaussian(Rational(1, 2), Rational(-1, 2)));
  // (1 + sqrt2)^-1 = sqrt2 - 1
  EXPECT_EQ(Scalar(1, 1, 0, 0).inverse(), Scalar(-1, 1, 0, 0));
}

TEST(Scalar, PredicatesAndParts) {
  Scalar x(Rational(1, 2), 3, -4, Rational(5, 7));
  EXPECT_FALSE(x.is_real());
  EXPECT_FALSE(x.is_gaussian());
  EXPECT_EQ(x.real_part(), Scalar(Rational(1, 2), 3, 0, 0));
  EXPECT_EQ(x.imag_part(), Scalar(-4, Rational(5, 7), 0, 0));
  EXPECT_EQ(x.real_part() + Scalar::i() * x.imag_part(), x);
  EXPECT_TRUE(Scalar::gaussian(2, 3).is_gaussian());
  EXPECT_TRUE(Scalar(Rational(3, 4)).is_rational());
  EXPECT_TRUE(Scalar::sqrt2().is_real());
  EXPECT_FALSE(Scalar::sqrt2().is_rational());
}

TEST(Scalar, ToStringCanonicalForms) {
  EXPECT_EQ(Scalar(0).to_string(), "0");
  EXPECT_EQ(Scalar(-3).to_string(), "-3");
  EXPECT_EQ((Scalar(-3) * Scalar::i()).to_string(), "-3 i");
  EXPECT_EQ(Scalar::i().to_string(), "i");
  EXPECT_EQ(Scalar::inv_sqrt2().to_string(), "1/2 r2");
  EXPECT_EQ(Scalar(Rational(1, 2), 0, 0, -3).to_string(), "1/2 - 3 i r2");
  EXPECT_EQ(Scalar(1, -1, 1, 1).to_string(), "1 - r2 + i + i r2");
}

TEST(Scalar, ParseAcceptsGrammarVariants) {
  EXPECT_EQ(Scalar::parse("1/2 - 3 i r2"), Scalar(Rational(1, 2), 0, 0, -3));
  EXPECT_EQ(Scalar::parse("  -i  "), -Scalar::i());
  EXPECT_EQ(Scalar::parse("2*r2*i"), Scalar(0, 0, 0, 2));
  EXPECT_EQ(Scalar::parse("r2 i"), Scalar(0, 0, 0, 1));
  EXPECT_EQ(Scalar::parse("3/4"), Scalar(Rational(3, 4)));
  EXPECT_EQ(Scalar::parse("-2/4 r2+1"), Scalar(1, Rational(-1, 2), 0, 0));
}

TEST(Scalar, ParseRoundTripsRandomValues) {
  Rng rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    Scalar x = random_scalar(rng);
    EXPECT_EQ(Scalar::parse(x.to_string()), x) << x.to_string();
  }
}

TEST(Scalar, ParseRejectsGarbage) {
  for (const char* bad : {"", "abc", "1/0", "1 +", "i i", "2 r3", "1//2"}) {
    try {
      (void)Scalar::parse(bad);
      ADD_FAILURE() << "accepted \"" << bad << "\"";
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::kParse) << bad;
    }
  }
}

TEST(Scalar, RealSignHandlesSqrt2) {
  EXPECT_EQ(real_sign(Scalar(0)), 0);
  EXPECT_EQ(real_sign(Scalar(3, -2, 0, 0)), 1);   // 3 - 2.83
  EXPECT_EQ(real_sign(Scalar(-3, 2, 0, 0)), -1);
  EXPECT_EQ(real_sign(Scalar(1, -1, 0, 0)), -1);  // 1 - 1.41
  EXPECT_EQ(real_sign(Scalar(-7, 5, 0, 0)), 1);   // -7 + 7.07
  EXPECT_THROW((void)real_sign(Scalar::i()), Error);
}

TEST(Scalar, ExactSqrtSquaresBack) {
  Rng rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    Scalar x = random_scalar(rng, 3);
    auto r = exact_sqrt(x * x);
    ASSERT_TRUE(r.has_value()) << (x * x).to_string();
    EXPECT_EQ(*r * *r, x * x);
  }
}

TEST(Scalar, ExactSqrtKnownValues) {
  EXPECT_EQ(*exact_sqrt(Scalar(4)) * *exact_sqrt(Scalar(4)), Scalar(4));
  auto root_i = exact_sqrt(Scalar::i());  // (1 + i)/sqrt 2
  ASSERT_TRUE(root_i.has_value());
  EXPECT_EQ(*root_i * *root_i, Scalar::i());
  auto root_two = exact_sqrt(Scalar(2));
  ASSERT_TRUE(root_two.has_value());
  EXPECT_EQ(*root_two * *root_two, Scalar(2));
  auto root_minus_two = exact_sqrt(Scalar(-2));
  ASSERT_TRUE(root_minus_two.has_value());
  EXPECT_EQ(*root_minus_two * *root_minus_two, Scalar(-2));
  EXPECT_FALSE(exact_sqrt(Scalar(3)).has_value());
  EXPECT_FALSE(exact_sqrt(Scalar::sqrt2()).has_value());
}

TEST(Scalar, RationalSqrt) {
  EXPECT_EQ(*rational_sqrt(Rational(9, 4)), Rational(3, 2));
  EXPECT_FALSE(rational_sqrt(Rational(2)).has_value());
  EXPECT_FALSE(rational_sqrt(Rational(-4)).has_value());
}

TEST(Scalar, CanonicalOrderIsLexicographic) {
  EXPECT_TRUE(canonical_less(Scalar(0, 5, 0, 0), Scalar(1)));
  EXPECT_TRUE(canonical_less(Scalar::gaussian(0, -1), Scalar::gaussian(0, 1)));
  EXPECT_FALSE(canonical_less(Scalar(2), Scalar(2)));
}

TEST(Scalar, ErrorNamesAreStable) {
  EXPECT_EQ(error_name(ErrorKind::kIrrationalSpectrum), "IrrationalSpectrum");
  EXPECT_EQ(error_name(ErrorKind::kNotSelfadjoint), "NotSelfadjoint");
  EXPECT_EQ(error_name(ErrorKind::kParse), "ParseError");
}

}  // namespace
}  // namespace focs
