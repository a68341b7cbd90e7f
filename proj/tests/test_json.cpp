#include <gtest/gtest.h>

#include "focs/error.hpp"
#include "focs/golden.hpp"
#include "focs/json_io.hpp"

namespace focs {
namespace {

TEST(Json, MatrixRoundTrip) {
  Matrix m = golden::example_M();
  EXPECT_EQ(matrix_from_json(parse_json(matrix_to_json(m).dump())), m);
}

TEST(Json, MatrixAcceptsIntegers) {
  Matrix m = matrix_from_json(parse_json(R"({"rows":1,"cols":2,"entries":[[1,"-1/2 i"]]})"));
  EXPECT_EQ(m, Matrix::from_rows({{1, Scalar::gaussian(0, Rational(-1, 2))}}));
}

TEST(Json, MatrixSchemaErrors) {
  for (const char* bad : {R"({"rows":2,"cols":1,"entries":[[1]]})", R"({"rows":1,"cols":1})",
                          R"({"rows":1,"cols":1,"entries":[[1.5]]})", R"({"rows":0,"cols":1,"entries":[]})",
                          R"([1,2])"}) {
    try {
      (void)matrix_from_json(parse_json(bad));
      ADD_FAILURE() << "accepted " << bad;
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::kParse) << bad;
    }
  }
}

TEST(Json, MalformedTextReportsLineAndColumn) {
  try {
    (void)parse_json("{\n  \"A\": [1,\n  }");
    FAIL() << "expected ParseError";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kParse);
    EXPECT_NE(std::string(e.what()).find("line 3, column 3"), std::string::npos) << e.what();
  }
}

TEST(Json, SpecRoundTripNormalizes) {
  Json j = parse_json(R"({"real":[{"lambda":"2","sizes":[1,3]},{"lambda":"-1","sizes":[2]}],
                          "nonreal":[{"sigma":"1/2","tau":"1","sizes":[1]}]})");
  JordanSpec spec = spec_from_json(j);
  ASSERT_EQ(spec.real.size(), 2u);
  EXPECT_EQ(spec.real[0].lambda, -1);
  EXPECT_EQ(spec.real[1].sizes, (std::vector<std::size_t>{3, 1}));
  EXPECT_EQ(spec_from_json(spec_to_json(spec)), spec);
  EXPECT_THROW((void)spec_from_json(parse_json(R"({"nonreal":[{"sigma":"0","tau":"-1","sizes":[1]}]})")), Error);
}

TEST(Json, RecipeDefaultsSignsToPlusOne) {
  GeneratorRecipe recipe = recipe_from_json(parse_json(R"({"real":[{"lambda":"0","sizes":[2,1]}]})"), 3, 2);
  ASSERT_EQ(recipe.signs.size(), 2u);
  EXPECT_EQ(recipe.signs[0].eps, 1);
  EXPECT_EQ(recipe.seed, 3u);
  EXPECT_EQ(recipe.entry_bound, 2);
}

TEST(Json, CertificateShape) {
  BasisCertificate cert;
  cert.record("fo", CheckResult{false, Witness{"", 2, 4, Scalar(-3) * Scalar::i(), Scalar(0)}});
  Json j = certificate_to_json(cert);
  EXPECT_FALSE(j["passed"].get<bool>());
  EXPECT_FALSE(j["checks"]["fo"].get<bool>());
  EXPECT_EQ(j["witness"]["check"], "fo");
  EXPECT_EQ(j["witness"]["i"], 2);
  EXPECT_EQ(j["witness"]["value"], "-3 i");
}

TEST(Json, AnalysisShape) {
  Json j = analysis_to_json(analyze_pair(golden::example_A(), golden::example_H()));
  EXPECT_EQ(j["charpoly"]["text"], "x^4 + 2 x^2 + 1");
  EXPECT_EQ(j["eigenvalues"][0]["lambda"], "i");
  EXPECT_EQ(j["spec"]["nonreal"][0]["tau"], "1");
  EXPECT_TRUE(j["signs"].empty());
}

}  // namespace
}  // namespace focs
