#include <gtest/gtest.h>

#include <string>

#include "focs/focs.h"
#include "json.hpp"

namespace {

const char* kExamplePair = R"({
  "A": {"rows": 4, "cols": 4, "entries": [[0,1,0,0],[0,0,1,0],[0,0,0,1],[-1,0,-2,0]]},
  "H": {"rows": 4, "cols": 4, "entries": [[0,2,0,1],[2,0,1,0],[0,1,0,0],[1,0,0,0]]}
})";

std::string take(char* s) {
  std::string out = s ? s : "";
  focs_string_free(s);
  return out;
}

TEST(CApi, MatrixHandle) {
  focs_matrix* m = nullptr;
  ASSERT_EQ(focs_matrix_from_json(R"({"rows":1,"cols":2,"entries":[["1/2 r2", "i"]]})", &m), FOCS_OK);
  EXPECT_EQ(focs_matrix_rows(m), 1u);
  EXPECT_EQ(focs_matrix_cols(m), 2u);
  char* entry = nullptr;
  ASSERT_EQ(focs_matrix_entry(m, 0, 1, &entry), FOCS_OK);
  EXPECT_EQ(take(entry), "i");
  EXPECT_EQ(focs_matrix_entry(m, 3, 0, &entry), FOCS_ERR_DIMENSION_MISMATCH);
  focs_matrix_free(m);
}

TEST(CApi, ParseErrorsSetLastError) {
  focs_pair* pair = nullptr;
  EXPECT_EQ(focs_pair_from_json("{\"A\": ", &pair), FOCS_ERR_PARSE);
  EXPECT_EQ(pair, nullptr);
  EXPECT_NE(std::string(focs_last_error()).find("line 1"), std::string::npos);
  EXPECT_EQ(focs_pair_from_json(nullptr, &pair), FOCS_ERR_INVALID_ARGUMENT);
  EXPECT_STREQ(focs_status_name(FOCS_ERR_IRRATIONAL_SPECTRUM), "IrrationalSpectrum");
}

TEST(CApi, CanonicalAndVerify) {
  focs_pair* pair = nullptr;
  ASSERT_EQ(focs_pair_from_json(kExamplePair, &pair), FOCS_OK);

  char* analysis = nullptr;
  ASSERT_EQ(focs_analyze(pair, &analysis), FOCS_OK);
  auto j = nlohmann::json::parse(take(analysis));
  EXPECT_EQ(j["spec"]["nonreal"][0]["sizes"][0], 2);

  focs_canonical* n = nullptr;
  ASSERT_EQ(focs_canonical_compute(pair, FOCS_CANONICAL_IFOCS, &n), FOCS_OK);
  char* text = nullptr;
  ASSERT_EQ(focs_canonical_to_json(n, &text), FOCS_OK);
  EXPECT_EQ(nlohmann::json::parse(take(text))["gamma"], "i");

  focs_matrix* basis = nullptr;
  ASSERT_EQ(focs_canonical_basis(n, &basis), FOCS_OK);
  focs_certificate* cert = nullptr;
  ASSERT_EQ(focs_verify(pair, basis, FOCS_MODE_FOCS, nullptr, &cert), FOCS_OK);
  EXPECT_EQ(focs_certificate_passed(cert), 1);
  focs_certificate_free(cert);
  ASSERT_EQ(focs_verify(pair, basis, FOCS_MODE_CS, "1", &cert), FOCS_OK);
  EXPECT_EQ(focs_certificate_passed(cert), 0);
  ASSERT_EQ(focs_certificate_to_json(cert, &text), FOCS_OK);
  EXPECT_EQ(nlohmann::json::parse(take(text))["witness"]["check"], "cs");
  focs_certificate_free(cert);
  EXPECT_EQ(focs_verify(pair, basis, FOCS_MODE_CS, "0", &cert), FOCS_ERR_BAD_GAMMA);

  focs_matrix_free(basis);
  focs_canonical_free(n);
  focs_pair_free(pair);
}

TEST(CApi, MathErrorsMapToStatus) {
  focs_pair* pair = nullptr;
  ASSERT_EQ(focs_pair_from_json(R"({"A":{"rows":2,"cols":2,"entries":[[1,1],[1,-1]]},
                                    "H":{"rows":2,"cols":2,"entries":[[1,0],[0,1]]}})",
                                &pair),
            FOCS_OK);
  focs_canonical* c = nullptr;
  EXPECT_EQ(focs_canonical_compute(pair, FOCS_CANONICAL_FO, &c), FOCS_ERR_IRRATIONAL_SPECTRUM);
  EXPECT_NE(std::string(focs_last_error()).find("x^2 - 2"), std::string::npos);
  focs_pair_free(pair);

  ASSERT_EQ(focs_pair_from_json(R"({"A":{"rows":2,"cols":2,"entries":[[0,1],[0,0]]},
                                    "H":{"rows":2,"cols":2,"entries":[[1,0],[0,1]]}})",
                                &pair),
            FOCS_OK);
  char* out = nullptr;
  EXPECT_EQ(focs_analyze(pair, &out), FOCS_ERR_NOT_SELFADJOINT);
  focs_pair_free(pair);
}

TEST(CApi, GenerateIsDeterministic) {
  const char* spec = R"({"real":[{"lambda":"1","sizes":[2]}],"signs":[{"lambda":"1","size":2,"eps":-1}]})";
  char* first = nullptr;
  char* second = nullptr;
  ASSERT_EQ(focs_generate(spec, 7, 3, &first), FOCS_OK);
  ASSERT_EQ(focs_generate(spec, 7, 3, &second), FOCS_OK);
  EXPECT_EQ(take(first), take(second));
  EXPECT_EQ(focs_generate(R"({"real":[{"lambda":"1","sizes":[2]}],"signs":[]})", 7, 3, &first),
            FOCS_ERR_BAD_SIGNATURE);
}

TEST(CApi, Selftest) {
  char* out = nullptr;
  int ok = 0;
  ASSERT_EQ(focs_selftest(&out, &ok), FOCS_OK);
  EXPECT_EQ(ok, 1);
  EXPECT_TRUE(nlohmann::json::parse(take(out))["passed"].get<bool>());
}

}  // namespace
