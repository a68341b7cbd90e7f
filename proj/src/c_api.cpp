#include "focs/focs.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <new>
#include <string>

#include "focs/canonical.hpp"
#include "focs/certify.hpp"
#include "focs/error.hpp"
#include "focs/golden.hpp"
#include "focs/json_io.hpp"

struct focs_matrix {
  focs::Matrix value;
};

struct focs_pair {
  focs::Matrix a;
  focs::Matrix h;
};

struct focs_canonical {
  focs::CanonicalPair value;
};

struct focs_certificate {
  focs::BasisCertificate value;
};

namespace {

thread_local std::string last_error;

focs_status status_of(focs::ErrorKind kind) {
  using focs::ErrorKind;
  switch (kind) {
    case ErrorKind::kParse: return FOCS_ERR_PARSE;
    case ErrorKind::kDimensionMismatch: return FOCS_ERR_DIMENSION_MISMATCH;
    case ErrorKind::kDivisionByZero: return FOCS_ERR_DIVISION_BY_ZERO;
    case ErrorKind::kSingular: return FOCS_ERR_SINGULAR;
    case ErrorKind::kInconsistent: return FOCS_ERR_INCONSISTENT;
    case ErrorKind::kNotHermitian: return FOCS_ERR_NOT_HERMITIAN;
    case ErrorKind::kNotSelfadjoint: return FOCS_ERR_NOT_SELFADJOINT;
    case ErrorKind::kIrrationalSpectrum: return FOCS_ERR_IRRATIONAL_SPECTRUM;
    case ErrorKind::kNonconstructibleScaling: return FOCS_ERR_NONCONSTRUCTIBLE_SCALING;
    case ErrorKind::kBadSignature: return FOCS_ERR_BAD_SIGNATURE;
    case ErrorKind::kBadGamma: return FOCS_ERR_BAD_GAMMA;
    case ErrorKind::kGeneratorExhausted: return FOCS_ERR_GENERATOR_EXHAUSTED;
    case ErrorKind::kInvalidArgument: return FOCS_ERR_INVALID_ARGUMENT;
    case ErrorKind::kInternalStructureMismatch: return FOCS_ERR_INTERNAL;
  }
  return FOCS_ERR_INTERNAL;
}

// Runs body, translating exceptions into status codes and last_error.
template <typename F>
focs_status guarded(F&& body) {
  try {
    last_error.clear();
    body();
    return FOCS_OK;
  } catch (const focs::Error& e) {
    last_error = e.what();
    return status_of(e.kind());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return FOCS_ERR_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return FOCS_ERR_INTERNAL;
  }
}

char* duplicate(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void require(const void* p, const char* what) {
  if (p == nullptr) throw focs::Error(focs::ErrorKind::kInvalidArgument, std::string(what) + " is NULL");
}

std::string dump(const focs::Json& j) { return j.dump(2); }

}  // namespace

extern "C" {

const char* focs_status_name(focs_status status) {
  switch (status) {
    case FOCS_OK: return "Ok";
    case FOCS_ERR_PARSE: return "ParseError";
    case FOCS_ERR_DIMENSION_MISMATCH: return "DimensionMismatch";
    case FOCS_ERR_DIVISION_BY_ZERO: return "DivisionByZero";
    case FOCS_ERR_SINGULAR: return "Singular";
    case FOCS_ERR_INCONSISTENT: return "Inconsistent";
    case FOCS_ERR_NOT_HERMITIAN: return "NotHermitian";
    case FOCS_ERR_NOT_SELFADJOINT: return "NotSelfadjoint";
    case FOCS_ERR_IRRATIONAL_SPECTRUM: return "IrrationalSpectrum";
    case FOCS_ERR_NONCONSTRUCTIBLE_SCALING: return "NonconstructibleScaling";
    case FOCS_ERR_BAD_SIGNATURE: return "BadSignature";
    case FOCS_ERR_BAD_GAMMA: return "BadGamma";
    case FOCS_ERR_GENERATOR_EXHAUSTED: return "GeneratorExhausted";
    case FOCS_ERR_INVALID_ARGUMENT: return "InvalidArgument";
    case FOCS_ERR_INTERNAL: return "InternalStructureMismatch";
    case FOCS_ERR_IO: return "IoError";
  }
  return "Unknown";
}

const char* focs_last_error(void) { return last_error.c_str(); }

void focs_string_free(char* s) { std::free(s); }

focs_status focs_matrix_from_json(const char* json, focs_matrix** out) {
  return guarded([&] {
    require(json, "json");
    require(out, "out");
    focs::Json doc = focs::parse_json(json);
    if (doc.is_object() && !doc.contains("rows") && doc.contains("basis")) doc = doc["basis"];
    *out = new focs_matrix{focs::matrix_from_json(doc)};
  });
}

focs_status focs_matrix_to_json(const focs_matrix* m, char** out) {
  return guarded([&] {
    require(m, "matrix");
    require(out, "out");
    *out = duplicate(dump(focs::matrix_to_json(m->value)));
  });
}

size_t focs_matrix_rows(const focs_matrix* m) { return m ? m->value.rows() : 0; }
size_t focs_matrix_cols(const focs_matrix* m) { return m ? m->value.cols() : 0; }

focs_status focs_matrix_entry(const focs_matrix* m, size_t i, size_t j, char** out) {
  return guarded([&] {
    require(m, "matrix");
    require(out, "out");
    if (i >= m->value.rows() || j >= m->value.cols()) {
      throw focs::Error(focs::ErrorKind::kDimensionMismatch, "entry index out of range");
    }
    *out = duplicate(m->value(i, j).to_string());
  });
}

void focs_matrix_free(focs_matrix* m) { delete m; }

focs_status focs_pair_from_json(const char* json, focs_pair** out) {
  return guarded([&] {
    require(json, "json");
    require(out, "out");
    auto [a, h] = focs::pair_from_json(focs::parse_json(json));
    *out = new focs_pair{std::move(a), std::move(h)};
  });
}

focs_status focs_pair_from_matrices(const focs_matrix* a, const focs_matrix* h, focs_pair** out) {
  return guarded([&] {
    require(a, "A");
    require(h, "H");
    require(out, "out");
    *out = new focs_pair{a->value, h->value};
  });
}

focs_status focs_pair_to_json(const focs_pair* pair, char** out) {
  return guarded([&] {
    require(pair, "pair");
    require(out, "out");
    *out = duplicate(dump(focs::pair_to_json(pair->a, pair->h)));
  });
}

void focs_pair_free(focs_pair* pair) { delete pair; }

focs_status focs_analyze(const focs_pair* pair, char** out_json) {
  return guarded([&] {
    require(pair, "pair");
    require(out_json, "out");
    *out_json = duplicate(dump(focs::analysis_to_json(focs::analyze_pair(pair->a, pair->h))));
  });
}

focs_status focs_canonical_compute(const focs_pair* pair, focs_canonical_kind kind, focs_canonical** out) {
  return guarded([&] {
    require(pair, "pair");
    require(out, "out");
    switch (kind) {
      case FOCS_CANONICAL_FO: *out = new focs_canonical{focs::fo_canonical(pair->a, pair->h)}; break;
      case FOCS_CANONICAL_REAL: *out = new focs_canonical{focs::real_canonical(pair->a, pair->h)}; break;
      case FOCS_CANONICAL_IFOCS: *out = new focs_canonical{focs::focs_basis(pair->a, pair->h)}; break;
      default: throw focs::Error(focs::ErrorKind::kInvalidArgument, "unknown canonical kind");
    }
  });
}

focs_status focs_canonical_to_json(const focs_canonical* c, char** out) {
  return guarded([&] {
    require(c, "canonical");
    require(out, "out");
    *out = duplicate(dump(focs::canonical_to_json(c->value)));
  });
}

focs_status focs_canonical_basis(const focs_canonical* c, focs_matrix** out) {
  return guarded([&] {
    require(c, "canonical");
    require(out, "out");
    *out = new focs_matrix{c->value.basis};
  });
}

focs_status focs_canonical_jordan(const focs_canonical* c, focs_matrix** out) {
  return guarded([&] {
    require(c, "canonical");
    require(out, "out");
    *out = new focs_matrix{c->value.J};
  });
}

focs_status focs_canonical_sip(const focs_canonical* c, focs_matrix** out) {
  return guarded([&] {
    require(c, "canonical");
    require(out, "out");
    *out = new focs_matrix{c->value.P};
  });
}

void focs_canonical_free(focs_canonical* c) { delete c; }

focs_status focs_verify(const focs_pair* pair, const focs_matrix* basis, focs_verify_mode mode, const char* gamma,
                        focs_certificate** out) {
  return guarded([&] {
    require(pair, "pair");
    require(basis, "basis");
    require(out, "out");
    focs::VerifyMode m;
    switch (mode) {
      case FOCS_MODE_FO: m = focs::VerifyMode::kFo; break;
      case FOCS_MODE_CS: m = focs::VerifyMode::kCs; break;
      case FOCS_MODE_FOCS: m = focs::VerifyMode::kFocs; break;
      case FOCS_MODE_AFFILIATION: m = focs::VerifyMode::kAffiliation; break;
      default: throw focs::Error(focs::ErrorKind::kInvalidArgument, "unknown verify mode");
    }
    std::optional<focs::Scalar> g;
    if (gamma != nullptr) g = focs::Scalar::parse(gamma);
    *out = new focs_certificate{focs::certify_basis(pair->a, pair->h, basis->value, m, g)};
  });
}

int focs_certificate_passed(const focs_certificate* cert) { return cert && cert->value.passed() ? 1 : 0; }

focs_status focs_certificate_to_json(const focs_certificate* cert, char** out) {
  return guarded([&] {
    require(cert, "certificate");
    require(out, "out");
    *out = duplicate(dump(focs::certificate_to_json(cert->value)));
  });
}

void focs_certificate_free(focs_certificate* cert) { delete cert; }

focs_status focs_generate(const char* spec_json, uint64_t seed, int bound, char** out_json) {
  return guarded([&] {
    require(spec_json, "spec");
    require(out_json, "out");
    focs::GeneratorRecipe recipe = focs::recipe_from_json(focs::parse_json(spec_json), seed, bound);
    *out_json = duplicate(dump(focs::generated_to_json(recipe, focs::generate_pair(recipe))));
  });
}

focs_status focs_selftest(char** out_json, int* all_passed) {
  return guarded([&] {
    require(out_json, "out");
    auto items = focs::golden::run_selftest();
    bool ok = true;
    focs::Json list = focs::Json::array();
    for (const auto& item : items) {
      ok = ok && item.passed;
      focs::Json entry{{"name", item.name}, {"passed", item.passed}};
      if (!item.detail.empty()) entry["detail"] = item.detail;
      list.push_back(std::move(entry));
    }
    if (all_passed != nullptr) *all_passed = ok ? 1 : 0;
    *out_json = duplicate(dump(focs::Json{{"passed", ok}, {"checks", std::move(list)}}));
  });
}

}  // extern "C"
