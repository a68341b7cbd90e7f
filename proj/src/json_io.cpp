#include "focs/json_io.hpp"

#include <algorithm>

#include "focs/error.hpp"

namespace focs {

namespace {

[[noreturn]] void schema_error(const std::string& what) { throw Error(ErrorKind::kParse, what); }

const Json& member(const Json& j, const char* key, const char* context) {
  if (!j.is_object()) schema_error(std::string(context) + ": expected an object");
  auto it = j.find(key);
  if (it == j.end()) schema_error(std::string(context) + ": missing \"" + key + "\"");
  return *it;
}

std::size_t size_value(const Json& j, const char* context) {
  if (!j.is_number_integer() || j.get<long long>() < 1) schema_error(std::string(context) + ": expected a positive integer");
  return j.get<std::size_t>();
}

Rational rational_from_json(const Json& j, const char* context) {
  Scalar s = scalar_from_json(j);
  if (!s.is_rational()) schema_error(std::string(context) + ": expected a rational, got " + s.to_string());
  return s.rational_part();
}

std::vector<std::size_t> sizes_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) schema_error("sizes: expected a nonempty array");
  std::vector<std::size_t> sizes;
  for (const auto& s : j) sizes.push_back(size_value(s, "sizes"));
  std::sort(sizes.begin(), sizes.end(), std::greater<>());
  return sizes;
}

}  // namespace

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    std::size_t line = 1, column = 1;
    std::size_t limit = std::min<std::size_t>(e.byte > 0 ? e.byte - 1 : 0, text.size());
    for (std::size_t k = 0; k < limit; ++k) {
      if (text[k] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw Error(ErrorKind::kParse, "malformed JSON at line " + std::to_string(line) + ", column " +
                                       std::to_string(column) + ": " + e.what());
  }
}

Json scalar_to_json(const Scalar& x) { return x.to_string(); }

Scalar scalar_from_json(const Json& j) {
  if (j.is_string()) return Scalar::parse(j.get<std::string>());
  if (j.is_number_integer()) return Scalar(Rational(j.dump()));
  schema_error("scalar: expected a string or an integer, got " + j.dump());
}

Json matrix_to_json(const Matrix& m) {
  Json entries = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(scalar_to_json(m(i, j)));
    entries.push_back(std::move(row));
  }
  return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}};
}

Matrix matrix_from_json(const Json& j) {
  std::size_t rows = size_value(member(j, "rows", "matrix"), "matrix rows");
  std::size_t cols = size_value(member(j, "cols", "matrix"), "matrix cols");
  const Json& entries = member(j, "entries", "matrix");
  if (!entries.is_array() || entries.size() != rows) schema_error("matrix: entries must have " + std::to_string(rows) + " rows");
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    const Json& row = entries[i];
    if (!row.is_array() || row.size() != cols) {
      schema_error("matrix: row " + std::to_string(i + 1) + " must have " + std::to_string(cols) + " entries");
    }
    for (std::size_t c = 0; c < cols; ++c) m(i, c) = scalar_from_json(row[c]);
  }
  return m;
}

Json spec_to_json(const JordanSpec& spec) {
  Json real = Json::array(), nonreal = Json::array();
  for (const auto& g : spec.real) real.push_back({{"lambda", g.lambda.get_str()}, {"sizes", g.sizes}});
  for (const auto& g : spec.nonreal) {
    nonreal.push_back({{"sigma", g.sigma.get_str()}, {"tau", g.tau.get_str()}, {"sizes", g.sizes}});
  }
  return Json{{"real", std::move(real)}, {"nonreal", std::move(nonreal)}};
}

JordanSpec spec_from_json(const Json& j) {
  if (!j.is_object()) schema_error("spec: expected an object");
  JordanSpec spec;
  if (auto it = j.find("real"); it != j.end()) {
    if (!it->is_array()) schema_error("spec: \"real\" must be an array");
    for (const auto& g : *it) {
      spec.real.push_back({rational_from_json(member(g, "lambda", "real block"), "lambda"),
                           sizes_from_json(member(g, "sizes", "real block"))});
    }
  }
  if (auto it = j.find("nonreal"); it != j.end()) {
    if (!it->is_array()) schema_error("spec: \"nonreal\" must be an array");
    for (const auto& g : *it) {
      Rational tau = rational_from_json(member(g, "tau", "nonreal block"), "tau");
      if (sgn(tau) <= 0) schema_error("spec: tau must be positive");
      spec.nonreal.push_back({rational_from_json(member(g, "sigma", "nonreal block"), "sigma"), tau,
                              sizes_from_json(member(g, "sizes", "nonreal block"))});
    }
  }
  spec.normalize();
  return spec;
}

Json signs_to_json(const SignCharacteristic& signs) {
  Json out = Json::array();
  for (const auto& e : signs) out.push_back({{"lambda", e.lambda.get_str()}, {"size", e.size}, {"eps", e.eps}});
  return out;
}

SignCharacteristic signs_from_json(const Json& j) {
  if (!j.is_array()) schema_error("signs: expected an array");
  SignCharacteristic signs;
  for (const auto& e : j) {
    const Json& eps = member(e, "eps", "sign entry");
    if (!eps.is_number_integer() || (eps.get<int>() != 1 && eps.get<int>() != -1)) schema_error("sign entry: eps must be 1 or -1");
    signs.push_back({rational_from_json(member(e, "lambda", "sign entry"), "lambda"),
                     size_value(member(e, "size", "sign entry"), "size"), eps.get<int>()});
  }
  sort_signs(signs);
  return signs;
}

Json canonical_to_json(const CanonicalPair& pair) {
  Json out{{"kind", pair.kind == PairKind::kReal ? "real" : "complex"},
           {"J", matrix_to_json(pair.J)},
           {"P", matrix_to_json(pair.P)},
           {"basis", matrix_to_json(pair.basis)},
           {"signs", signs_to_json(pair.signs)},
           {"spec", spec_to_json(pair.spec)}};
  if (pair.i_focs) out["gamma"] = "i";
  return out;
}

Json certificate_to_json(const BasisCertificate& cert) {
  Json checks = Json::object();
  for (const auto& [name, ok] : cert.checks) checks[name] = ok;
  Json witness = nullptr;
  if (cert.witness) {
    witness = Json{{"check", cert.witness->check},
                   {"i", cert.witness->i},
                   {"j", cert.witness->j},
                   {"value", scalar_to_json(cert.witness->value)},
                   {"expected", scalar_to_json(cert.witness->expected)}};
  }
  return Json{{"passed", cert.passed()}, {"checks", std::move(checks)}, {"witness", std::move(witness)}};
}

Json analysis_to_json(const Analysis& analysis) {
  Json coefficients = Json::array();
  for (const auto& c : analysis.charpoly.coefficients()) coefficients.push_back(c.get_str());
  Json eigen = Json::array();
  for (const auto& e : analysis.eigenvalues) {
    eigen.push_back({{"lambda", scalar_to_json(e.value)}, {"multiplicity", e.multiplicity}});
  }
  return Json{{"charpoly", {{"coefficients", std::move(coefficients)}, {"text", analysis.charpoly.poly.to_string()}}},
              {"eigenvalues", std::move(eigen)},
              {"spec", spec_to_json(analysis.spec)},
              {"signs", signs_to_json(analysis.signs)}};
}

std::pair<Matrix, Matrix> pair_from_json(const Json& j) {
  return {matrix_from_json(member(j, "A", "pair")), matrix_from_json(member(j, "H", "pair"))};
}

Json pair_to_json(const Matrix& a, const Matrix& h) { return Json{{"A", matrix_to_json(a)}, {"H", matrix_to_json(h)}}; }

GeneratorRecipe recipe_from_json(const Json& j, std::uint64_t seed, int bound) {
  GeneratorRecipe recipe;
  recipe.spec = spec_from_json(j);
  recipe.seed = seed;
  recipe.entry_bound = bound;
  if (auto it = j.find("signs"); it != j.end()) {
    recipe.signs = signs_from_json(*it);
  } else {
    for (const auto& g : recipe.spec.real)
      for (auto s : g.sizes) recipe.signs.push_back({g.lambda, s, 1});
  }
  return recipe;
}

Json generated_to_json(const GeneratorRecipe& recipe, const GeneratedPair& pair) {
  return Json{{"A", matrix_to_json(pair.A)},
              {"H", matrix_to_json(pair.H)},
              {"ground_truth", canonical_to_json(pair.ground_truth)},
              {"recipe",
               {{"spec", spec_to_json(pair.ground_truth.spec)},
                {"signs", signs_to_json(pair.ground_truth.signs)},
                {"seed", recipe.seed},
                {"bound", recipe.entry_bound},
                {"prng", "xoshiro256** seeded via splitmix64"}}}};
}

}  // namespace focs
