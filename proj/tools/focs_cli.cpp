// focs: command-line front end over the C interface of libfocs.
#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "focs/focs.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitError = 2;

struct Failure {
  focs_status status;
  std::string message;
};

struct StringDeleter {
  void operator()(char* s) const { focs_string_free(s); }
};
using OwnedString = std::unique_ptr<char, StringDeleter>;

struct PairDeleter {
  void operator()(focs_pair* p) const { focs_pair_free(p); }
};
struct MatrixDeleter {
  void operator()(focs_matrix* m) const { focs_matrix_free(m); }
};
struct CanonicalDeleter {
  void operator()(focs_canonical* c) const { focs_canonical_free(c); }
};
struct CertificateDeleter {
  void operator()(focs_certificate* c) const { focs_certificate_free(c); }
};

void check(focs_status status) {
  if (status != FOCS_OK) throw Failure{status, focs_last_error()};
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Failure{FOCS_ERR_IO, "cannot open " + path};
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void emit(const char* json, const std::string& output) {
  if (output.empty()) {
    std::cout << json << '\n';
    return;
  }
  std::ofstream out(output, std::ios::binary);
  if (!out) throw Failure{FOCS_ERR_IO, "cannot write " + output};
  out << json << '\n';
}

std::unique_ptr<focs_pair, PairDeleter> load_pair(const std::string& path) {
  std::string text = read_file(path);
  focs_pair* pair = nullptr;
  check(focs_pair_from_json(text.c_str(), &pair));
  return std::unique_ptr<focs_pair, PairDeleter>(pair);
}

int run_analyze(const std::string& pair_path, const std::string& output) {
  auto pair = load_pair(pair_path);
  char* json = nullptr;
  check(focs_analyze(pair.get(), &json));
  OwnedString owned(json);
  emit(json, output);
  return kExitOk;
}

int run_canonical(const std::string& pair_path, focs_canonical_kind kind, const std::string& output) {
  auto pair = load_pair(pair_path);
  focs_canonical* raw = nullptr;
  check(focs_canonical_compute(pair.get(), kind, &raw));
  std::unique_ptr<focs_canonical, CanonicalDeleter> canonical(raw);
  char* json = nullptr;
  check(focs_canonical_to_json(canonical.get(), &json));
  OwnedString owned(json);
  emit(json, output);
  return kExitOk;
}

int run_verify(const std::string& pair_path, const std::string& basis_path, const std::string& mode,
               const std::optional<std::string>& gamma, const std::string& output) {
  focs_verify_mode m = mode == "fo"            ? FOCS_MODE_FO
                       : mode == "cs"          ? FOCS_MODE_CS
                       : mode == "focs"        ? FOCS_MODE_FOCS
                                               : FOCS_MODE_AFFILIATION;
  auto pair = load_pair(pair_path);
  std::string basis_text = read_file(basis_path);
  focs_matrix* raw_basis = nullptr;
  check(focs_matrix_from_json(basis_text.c_str(), &raw_basis));
  std::unique_ptr<focs_matrix, MatrixDeleter> basis(raw_basis);
  focs_certificate* raw_cert = nullptr;
  check(focs_verify(pair.get(), basis.get(), m, gamma ? gamma->c_str() : nullptr, &raw_cert));
  std::unique_ptr<focs_certificate, CertificateDeleter> cert(raw_cert);
  char* json = nullptr;
  check(focs_certificate_to_json(cert.get(), &json));
  OwnedString owned(json);
  emit(json, output);
  return focs_certificate_passed(cert.get()) ? kExitOk : kExitFailed;
}

int run_generate(const std::string& spec_path, std::uint64_t seed, int bound, const std::string& output) {
  std::string text = read_file(spec_path);
  char* json = nullptr;
  check(focs_generate(text.c_str(), seed, bound, &json));
  OwnedString owned(json);
  emit(json, output);
  return kExitOk;
}

int run_selftest(const std::string& output) {
  char* json = nullptr;
  int all_passed = 0;
  check(focs_selftest(&json, &all_passed));
  OwnedString owned(json);
  emit(json, output);
  return all_passed ? kExitOk : kExitFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact FO, gamma-CS and i-FOCS Jordan bases for real H-selfadjoint matrices", "focs"};
  app.require_subcommand(1);

  std::string output;
  std::string pair_path, basis_path, spec_path, mode;
  std::optional<std::string> gamma;
  std::uint64_t seed = 0;
  int bound = 3;

  auto add_output = [&](CLI::App* sub) { sub->add_option("--output,-o", output, "Write the JSON result to a file"); };

  auto* analyze = app.add_subcommand("analyze", "Spectrum, Jordan structure and sign characteristic");
  analyze->add_option("pair", pair_path, "Pair file {\"A\", \"H\"}")->required();
  add_output(analyze);

  auto* focs_cmd = app.add_subcommand("focs", "i-FOCS basis N with complex J and P");
  focs_cmd->add_option("pair", pair_path, "Pair file {\"A\", \"H\"}")->required();
  add_output(focs_cmd);

  auto* realform = app.add_subcommand("realform", "Real canonical basis R with J_R and P");
  realform->add_option("pair", pair_path, "Pair file {\"A\", \"H\"}")->required();
  add_output(realform);

  auto* verify = app.add_subcommand("verify", "Certify a basis for a pair");
  verify->add_option("pair", pair_path, "Pair file {\"A\", \"H\"}")->required();
  verify->add_option("basis", basis_path, "Basis matrix file")->required();
  verify->add_option("--mode", mode, "Check to run")
      ->required()
      ->check(CLI::IsMember({"fo", "cs", "focs", "affiliation"}));
  verify->add_option("--gamma", gamma, "Conjugate-symmetry factor (default 1 for cs, i for focs)");
  add_output(verify);

  auto* generate = app.add_subcommand("generate", "Generate a pair from prescribed canonical data");
  generate->add_option("--spec", spec_path, "JordanSpec file, optionally with \"signs\"")->required();
  generate->add_option("--seed", seed, "PRNG seed")->required();
  generate->add_option("--bound", bound, "Entry bound for the random basis")->check(CLI::Range(1, 1000));
  add_output(generate);

  auto* selftest = app.add_subcommand("selftest", "Run the built-in golden checks");
  add_output(selftest);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitError;
  }

  try {
    if (*analyze) return run_analyze(pair_path, output);
    if (*focs_cmd) return run_canonical(pair_path, FOCS_CANONICAL_IFOCS, output);
    if (*realform) return run_canonical(pair_path, FOCS_CANONICAL_REAL, output);
    if (*verify) return run_verify(pair_path, basis_path, mode, gamma, output);
    if (*generate) return run_generate(spec_path, seed, bound, output);
    if (*selftest) return run_selftest(output);
  } catch (const Failure& f) {
    std::cerr << "focs: " << focs_status_name(f.status) << ": " << f.message << '\n';
    return kExitError;
  }
  return kExitError;
}
