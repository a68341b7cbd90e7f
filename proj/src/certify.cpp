#include "focs/certify.hpp"

#include <string>
#include <vector>

#include "focs/error.hpp"

namespace focs {

VerifyMode parse_verify_mode(std::string_view text) {
  if (text == "fo") return VerifyMode::kFo;
  if (text == "cs") return VerifyMode::kCs;
  if (text == "focs") return VerifyMode::kFocs;
  if (text == "affiliation") return VerifyMode::kAffiliation;
  throw Error(ErrorKind::kInvalidArgument, "unknown verify mode '" + std::string(text) + "'");
}

Scalar default_gamma(VerifyMode mode) { return mode == VerifyMode::kFocs ? Scalar::i() : Scalar(1); }

BasisCertificate certify_basis(const Matrix& a, const Matrix& h, const Matrix& basis, VerifyMode mode,
                               std::optional<Scalar> gamma) {
  if (!a.is_square() || !h.is_square() || a.rows() != h.rows() || basis.rows() != a.rows() ||
      basis.cols() != a.rows()) {
    throw Error(ErrorKind::kDimensionMismatch, "A, H and the basis must be square of the same size");
  }
  BasisCertificate cert;
  CheckResult hermitian = compare_entries("hermitian", h, h.conj_transpose());
  cert.record("hermitian", hermitian);
  if (!hermitian.passed) return cert;
  cert.record("selfadjoint", is_h_selfadjoint(a, h));

  JordanSpec spec = jordan_structure(a);
  // A real basis can only carry nonreal eigenvalues through the real form.
  bool realified = mode != VerifyMode::kFocs && basis.is_real() && !spec.nonreal.empty();
  Matrix j = realified ? real_jordan_form(spec) : complex_jordan_form(spec);
  Matrix gram = basis.conj_transpose() * h * basis;

  std::vector<SipBlock> blocks;
  std::vector<PairedRange> ranges;
  CheckResult sip;
  for (const auto& b : layout(spec)) {
    if (b.paired) {
      blocks.push_back({2 * b.size, 1});
      ranges.push_back({b.offset, b.size});
      continue;
    }
    const Scalar& corner = gram(b.offset, b.offset + b.size - 1);
    int sign = 1;
    if (corner == Scalar(-1)) {
      sign = -1;
    } else if (!(corner == Scalar(1)) && sip.passed) {
      sip = {false, Witness{"sip", b.offset + 1, b.offset + b.size, corner, Scalar(1)}};
    }
    blocks.push_back({b.size, sign});
  }

  Matrix target(a.rows(), a.rows());
  for (std::size_t k = 0, offset = 0; k < blocks.size(); offset += blocks[k].size, ++k) {
    for (std::size_t r = 0; r < blocks[k].size; ++r) target(offset + r, offset + blocks[k].size - 1 - r) = blocks[k].sign;
  }

  Scalar g = gamma.value_or(default_gamma(mode));
  switch (mode) {
    case VerifyMode::kAffiliation:
      cert.record("sip", sip);
      cert.record("affiliation", check_affiliation(a, h, j, target, basis));
      break;
    case VerifyMode::kFo:
      cert.record("sip", sip);
      cert.record("fo", is_flipped_orthogonal(basis, h, blocks));
      cert.record("affiliation", check_affiliation(a, h, j, target, basis));
      break;
    case VerifyMode::kCs:
      cert.record("cs", is_gamma_cs(basis, ranges, g));
      cert.record("affiliation", check_affiliation(a, h, j, gram, basis));
      break;
    case VerifyMode::kFocs: {
      cert.record("sip", sip);
      CheckResult fo = is_flipped_orthogonal(basis, h, blocks);
      CheckResult cs = is_gamma_cs(basis, ranges, g);
      cert.record("fo", fo);
      cert.record("cs", cs);
      cert.record("affiliation", check_affiliation(a, h, j, target, basis));
      cert.record("focs", CheckResult{fo.passed && cs.passed, std::nullopt});
      break;
    }
  }
  return cert;
}

}  // namespace focs

namespace focs {

Analysis analyze_pair(const Matrix& a, const Matrix& h) {
  validate_pair(a, h);
  Analysis out;
  out.charpoly = char_poly(a);
  out.eigenvalues = eigenvalues(out.charpoly);
  out.spec = jordan_structure(a);
  out.signs = sign_characteristic(a, h);
  return out;
}

}  // namespace focs
