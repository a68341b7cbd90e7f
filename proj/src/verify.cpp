#include "focs/verify.hpp"

#include <algorithm>

#include "focs/error.hpp"

namespace focs {

void BasisCertificate::record(const std::string& name, const CheckResult& result) {
  checks.emplace_back(name, result.passed);
  if (!result.passed && !witness && result.witness) {
    witness = *result.witness;
    witness->check = name;
  }
}

bool BasisCertificate::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.second; });
}

std::optional<bool> BasisCertificate::check(const std::string& name) const {
  for (const auto& [n, ok] : checks)
    if (n == name) return ok;
  return std::nullopt;
}

CheckResult compare_entries(const std::string& check, const Matrix& actual, const Matrix& expected) {
  if (actual.rows() != expected.rows() || actual.cols() != expected.cols()) {
    throw Error(ErrorKind::kDimensionMismatch, check + ": shapes differ");
  }
  for (std::size_t i = 0; i < actual.rows(); ++i) {
    for (std::size_t j = 0; j < actual.cols(); ++j) {
      if (!(actual(i, j) == expected(i, j))) {
        return {false, Witness{check, i + 1, j + 1, actual(i, j), expected(i, j)}};
      }
    }
  }
  return {};
}

CheckResult is_h_selfadjoint(const Matrix& a, const Matrix& h) {
  if (!h.is_square() || !a.is_square() || a.rows() != h.rows()) {
    throw Error(ErrorKind::kDimensionMismatch, "selfadjointness needs square A and H of equal size");
  }
  if (!h.is_hermitian()) throw Error(ErrorKind::kNotHermitian, "H is not hermitian");
  if (!is_invertible(h)) throw Error(ErrorKind::kSingular, "H is singular (rank " + std::to_string(rank(h)) + ")");
  return compare_entries("selfadjoint", h * a, a.conj_transpose() * h);
}

CheckResult check_affiliation(const Matrix& a, const Matrix& h, const Matrix& b, const Matrix& g, const Matrix& t) {
  if (!is_invertible(t)) {
    throw Error(ErrorKind::kSingular, "basis is singular (rank " + std::to_string(rank(t)) + ")");
  }
  CheckResult similarity = compare_entries("affiliation", a * t, t * b);
  if (!similarity.passed) return similarity;
  return compare_entries("affiliation", t.conj_transpose() * h * t, g);
}

CheckResult is_flipped_orthogonal(const Matrix& t, const Matrix& h, std::span<const SipBlock> blocks) {
  std::size_t n = 0;
  for (const auto& b : blocks) n += b.size;
  if (n != t.cols() || h.rows() != t.rows()) {
    throw Error(ErrorKind::kDimensionMismatch, "flipped-orthogonal check: layout does not match basis");
  }
  Matrix target(n, n);
  std::size_t offset = 0;
  for (const auto& b : blocks) {
    for (std::size_t k = 0; k < b.size; ++k) target(offset + k, offset + b.size - 1 - k) = b.sign;
    offset += b.size;
  }
  return compare_entries("fo", t.conj_transpose() * h * t, target);
}

CheckResult is_gamma_cs(const Matrix& n, std::span<const PairedRange> ranges, const Scalar& gamma) {
  if (gamma.is_zero()) throw Error(ErrorKind::kBadGamma, "gamma must be nonzero");
  for (const auto& r : ranges) {
    if (r.start + 2 * r.length > n.cols()) {
      throw Error(ErrorKind::kDimensionMismatch, "conjugate-symmetry range exceeds basis");
    }
  }
  // Row-major over the right-half columns of all ranges.
  for (std::size_t i = 0; i < n.rows(); ++i) {
    for (const auto& r : ranges) {
      for (std::size_t k = 0; k < r.length; ++k) {
        const Scalar& actual = n(i, r.start + r.length + k);
        Scalar expected = gamma * n(i, r.start + k).conj();
        if (!(actual == expected)) {
          return {false, Witness{"cs", i + 1, r.start + r.length + k + 1, actual, expected}};
        }
      }
    }
  }
  return {};
}

}  // namespace focs
