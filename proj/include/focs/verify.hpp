#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "focs/matrix.hpp"

namespace focs {

/// First violation found, scanning row-major. Indices are 1-based.
struct Witness {
  std::string check;
  std::size_t i = 0;
  std::size_t j = 0;
  Scalar value;     ///< what the candidate actually produced
  Scalar expected;  ///< what the property requires
};

struct CheckResult {
  bool passed = true;
  std::optional<Witness> witness;
};

/// Ordered check results; the witness belongs to the first failing check.
struct BasisCertificate {
  std::vector<std::pair<std::string, bool>> checks;
  std::optional<Witness> witness;

  void record(const std::string& name, const CheckResult& result);
  bool passed() const;
  std::optional<bool> check(const std::string& name) const;
};

/// One sip block of a flipped-orthogonal target.
struct SipBlock {
  std::size_t size = 0;
  int sign = 1;
};

/// Column range of a paired block: columns [start, start + length) hold the
/// chain at lambda, the next `length` columns the chain at conj(lambda).
struct PairedRange {
  std::size_t start = 0;
  std::size_t length = 0;
};

// The predicates below use only products, conjugation and comparison; they
// share no code with the constructions they check.

/// HA = A^* H entrywise. Throws kDimensionMismatch, kNotHermitian or kSingular
/// when H is unusable.
CheckResult is_h_selfadjoint(const Matrix& a, const Matrix& h);

/// A T = T B and T^* H T = G. Throws kSingular if T is not invertible.
CheckResult check_affiliation(const Matrix& a, const Matrix& h, const Matrix& b, const Matrix& g, const Matrix& t);

/// T^* H T equals the sip matrix with the given blocks.
CheckResult is_flipped_orthogonal(const Matrix& t, const Matrix& h, std::span<const SipBlock> blocks);

/// For every paired range the right half equals gamma times the conjugate of
/// the left half. Throws kBadGamma when gamma = 0.
CheckResult is_gamma_cs(const Matrix& n, std::span<const PairedRange> ranges, const Scalar& gamma);

/// First mismatch between two equally sized matrices, row-major.
CheckResult compare_entries(const std::string& check, const Matrix& actual, const Matrix& expected);

}  // namespace focs
