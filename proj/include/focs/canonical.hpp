#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "focs/matrix.hpp"
#include "focs/spectral.hpp"

namespace focs {

/// Sign attached to one Jordan block at a real eigenvalue.
struct SignEntry {
  Rational lambda;
  std::size_t size = 0;
  int eps = 1;
  friend bool operator==(const SignEntry&, const SignEntry&) = default;
};

/// Sorted by (lambda ascending, size descending, eps descending).
using SignCharacteristic = std::vector<SignEntry>;

void sort_signs(SignCharacteristic& signs);

enum class PairKind { kComplex, kReal };

/// (J, P) together with the basis realizing (A, H) -> (J, P):
/// basis^-1 A basis = J and basis^* H basis = P.
struct CanonicalPair {
  PairKind kind = PairKind::kComplex;
  Matrix J;
  Matrix P;
  Matrix basis;
  SignCharacteristic signs;
  JordanSpec spec;
  /// Set for the output of focs_basis: the basis is also i-conjugate symmetric.
  bool i_focs = false;
};

/// Block-diagonal eps_k * (flip identity) blocks. Throws kBadSignature on a
/// length mismatch or a sign outside {+1, -1}.
Matrix build_sip(std::span<const std::size_t> sizes, std::span<const int> signs);

/// The sip P of the canonical pair for this layout: real blocks carry the
/// signs (matched by lambda and size, in order), paired blocks carry +1 on 2p.
Matrix canonical_sip(const JordanSpec& spec, const SignCharacteristic& signs);

/// Block-diagonal S: identity on real blocks, the explicit unitary S_j on each
/// paired block. Satisfies J S = S J_R and S^* P S = P.
Matrix build_S(const JordanSpec& spec);
Matrix build_S_inv(const JordanSpec& spec);

/// Throws kNotHermitian, kSingular, kInvalidArgument (non-real input) or
/// kNotSelfadjoint as appropriate.
void validate_pair(const Matrix& a, const Matrix& h);

/// Flipped-orthogonal pair; paired blocks use the gamma = 1 conjugate pairing.
CanonicalPair fo_canonical(const Matrix& a, const Matrix& h);
SignCharacteristic sign_characteristic(const Matrix& a, const Matrix& h);
/// Real pair (J_R, P) with a real basis R.
CanonicalPair real_canonical(const Matrix& a, const Matrix& h);
/// N = R S: flipped orthogonal and i-conjugate symmetric.
CanonicalPair focs_basis(const Matrix& a, const Matrix& h);

}  // namespace focs
