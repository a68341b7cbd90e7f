#pragma once

#include <optional>
#include <string_view>

#include "focs/canonical.hpp"
#include "focs/matrix.hpp"
#include "focs/spectral.hpp"
#include "focs/verify.hpp"

namespace focs {

enum class VerifyMode { kFo, kCs, kFocs, kAffiliation };

/// Parses "fo", "cs", "focs" or "affiliation"; throws kInvalidArgument otherwise.
VerifyMode parse_verify_mode(std::string_view text);

/// Default gamma per mode: 1 for cs, i for focs.
Scalar default_gamma(VerifyMode mode);

/// Certifies a user-supplied basis of (A, H) against the canonical layout of A.
///
/// The Jordan form J comes from the exact spectrum of A; block signs are read
/// off the corners of basis^* H basis (the sign characteristic is basis
/// independent, so a flipped-orthogonal basis must show +1 or -1 there).
/// A real basis is checked against J_R when A has nonreal eigenvalues,
/// except in focs mode.
/// Check order per mode:
///   affiliation: hermitian, selfadjoint, sip, affiliation
///   fo:          hermitian, selfadjoint, sip, fo, affiliation
///   cs:          hermitian, selfadjoint, cs, affiliation (against G = basis^* H basis)
///   focs:        hermitian, selfadjoint, sip, fo, cs, affiliation, focs
BasisCertificate certify_basis(const Matrix& a, const Matrix& h, const Matrix& basis, VerifyMode mode,
                               std::optional<Scalar> gamma = std::nullopt);

}  // namespace focs

namespace focs {

struct Analysis {
  CharPoly charpoly;
  std::vector<Eigenvalue> eigenvalues;
  JordanSpec spec;
  SignCharacteristic signs;
};

/// Validates (A, H) and reports spectrum, Jordan structure and sign characteristic.
Analysis analyze_pair(const Matrix& a, const Matrix& h);

}  // namespace focs
