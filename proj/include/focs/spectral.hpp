#pragma once

#include <cstddef>
#include <vector>

#include "focs/matrix.hpp"
#include "focs/polynomial.hpp"

namespace focs {

/// Monic characteristic polynomial det(xI - A).
struct CharPoly {
  Polynomial poly;

  std::size_t degree() const { return poly.degree(); }
  /// Ascending coefficients; the last one is 1.
  const std::vector<Rational>& coefficients() const { return poly.coefficients(); }
  Scalar evaluate(const Scalar& x) const { return poly.evaluate(x); }
};

/// Faddeev-LeVerrier over Q. Requires a square matrix with rational entries.
CharPoly char_poly(const Matrix& a);

struct Eigenvalue {
  Scalar value;  ///< Gaussian rational
  std::size_t multiplicity = 0;
};

/// Full factorization over Q(i). Order: real ascending, then each conjugate pair
/// (sigma + i tau, sigma - i tau) with pairs sorted by (sigma, tau), tau > 0.
/// Throws kIrrationalSpectrum naming a factor with no root in Q(i).
std::vector<Eigenvalue> eigenvalues(const CharPoly& p);

struct RealBlocks {
  Rational lambda;
  std::vector<std::size_t> sizes;  ///< descending
  friend bool operator==(const RealBlocks&, const RealBlocks&) = default;
};

/// Blocks at sigma + i tau (tau > 0); the conjugate blocks are implied.
struct NonrealBlocks {
  Rational sigma;
  Rational tau;
  std::vector<std::size_t> sizes;  ///< descending
  Scalar lambda() const { return Scalar::gaussian(sigma, tau); }
  friend bool operator==(const NonrealBlocks&, const NonrealBlocks&) = default;
};

struct JordanSpec {
  std::vector<RealBlocks> real;
  std::vector<NonrealBlocks> nonreal;

  std::size_t dimension() const;
  /// Sorts groups canonically and sizes descending; merges repeated eigenvalues.
  void normalize();
  friend bool operator==(const JordanSpec&, const JordanSpec&) = default;
};

/// One diagonal block of the canonical layout. A paired block occupies 2*size
/// columns: the chain at lambda followed by the chain at conj(lambda).
struct LayoutBlock {
  bool paired = false;
  Scalar lambda;  ///< for paired blocks the representative with positive imaginary part
  std::size_t size = 0;
  std::size_t offset = 0;
  std::size_t width() const { return paired ? 2 * size : size; }
};

/// Real blocks (by eigenvalue ascending, size descending) followed by the paired blocks.
std::vector<LayoutBlock> layout(const JordanSpec& spec);

/// Single Jordan block J(lambda) of the given size (ones on the superdiagonal).
Matrix jordan_block(const Scalar& lambda, std::size_t size);
/// Complex Jordan form with every paired block laid out as J(lambda) + J(conj lambda).
Matrix complex_jordan_form(const JordanSpec& spec);
/// Real Jordan form: paired blocks become 2x2 [[sigma, tau], [-tau, sigma]] tiles
/// on the diagonal coupled by I_2 on the block superdiagonal.
Matrix real_jordan_form(const JordanSpec& spec);

/// Jordan structure from the exact rank sequence of (A - lambda I)^k.
JordanSpec jordan_structure(const Matrix& a);

struct JordanChain {
  Scalar lambda;
  std::vector<Vector> vectors;  ///< vectors[0] is the eigenvector
};

struct JordanChainSet {
  /// In layout order; a paired block contributes its chain at lambda and then
  /// the entrywise conjugate chain at conj(lambda).
  std::vector<JordanChain> chains;
  /// Columns of all chains, in order.
  Matrix basis(std::size_t n) const;
};

/// Chains for every block of spec at lambda (the top vector has the given length).
std::vector<JordanChain> chains_at(const Matrix& a, const Scalar& lambda, const std::vector<std::size_t>& sizes);

JordanChainSet jordan_chains(const Matrix& a, const JordanSpec& spec);

}  // namespace focs
