#pragma once

#include <cstdint>

#include "focs/canonical.hpp"
#include "focs/matrix.hpp"
#include "focs/spectral.hpp"

namespace focs {

/// xoshiro256** (Blackman & Vigna), state expanded from a 64-bit seed with splitmix64.
class Xoshiro256 {
 public:
  explicit Xoshiro256(std::uint64_t seed);

  std::uint64_t next();
  /// Uniform integer in [lo, hi] by rejection sampling (no modulo bias).
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);

 private:
  std::uint64_t s_[4];
};

struct GeneratorRecipe {
  JordanSpec spec;
  SignCharacteristic signs;  ///< one entry per real block
  std::uint64_t seed = 0;
  int entry_bound = 3;
};

struct GeneratedPair {
  Matrix A;
  Matrix H;
  /// Real canonical pair (J_R, P) with basis T: T^-1 A T = J_R, T^T H T = P.
  CanonicalPair ground_truth;
};

/// Throws kGeneratorExhausted after 1000 singular draws.
Matrix random_invertible(Xoshiro256& rng, std::size_t n, int bound);

/// A = T J_R T^-1 and H = T^-T P T^-1 for a random integer T with entries in [-bound, bound].
GeneratedPair generate_pair(const GeneratorRecipe& recipe);

/// Deterministic random recipe of dimension between 1 and max_dimension. Real
/// eigenvalues and (sigma, tau) come from small fixed menus so repeated
/// eigenvalues occur regularly.
GeneratorRecipe random_recipe(std::uint64_t seed, std::size_t max_dimension);

/// (T^-1 A T, T^* H T).
std::pair<Matrix, Matrix> transform_pair(const Matrix& a, const Matrix& h, const Matrix& t);

}  // namespace focs
