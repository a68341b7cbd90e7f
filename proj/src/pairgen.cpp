#include "focs/pairgen.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <string>

#include "focs/error.hpp"

namespace focs {

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

constexpr int kMaxDraws = 1000;

void validate_recipe(const JordanSpec& spec, const SignCharacteristic& signs, int bound) {
  if (bound < 1) throw Error(ErrorKind::kInvalidArgument, "entry bound must be positive");
  if (spec.dimension() == 0) throw Error(ErrorKind::kInvalidArgument, "empty Jordan spec");
  std::map<std::pair<Rational, std::size_t>, int> blocks;
  for (const auto& g : spec.real) {
    for (auto s : g.sizes) {
      if (s == 0) throw Error(ErrorKind::kInvalidArgument, "block size zero");
      ++blocks[{g.lambda, s}];
    }
  }
  for (const auto& g : spec.nonreal) {
    if (sgn(g.tau) <= 0) throw Error(ErrorKind::kInvalidArgument, "nonreal eigenvalues need tau > 0");
    for (auto s : g.sizes)
      if (s == 0) throw Error(ErrorKind::kInvalidArgument, "block size zero");
  }
  for (const auto& e : signs) {
    if (e.eps != 1 && e.eps != -1) throw Error(ErrorKind::kBadSignature, "sign must be +1 or -1");
    auto it = blocks.find({e.lambda, e.size});
    if (it == blocks.end() || it->second == 0) {
      throw Error(ErrorKind::kBadSignature, "sign for (" + e.lambda.get_str() + ", " + std::to_string(e.size) +
                                                ") has no matching real block");
    }
    --it->second;
  }
  for (const auto& [key, left] : blocks) {
    if (left != 0) {
      throw Error(ErrorKind::kBadSignature, "real block (" + key.first.get_str() + ", " +
                                                std::to_string(key.second) + ") has no sign");
    }
  }
}

}  // namespace

Xoshiro256::Xoshiro256(std::uint64_t seed) {
  std::uint64_t state = seed;
  for (auto& s : s_) s = splitmix64(state);
}

std::uint64_t Xoshiro256::next() {
  const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
  const std::uint64_t t = s_[1] << 17;
  s_[2] ^= s_[0];
  s_[3] ^= s_[1];
  s_[1] ^= s_[2];
  s_[0] ^= s_[3];
  s_[2] ^= t;
  s_[3] = rotl(s_[3], 45);
  return result;
}

std::int64_t Xoshiro256::uniform(std::int64_t lo, std::int64_t hi) {
  const std::uint64_t range = static_cast<std::uint64_t>(hi - lo) + 1;
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % range;
  std::uint64_t x;
  do {
    x = next();
  } while (x >= limit);
  return lo + static_cast<std::int64_t>(x % range);
}

Matrix random_invertible(Xoshiro256& rng, std::size_t n, int bound) {
  for (int attempt = 0; attempt < kMaxDraws; ++attempt) {
    Matrix t(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) t(i, j) = Scalar(static_cast<long>(rng.uniform(-bound, bound)));
    if (is_invertible(t)) return t;
  }
  throw Error(ErrorKind::kGeneratorExhausted, "no invertible matrix after " + std::to_string(kMaxDraws) + " draws");
}

GeneratedPair generate_pair(const GeneratorRecipe& recipe) {
  JordanSpec spec = recipe.spec;
  spec.normalize();
  SignCharacteristic signs = recipe.signs;
  validate_recipe(spec, signs, recipe.entry_bound);
  sort_signs(signs);

  Matrix jr = real_jordan_form(spec);
  Matrix p = canonical_sip(spec, signs);
  Xoshiro256 rng(recipe.seed);
  Matrix t = random_invertible(rng, spec.dimension(), recipe.entry_bound);
  Matrix t_inv = inverse(t);

  GeneratedPair out;
  out.A = t * jr * t_inv;
  out.H = t_inv.transpose() * p * t_inv;
  out.ground_truth.kind = PairKind::kReal;
  out.ground_truth.J = std::move(jr);
  out.ground_truth.P = std::move(p);
  out.ground_truth.basis = std::move(t);
  out.ground_truth.signs = std::move(signs);
  out.ground_truth.spec = std::move(spec);
  return out;
}

GeneratorRecipe random_recipe(std::uint64_t seed, std::size_t max_dimension) {
  static const Rational kRealMenu[] = {Rational(-2), Rational(-1), Rational(0), Rational(1), Rational(2), Rational(1, 2)};
  static const Rational kSigmaMenu[] = {Rational(-1), Rational(0), Rational(1), Rational(1, 2)};
  static const Rational kTauMenu[] = {Rational(1), Rational(2), Rational(1, 2)};

  // Independent stream from the one generate_pair draws T from.
  Xoshiro256 rng(seed ^ 0x5eedf0c5a11ce5ULL);
  GeneratorRecipe recipe;
  recipe.seed = seed;
  std::size_t remaining = static_cast<std::size_t>(rng.uniform(1, static_cast<std::int64_t>(std::max<std::size_t>(1, max_dimension))));
  while (remaining > 0) {
    bool nonreal = remaining >= 2 && rng.uniform(0, 1) == 1;
    if (nonreal) {
      std::size_t size = static_cast<std::size_t>(rng.uniform(1, static_cast<std::int64_t>(std::min<std::size_t>(2, remaining / 2))));
      const Rational& sigma = kSigmaMenu[rng.uniform(0, std::size(kSigmaMenu) - 1)];
      const Rational& tau = kTauMenu[rng.uniform(0, std::size(kTauMenu) - 1)];
      recipe.spec.nonreal.push_back({sigma, tau, {size}});
      remaining -= 2 * size;
    } else {
      std::size_t size = static_cast<std::size_t>(rng.uniform(1, static_cast<std::int64_t>(std::min<std::size_t>(3, remaining))));
      const Rational& lambda = kRealMenu[rng.uniform(0, std::size(kRealMenu) - 1)];
      recipe.spec.real.push_back({lambda, {size}});
      recipe.signs.push_back({lambda, size, rng.uniform(0, 1) == 1 ? 1 : -1});
      remaining -= size;
    }
  }
  recipe.spec.normalize();
  sort_signs(recipe.signs);
  return recipe;
}

std::pair<Matrix, Matrix> transform_pair(const Matrix& a, const Matrix& h, const Matrix& t) {
  Matrix t_inv = inverse(t);
  return {t_inv * a * t, t.conj_transpose() * h * t};
}

}  // namespace focs
