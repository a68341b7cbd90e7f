#include "focs/spectral.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <string>

#include "focs/error.hpp"

namespace focs {

namespace {

using RationalMatrix = std::vector<std::vector<Rational>>;

// Trial division is plenty for desk-scale coefficients; refuse anything absurd.
constexpr unsigned long kTrialDivisionLimit = 50'000'000UL;

std::vector<mpz_class> positive_divisors(mpz_class n) {
  n = abs(n);
  if (sgn(n) == 0) return {};
  std::vector<std::pair<mpz_class, unsigned>> factors;
  unsigned long trial = 2;
  while (mpz_class(trial) * trial <= n) {
    if (trial > kTrialDivisionLimit) {
      throw Error(ErrorKind::kInvalidArgument, "characteristic polynomial coefficients too large to factor");
    }
    if (mpz_divisible_ui_p(n.get_mpz_t(), trial)) {
      unsigned count = 0;
      while (mpz_divisible_ui_p(n.get_mpz_t(), trial)) {
        n /= trial;
        ++count;
      }
      factors.emplace_back(mpz_class(trial), count);
    }
    trial += (trial == 2) ? 1 : 2;
  }
  if (n > 1) factors.emplace_back(n, 1);

  std::vector<mpz_class> divisors{1};
  for (const auto& [prime, count] : factors) {
    std::size_t existing = divisors.size();
    mpz_class power = 1;
    for (unsigned k = 0; k < count; ++k) {
      power *= prime;
      for (std::size_t i = 0; i < existing; ++i) divisors.push_back(divisors[i] * power);
    }
  }
  std::sort(divisors.begin(), divisors.end());
  return divisors;
}

Rational evaluate_rational(const Polynomial& p, const Rational& x) {
  Rational acc = 0;
  const auto& c = p.coefficients();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
  return acc;
}

bool divides(const Polynomial& d, const Polynomial& p) { return p.divmod(d).second.is_zero(); }

std::size_t multiplicity_of(const Polynomial& factor, Polynomial p) {
  std::size_t m = 0;
  while (!p.is_zero() && p.degree() >= factor.degree()) {
    auto [q, r] = p.divmod(factor);
    if (!r.is_zero()) break;
    p = std::move(q);
    ++m;
  }
  return m;
}

// x^2 - 2 sigma x + sigma^2 + tau^2.
Polynomial conjugate_pair_factor(const Rational& sigma, const Rational& tau) {
  return Polynomial({sigma * sigma + tau * tau, -2 * sigma, 1});
}

std::vector<Rational> rational_roots(Polynomial& r) {
  std::vector<Rational> roots;
  if (r.degree() >= 1 && sgn(r.coefficient(0)) == 0) {
    roots.push_back(0);
    r = r.divmod(Polynomial::linear(0)).first;
  }
  if (r.degree() == 0) return roots;
  auto z = primitive_integer_coefficients(r);
  auto numerators = positive_divisors(z.front());
  auto denominators = positive_divisors(z.back());
  std::vector<Rational> candidates;
  for (const auto& num : numerators) {
    for (const auto& den : denominators) {
      Rational q(num, den);
      q.canonicalize();
      candidates.push_back(q);
      candidates.push_back(-q);
    }
  }
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
  for (const auto& q : candidates) {
    if (r.degree() == 0) break;
    if (sgn(evaluate_rational(r, q)) == 0) {
      roots.push_back(q);
      r = r.divmod(Polynomial::linear(q)).first;
    }
  }
  return roots;
}

// Quadratic factors q x^2 + b x + s over Z with Gaussian-rational roots.
std::vector<std::pair<Rational, Rational>> conjugate_pairs(Polynomial& r) {
  std::vector<std::pair<Rational, Rational>> pairs;
  if (r.degree() < 2) return pairs;
  auto z = primitive_integer_coefficients(r);
  auto leads = positive_divisors(z.back());
  auto consts = positive_divisors(z.front());
  for (const auto& q : leads) {
    for (const auto& s : consts) {
      if (r.degree() < 2) return pairs;
      mpz_class four_qs = 4 * q * s;
      mpz_class bound;
      mpz_sqrt(bound.get_mpz_t(), four_qs.get_mpz_t());
      for (mpz_class b = -bound; b <= bound; ++b) {
        mpz_class disc = four_qs - b * b;
        if (sgn(disc) <= 0 || !mpz_perfect_square_p(disc.get_mpz_t())) continue;
        Polynomial factor({Rational(s), Rational(b), Rational(q)});
        if (!divides(factor, r)) continue;
        mpz_class root;
        mpz_sqrt(root.get_mpz_t(), disc.get_mpz_t());
        Rational sigma(-b, 2 * q), tau(root, 2 * q);
        sigma.canonicalize();
        tau.canonicalize();
        pairs.emplace_back(sigma, tau);
        r = r.divmod(factor).first;
        if (r.degree() < 2) return pairs;
      }
    }
  }
  return pairs;
}

RationalMatrix to_rational(const Matrix& a) {
  if (!a.is_square()) throw Error(ErrorKind::kDimensionMismatch, "spectral analysis needs a square matrix");
  if (!a.is_rational()) throw Error(ErrorKind::kInvalidArgument, "spectral analysis needs rational entries");
  RationalMatrix m(a.rows(), std::vector<Rational>(a.cols()));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m[i][j] = a(i, j).rational_part();
  return m;
}

std::vector<std::size_t> segre_from_ranks(const std::vector<std::size_t>& ranks) {
  // ranks[k] = rank(N^k); blocks of size >= k number ranks[k-1] - ranks[k].
  std::vector<std::size_t> sizes;
  for (std::size_t k = ranks.size() - 1; k >= 1; --k) {
    std::size_t at_least_k = ranks[k - 1] - ranks[k];
    std::size_t at_least_next = (k + 1 < ranks.size()) ? ranks[k] - ranks[k + 1] : 0;
    for (std::size_t c = at_least_next; c < at_least_k; ++c) sizes.push_back(k);
  }
  return sizes;
}

std::vector<std::size_t> block_sizes_at(const Matrix& a, const Scalar& lambda, std::size_t multiplicity) {
  std::size_t n = a.rows();
  Matrix shift = shifted(a, lambda);
  std::vector<std::size_t> ranks{n};
  Matrix power_k = Matrix::identity(n);
  while (ranks.back() > n - multiplicity) {
    power_k = power_k * shift;
    std::size_t r = rank(power_k);
    if (r == ranks.back()) {
      throw Error(ErrorKind::kInternalStructureMismatch, "rank sequence stalled at eigenvalue " + lambda.to_string());
    }
    ranks.push_back(r);
  }
  auto sizes = segre_from_ranks(ranks);
  std::size_t total = 0;
  for (auto s : sizes) total += s;
  if (total != multiplicity) {
    throw Error(ErrorKind::kInternalStructureMismatch, "block sizes do not add up at eigenvalue " + lambda.to_string());
  }
  return sizes;
}

}  // namespace

CharPoly char_poly(const Matrix& a) {
  RationalMatrix m = to_rational(a);
  std::size_t n = m.size();
  std::vector<Rational> c(n + 1);
  c[n] = 1;
  RationalMatrix prev(n, std::vector<Rational>(n));  // M_0 = 0
  for (std::size_t k = 1; k <= n; ++k) {
    RationalMatrix next(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t l = 0; l < n; ++l) {
        if (sgn(m[i][l]) == 0) continue;
        for (std::size_t j = 0; j < n; ++j) next[i][j] += m[i][l] * prev[l][j];
      }
      next[i][i] += c[n - k + 1];
    }
    Rational trace = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t l = 0; l < n; ++l) trace += m[i][l] * next[l][i];
    c[n - k] = -trace / static_cast<long>(k);
    prev = std::move(next);
  }
  return CharPoly{Polynomial(std::move(c))};
}

std::vector<Eigenvalue> eigenvalues(const CharPoly& p) {
  const Polynomial& full = p.poly;
  if (full.degree() == 0) return {};
  Polynomial squarefree = full.divmod(gcd(full, full.derivative())).first.monic();

  Polynomial rest = squarefree;
  auto reals = rational_roots(rest);
  auto pairs = conjugate_pairs(rest);
  if (rest.degree() > 0) {
    throw Error(ErrorKind::kIrrationalSpectrum,
                "factor " + rest.monic().to_string() + " has no roots in Q(i)");
  }

  std::sort(reals.begin(), reals.end());
  std::sort(pairs.begin(), pairs.end());
  std::vector<Eigenvalue> out;
  for (const auto& r : reals) out.push_back({Scalar(r), multiplicity_of(Polynomial::linear(r), full)});
  for (const auto& [sigma, tau] : pairs) {
    std::size_t m = multiplicity_of(conjugate_pair_factor(sigma, tau), full);
    out.push_back({Scalar::gaussian(sigma, tau), m});
    out.push_back({Scalar::gaussian(sigma, -tau), m});
  }
  return out;
}

std::size_t JordanSpec::dimension() const {
  std::size_t n = 0;
  for (const auto& g : real)
    for (auto s : g.sizes) n += s;
  for (const auto& g : nonreal)
    for (auto s : g.sizes) n += 2 * s;
  return n;
}

void JordanSpec::normalize() {
  std::map<Rational, std::vector<std::size_t>> r;
  for (auto& g : real) r[g.lambda].insert(r[g.lambda].end(), g.sizes.begin(), g.sizes.end());
  std::map<std::pair<Rational, Rational>, std::vector<std::size_t>> c;
  for (auto& g : nonreal) {
    auto& v = c[{g.sigma, g.tau}];
    v.insert(v.end(), g.sizes.begin(), g.sizes.end());
  }
  real.clear();
  nonreal.clear();
  for (auto& [lambda, sizes] : r) {
    std::sort(sizes.begin(), sizes.end(), std::greater<>());
    real.push_back({lambda, sizes});
  }
  for (auto& [key, sizes] : c) {
    std::sort(sizes.begin(), sizes.end(), std::greater<>());
    nonreal.push_back({key.first, key.second, sizes});
  }
}

std::vector<LayoutBlock> layout(const JordanSpec& spec) {
  std::vector<LayoutBlock> blocks;
  std::size_t offset = 0;
  for (const auto& g : spec.real) {
    for (auto s : g.sizes) {
      blocks.push_back({false, Scalar(g.lambda), s, offset});
      offset += s;
    }
  }
  for (const auto& g : spec.nonreal) {
    for (auto s : g.sizes) {
      blocks.push_back({true, g.lambda(), s, offset});
      offset += 2 * s;
    }
  }
  return blocks;
}

Matrix jordan_block(const Scalar& lambda, std::size_t size) {
  Matrix j(size, size);
  for (std::size_t i = 0; i < size; ++i) {
    j(i, i) = lambda;
    if (i + 1 < size) j(i, i + 1) = 1;
  }
  return j;
}

Matrix complex_jordan_form(const JordanSpec& spec) {
  std::vector<Matrix> blocks;
  for (const auto& b : layout(spec)) {
    blocks.push_back(jordan_block(b.lambda, b.size));
    if (b.paired) blocks.push_back(jordan_block(b.lambda.conj(), b.size));
  }
  return direct_sum(blocks);
}

Matrix real_jordan_form(const JordanSpec& spec) {
  std::vector<Matrix> blocks;
  for (const auto& b : layout(spec)) {
    if (!b.paired) {
      blocks.push_back(jordan_block(b.lambda, b.size));
      continue;
    }
    Scalar sigma = b.lambda.real_part(), tau = b.lambda.imag_part();
    Matrix m(2 * b.size, 2 * b.size);
    for (std::size_t k = 0; k < b.size; ++k) {
      m(2 * k, 2 * k) = sigma;
      m(2 * k, 2 * k + 1) = tau;
      m(2 * k + 1, 2 * k) = -tau;
      m(2 * k + 1, 2 * k + 1) = sigma;
      if (k + 1 < b.size) {
        m(2 * k, 2 * k + 2) = 1;
        m(2 * k + 1, 2 * k + 3) = 1;
      }
    }
    blocks.push_back(std::move(m));
  }
  return direct_sum(blocks);
}

JordanSpec jordan_structure(const Matrix& a) {
  auto eigs = eigenvalues(char_poly(a));
  JordanSpec spec;
  for (const auto& e : eigs) {
    if (e.value.is_real()) {
      spec.real.push_back({e.value.rational_part(), block_sizes_at(a, e.value, e.multiplicity)});
    } else if (sgn(e.value.i_part()) > 0) {
      spec.nonreal.push_back({e.value.rational_part(), e.value.i_part(), block_sizes_at(a, e.value, e.multiplicity)});
    }
  }
  return spec;
}

std::vector<JordanChain> chains_at(const Matrix& a, const Scalar& lambda, const std::vector<std::size_t>& sizes) {
  std::size_t n = a.rows();
  Matrix shift = shifted(a, lambda);
  std::vector<JordanChain> chains;
  if (sizes.empty()) return chains;
  std::size_t longest = sizes.front();

  // kernels[s] = pivot-normalized basis of ker N^s.
  std::vector<std::vector<Vector>> kernels(longest + 1);
  Matrix power_s = Matrix::identity(n);
  for (std::size_t s = 1; s <= longest; ++s) {
    power_s = power_s * shift;
    kernels[s] = kernel_basis(power_s);
  }

  for (std::size_t s = longest; s >= 1; --s) {
    std::size_t wanted = static_cast<std::size_t>(std::count(sizes.begin(), sizes.end(), s));
    if (wanted == 0) continue;
    SpanBasis span(n);
    for (const auto& v : kernels[s - 1]) span.insert(v);
    for (const auto& c : chains) span.insert(c.vectors[s - 1]);
    for (const auto& top : kernels[s]) {
      if (wanted == 0) break;
      if (!span.insert(top)) continue;
      JordanChain chain{lambda, std::vector<Vector>(s)};
      chain.vectors[s - 1] = top;
      for (std::size_t k = s - 1; k-- > 0;) chain.vectors[k] = shift * chain.vectors[k + 1];
      chains.push_back(std::move(chain));
      --wanted;
    }
    if (wanted != 0) {
      throw Error(ErrorKind::kInternalStructureMismatch, "could not extract chains of length " + std::to_string(s));
    }
  }
  return chains;
}

JordanChainSet jordan_chains(const Matrix& a, const JordanSpec& spec) {
  JordanChainSet set;
  for (const auto& g : spec.real) {
    auto chains = chains_at(a, Scalar(g.lambda), g.sizes);
    for (auto& c : chains) set.chains.push_back(std::move(c));
  }
  for (const auto& g : spec.nonreal) {
    auto chains = chains_at(a, g.lambda(), g.sizes);
    for (auto& c : chains) {
      JordanChain mirrored{c.lambda.conj(), {}};
      for (const auto& v : c.vectors) mirrored.vectors.push_back(conj(v));
      set.chains.push_back(std::move(c));
      set.chains.push_back(std::move(mirrored));
    }
  }
  return set;
}

Matrix JordanChainSet::basis(std::size_t n) const {
  std::vector<Vector> columns;
  for (const auto& c : chains)
    for (const auto& v : c.vectors) columns.push_back(v);
  return Matrix::from_columns(columns, n);
}

}  // namespace focs
