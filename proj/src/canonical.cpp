#include "focs/canonical.hpp"

#include <algorithm>
#include <optional>
#include <string>

#include "focs/error.hpp"
#include "focs/quadratic.hpp"
#include "focs/verify.hpp"

namespace focs {

namespace {

// Symmetric bilinear form x^T H y. For real vectors it is the indefinite inner
// product itself; at a nonreal eigenvalue it pairs the chain at lambda with the
// conjugate chain at conj(lambda), which is what the gamma-pairing needs.
Scalar bilinear(const Matrix& h, const Vector& x, const Vector& y) {
  Vector hy = h * y;
  Scalar s;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!x[i].is_zero() && !hy[i].is_zero()) s += x[i] * hy[i];
  return s;
}

std::vector<Vector> chain_from_top(const Matrix& shift, Vector top, std::size_t length) {
  std::vector<Vector> chain(length);
  chain[length - 1] = std::move(top);
  for (std::size_t k = length - 1; k-- > 0;) chain[k] = shift * chain[k + 1];
  return chain;
}

// Small integer combinations of m same-length tops, after the unit vectors.
std::vector<std::vector<Scalar>> integer_combinations(std::size_t m) {
  std::vector<std::vector<Scalar>> out;
  const std::pair<int, int> pair_weights[] = {{1, 1}, {1, -1}, {1, 2}, {1, -2}, {2, 1}, {2, -1}, {1, 3},
                                              {1, -3}, {3, 1}, {3, -1}, {2, 3}, {2, -3}, {3, 2}, {3, -2}};
  for (auto [wj, wk] : pair_weights) {
    for (std::size_t j = 0; j < m; ++j) {
      for (std::size_t k = j + 1; k < m; ++k) {
        std::vector<Scalar> c(m);
        c[j] = wj;
        c[k] = wk;
        out.push_back(std::move(c));
      }
    }
  }
  if (m >= 3 && m <= 4) {
    constexpr int radius = 2;
    std::vector<int> c(m, -radius);
    while (true) {
      int nonzero = 0, first = 0;
      for (int x : c) {
        if (x != 0) {
          if (nonzero == 0) first = x;
          ++nonzero;
        }
      }
      if (nonzero >= 3 && first > 0) out.emplace_back(c.begin(), c.end());
      std::size_t pos = 0;
      while (pos < m && c[pos] == radius) c[pos++] = -radius;
      if (pos == m) break;
      ++c[pos];
    }
  }
  return out;
}

Scalar form_value(const Matrix& g, const std::vector<Scalar>& x, const std::vector<Scalar>& y) {
  Scalar s;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < y.size(); ++j)
      if (!y[j].is_zero() && !g(i, j).is_zero()) s += x[i] * g(i, j) * y[j];
  }
  return s;
}

std::vector<Scalar> combine(const Scalar& a, const std::vector<Scalar>& x, const Scalar& b,
                            const std::vector<Scalar>& y) {
  std::vector<Scalar> out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = a * x[i] + b * y[i];
  return out;
}

// Tops whose leading value is a signed square, found through a diagonalization
// of the leading form g: diagonal entries first, then hyperbolic planes, then
// (for rational forms) solutions of the Legendre equation on pairs.
std::vector<std::vector<Scalar>> structured_combinations(const Matrix& g, bool real_eigenvalue) {
  std::size_t m = g.rows();
  std::vector<std::vector<Scalar>> remaining;
  for (std::size_t j = 0; j < m; ++j) {
    std::vector<Scalar> e(m);
    e[j] = 1;
    remaining.push_back(std::move(e));
  }
  std::vector<std::pair<std::vector<Scalar>, Scalar>> diagonal;
  while (!remaining.empty()) {
    std::size_t pick = remaining.size();
    for (std::size_t j = 0; j < remaining.size() && pick == remaining.size(); ++j)
      if (!form_value(g, remaining[j], remaining[j]).is_zero()) pick = j;
    if (pick == remaining.size()) {
      for (std::size_t j = 0; j < remaining.size() && pick == remaining.size(); ++j) {
        for (std::size_t k = j + 1; k < remaining.size(); ++k) {
          if (!form_value(g, remaining[j], remaining[k]).is_zero()) {
            remaining[j] = combine(1, remaining[j], 1, remaining[k]);
            pick = j;
            break;
          }
        }
      }
    }
    if (pick == remaining.size()) break;
    std::vector<Scalar> r = remaining[pick];
    remaining.erase(remaining.begin() + static_cast<std::ptrdiff_t>(pick));
    Scalar d = form_value(g, r, r);
    for (auto& s : remaining) s = combine(1, s, -(form_value(g, s, r) / d), r);
    diagonal.emplace_back(std::move(r), std::move(d));
  }

  std::vector<std::vector<Scalar>> out;
  for (const auto& [c, d] : diagonal) out.push_back(c);
  for (std::size_t j = 0; j < diagonal.size(); ++j) {
    for (std::size_t k = j + 1; k < diagonal.size(); ++k) {
      const auto& [cj, dj] = diagonal[j];
      const auto& [ck, dk] = diagonal[k];
      // e isotropic, f0 pairs to 1 with e; e +- f/2 then carry +1 and -1.
      auto alpha = exact_sqrt(-(dk / dj));
      if (alpha && (!real_eigenvalue || alpha->is_real())) {
        std::vector<Scalar> e = combine(*alpha, cj, 1, ck);
        std::vector<Scalar> f0 = combine((*alpha * dj).inverse(), cj, 0, ck);
        std::vector<Scalar> f = combine(1, f0, -(form_value(g, f0, f0) / Scalar(2)), e);
        out.push_back(combine(1, e, Scalar(Rational(1, 2)), f));
        out.push_back(combine(1, e, Scalar(Rational(-1, 2)), f));
      }
      if (real_eigenvalue && dj.is_rational() && dk.is_rational()) {
        for (int target : {1, -1, 2, -2}) {
          auto xy = represent_square_multiple(dj.rational_part(), dk.rational_part(), Rational(target));
          if (xy) out.push_back(combine(Scalar(xy->first), cj, Scalar(xy->second), ck));
        }
      }
    }
  }
  return out;
}

std::vector<Scalar> series_inverse(const std::vector<Scalar>& u) {
  std::vector<Scalar> w(u.size());
  Scalar u0_inv = u[0].inverse();
  w[0] = u0_inv;
  for (std::size_t k = 1; k < u.size(); ++k) {
    Scalar acc;
    for (std::size_t j = 1; j <= k; ++j) acc += u[j] * w[k - j];
    w[k] = -acc * u0_inv;
  }
  return w;
}

std::vector<Scalar> series_sqrt(const std::vector<Scalar>& w, const Scalar& f0) {
  std::vector<Scalar> f(w.size());
  f[0] = f0;
  Scalar half_inv = (Scalar(2) * f0).inverse();
  for (std::size_t k = 1; k < w.size(); ++k) {
    Scalar acc = w[k];
    for (std::size_t j = 1; j < k; ++j) acc -= f[j] * f[k - j];
    f[k] = acc * half_inv;
  }
  return f;
}

struct NormalizedBlock {
  std::vector<Vector> chain;
  int eps = 1;
};

// Reduces the chains at one eigenvalue to sip form under x^T H y: each block's
// Gram matrix becomes eps * flip, and distinct blocks become orthogonal.
// Real eigenvalues yield the sign characteristic; nonreal ones are scaled to +1.
// Normalizes the cyclic space generated by v: the returned chain has Gram
// kappa * flip under x^T H y. Fails when the leading value has no usable root.
std::optional<NormalizedBlock> normalized_chain(const Matrix& shift, const Matrix& h, const Vector& v, std::size_t p,
                                                bool real_eigenvalue, Scalar& leading) {
  std::vector<Vector> orbit{v};
  for (std::size_t k = 1; k < p; ++k) orbit.push_back(shift * orbit.back());
  leading = bilinear(h, orbit[p - 1], v);
  if (leading.is_zero()) return std::nullopt;

  int kappa = real_eigenvalue ? real_sign(leading) : 1;
  auto root = exact_sqrt(Scalar(kappa) * leading);
  if (!root || (real_eigenvalue && !root->is_real())) return std::nullopt;

  // Gram of the cyclic space is a polynomial in N; choose f with
  // f^2 * u = kappa mod x^p so that [N^j f(N) v, f(N) v] = kappa * delta_{j, p-1}.
  std::vector<Scalar> u(p);
  for (std::size_t j = 0; j < p; ++j) u[j] = bilinear(h, orbit[p - 1 - j], v);
  std::vector<Scalar> w = series_inverse(u);
  for (auto& x : w) x = Scalar(kappa) * x;
  std::vector<Scalar> f = series_sqrt(w, Scalar(kappa) * root->inverse());

  Vector top(v.size());
  for (std::size_t k = 0; k < p; ++k)
    if (!f[k].is_zero()) top = top + f[k] * orbit[k];
  std::vector<Vector> chain = chain_from_top(shift, std::move(top), p);

  for (std::size_t i = 0; i < p; ++i) {
    for (std::size_t j = 0; j < p; ++j) {
      Scalar expected = (i + j == p - 1) ? Scalar(kappa) : Scalar(0);
      if (!(bilinear(h, chain[i], chain[j]) == expected)) {
        throw Error(ErrorKind::kInternalStructureMismatch, "normalized chain Gram is not sip");
      }
    }
  }
  return NormalizedBlock{std::move(chain), kappa};
}

// Reduces the chains at one eigenvalue to sip form under x^T H y: each block's
// Gram matrix becomes eps * flip, and distinct blocks become orthogonal.
// Real eigenvalues yield the sign characteristic; nonreal ones are scaled to +1.
std::vector<NormalizedBlock> normalize_group(const Matrix& a, const Matrix& h, const Scalar& lambda,
                                             std::vector<JordanChain> chains, bool real_eigenvalue) {
  Matrix shift = shifted(a, lambda);
  std::vector<NormalizedBlock> result;

  while (!chains.empty()) {
    std::size_t p = chains.front().vectors.size();
    std::size_t m = 0;
    while (m < chains.size() && chains[m].vectors.size() == p) ++m;

    std::vector<Vector> tops;
    for (std::size_t j = 0; j < m; ++j) tops.push_back(chains[j].vectors[p - 1]);
    auto top_of = [&](const std::vector<Scalar>& coeffs) {
      Vector v(a.rows());
      for (std::size_t j = 0; j < m; ++j)
        if (!coeffs[j].is_zero()) v = v + coeffs[j] * tops[j];
      return v;
    };

    std::optional<NormalizedBlock> block;
    std::vector<Scalar> used;
    Scalar last_leading;
    auto attempt = [&](const std::vector<Scalar>& coeffs) {
      if (std::all_of(coeffs.begin(), coeffs.end(), [](const Scalar& c) { return c.is_zero(); })) return false;
      Scalar leading;
      block = normalized_chain(shift, h, top_of(coeffs), p, real_eigenvalue, leading);
      if (!leading.is_zero()) last_leading = leading;
      if (block) used = coeffs;
      return block.has_value();
    };

    for (std::size_t j = 0; j < m && !block; ++j) {
      std::vector<Scalar> e(m);
      e[j] = 1;
      attempt(e);
    }
    if (!block && m > 1) {
      Matrix g(m, m);
      for (std::size_t i = 0; i < m; ++i) {
        Vector bottom = tops[i];
        for (std::size_t k = 1; k < p; ++k) bottom = shift * bottom;
        for (std::size_t j = 0; j < m; ++j) g(i, j) = bilinear(h, bottom, tops[j]);
      }
      for (const auto& coeffs : structured_combinations(g, real_eigenvalue))
        if (attempt(coeffs)) break;
    }
    if (!block) {
      for (const auto& coeffs : integer_combinations(m))
        if (attempt(coeffs)) break;
    }
    if (!block) {
      throw Error(ErrorKind::kNonconstructibleScaling,
                  "no chain of length " + std::to_string(p) + " at eigenvalue " + lambda.to_string() +
                      " has a leading Gram value with a square root in Q(i, sqrt 2) (last value " +
                      last_leading.to_string() + ")");
    }

    std::size_t replaced = 0;
    while (used[replaced].is_zero()) ++replaced;
    chains.erase(chains.begin() + static_cast<std::ptrdiff_t>(replaced));

    // Project the remaining chains onto the H-orthogonal complement; the
    // projector commutes with A, so chains stay chains.
    const std::vector<Vector>& chain = block->chain;
    for (auto& other : chains) {
      for (auto& x : other.vectors) {
        Vector correction(a.rows());
        for (std::size_t k = 0; k < p; ++k) {
          Scalar coeff = Scalar(block->eps) * bilinear(h, x, chain[p - 1 - k]);
          if (!coeff.is_zero()) correction = correction + coeff * chain[k];
        }
        x = x - correction;
      }
    }
    result.push_back(std::move(*block));
  }

  std::stable_sort(result.begin(), result.end(), [](const NormalizedBlock& x, const NormalizedBlock& y) {
    if (x.chain.size() != y.chain.size()) return x.chain.size() > y.chain.size();
    return x.eps > y.eps;
  });
  return result;
}

struct NormalizedStructure {
  JordanSpec spec;
  SignCharacteristic signs;
  std::vector<std::vector<Vector>> real_blocks;  // layout order
  std::vector<std::vector<Vector>> pair_blocks;  // chains at lambda, gamma = 1 Gram sip
};

NormalizedStructure normalize(const Matrix& a, const Matrix& h) {
  validate_pair(a, h);
  NormalizedStructure out;
  out.spec = jordan_structure(a);
  for (const auto& g : out.spec.real) {
    auto blocks = normalize_group(a, h, Scalar(g.lambda), chains_at(a, Scalar(g.lambda), g.sizes), true);
    for (auto& b : blocks) {
      out.signs.push_back({g.lambda, b.chain.size(), b.eps});
      out.real_blocks.push_back(std::move(b.chain));
    }
  }
  for (const auto& g : out.spec.nonreal) {
    auto blocks = normalize_group(a, h, g.lambda(), chains_at(a, g.lambda(), g.sizes), false);
    for (auto& b : blocks) out.pair_blocks.push_back(std::move(b.chain));
  }
  return out;
}

void check_postconditions(const Matrix& a, const Matrix& h, const CanonicalPair& pair) {
  if (!(a * pair.basis == pair.basis * pair.J)) {
    throw Error(ErrorKind::kInternalStructureMismatch, "constructed basis does not bring A to its Jordan form");
  }
  if (!(pair.basis.conj_transpose() * h * pair.basis == pair.P)) {
    throw Error(ErrorKind::kInternalStructureMismatch, "constructed basis does not bring H to sip form");
  }
}

Matrix flip(std::size_t size, const Scalar& sign) {
  Matrix m(size, size);
  for (std::size_t i = 0; i < size; ++i) m(i, size - 1 - i) = sign;
  return m;
}

}  // namespace

void sort_signs(SignCharacteristic& signs) {
  std::stable_sort(signs.begin(), signs.end(), [](const SignEntry& x, const SignEntry& y) {
    if (x.lambda != y.lambda) return x.lambda < y.lambda;
    if (x.size != y.size) return x.size > y.size;
    return x.eps > y.eps;
  });
}

Matrix build_sip(std::span<const std::size_t> sizes, std::span<const int> signs) {
  if (sizes.size() != signs.size()) {
    throw Error(ErrorKind::kBadSignature, "sip needs one sign per block (" + std::to_string(sizes.size()) +
                                              " blocks, " + std::to_string(signs.size()) + " signs)");
  }
  std::vector<Matrix> blocks;
  for (std::size_t k = 0; k < sizes.size(); ++k) {
    if (signs[k] != 1 && signs[k] != -1) {
      throw Error(ErrorKind::kBadSignature, "sip sign must be +1 or -1, got " + std::to_string(signs[k]));
    }
    if (sizes[k] == 0) throw Error(ErrorKind::kBadSignature, "sip block of size zero");
    blocks.push_back(flip(sizes[k], Scalar(signs[k])));
  }
  return direct_sum(blocks);
}

Matrix canonical_sip(const JordanSpec& spec, const SignCharacteristic& signs) {
  std::vector<std::size_t> sizes;
  std::vector<int> eps;
  std::size_t next = 0;
  for (const auto& b : layout(spec)) {
    if (b.paired) {
      sizes.push_back(2 * b.size);
      eps.push_back(1);
      continue;
    }
    if (next >= signs.size() || Scalar(signs[next].lambda) != b.lambda || signs[next].size != b.size) {
      throw Error(ErrorKind::kBadSignature, "sign characteristic does not match block (" + b.lambda.to_string() +
                                                ", " + std::to_string(b.size) + ")");
    }
    sizes.push_back(b.size);
    eps.push_back(signs[next].eps);
    ++next;
  }
  if (next != signs.size()) throw Error(ErrorKind::kBadSignature, "sign characteristic has extra entries");
  return build_sip(sizes, eps);
}

Matrix build_S(const JordanSpec& spec) {
  std::vector<Matrix> blocks;
  for (const auto& b : layout(spec)) {
    if (!b.paired) {
      blocks.push_back(Matrix::identity(b.size));
      continue;
    }
    std::size_t p = b.size;
    Matrix s(2 * p, 2 * p);
    Scalar r = Scalar::inv_sqrt2();
    Scalar ri = r * Scalar::i();
    for (std::size_t k = 0; k < p; ++k) {
      s(2 * k, k) = r;
      s(2 * k + 1, k) = ri;
      s(2 * k, p + k) = ri;
      s(2 * k + 1, p + k) = r;
    }
    blocks.push_back(std::move(s));
  }
  return direct_sum(blocks);
}

Matrix build_S_inv(const JordanSpec& spec) {
  std::vector<Matrix> blocks;
  for (const auto& b : layout(spec)) {
    if (!b.paired) {
      blocks.push_back(Matrix::identity(b.size));
      continue;
    }
    std::size_t p = b.size;
    Matrix s(2 * p, 2 * p);
    Scalar r = Scalar::inv_sqrt2();
    Scalar minus_ri = -(r * Scalar::i());
    for (std::size_t k = 0; k < p; ++k) {
      s(k, 2 * k) = r;
      s(k, 2 * k + 1) = minus_ri;
      s(p + k, 2 * k) = minus_ri;
      s(p + k, 2 * k + 1) = r;
    }
    blocks.push_back(std::move(s));
  }
  return direct_sum(blocks);
}

void validate_pair(const Matrix& a, const Matrix& h) {
  if (!a.is_square() || !h.is_square() || a.rows() != h.rows()) {
    throw Error(ErrorKind::kDimensionMismatch, "A and H must be square of the same size");
  }
  if (!a.is_real() || !h.is_real()) {
    throw Error(ErrorKind::kInvalidArgument, "A and H must be real");
  }
  CheckResult selfadjoint = is_h_selfadjoint(a, h);
  if (!selfadjoint.passed) {
    const Witness& w = *selfadjoint.witness;
    throw Error(ErrorKind::kNotSelfadjoint, "A is not H-selfadjoint: (HA)(" + std::to_string(w.i) + "," +
                                                std::to_string(w.j) + ") = " + w.value.to_string() +
                                                " but (A^*H)(" + std::to_string(w.i) + "," + std::to_string(w.j) +
                                                ") = " + w.expected.to_string());
  }
}

CanonicalPair fo_canonical(const Matrix& a, const Matrix& h) {
  NormalizedStructure s = normalize(a, h);
  std::vector<Vector> columns;
  for (const auto& chain : s.real_blocks) columns.insert(columns.end(), chain.begin(), chain.end());
  for (const auto& chain : s.pair_blocks) {
    columns.insert(columns.end(), chain.begin(), chain.end());
    for (const auto& v : chain) columns.push_back(conj(v));
  }
  CanonicalPair pair;
  pair.kind = PairKind::kComplex;
  pair.J = complex_jordan_form(s.spec);
  pair.P = canonical_sip(s.spec, s.signs);
  pair.basis = Matrix::from_columns(columns, a.rows());
  pair.signs = std::move(s.signs);
  pair.spec = std::move(s.spec);
  check_postconditions(a, h, pair);
  return pair;
}

SignCharacteristic sign_characteristic(const Matrix& a, const Matrix& h) { return normalize(a, h).signs; }

CanonicalPair real_canonical(const Matrix& a, const Matrix& h) {
  NormalizedStructure s = normalize(a, h);
  std::vector<Vector> columns;
  for (const auto& chain : s.real_blocks) columns.insert(columns.end(), chain.begin(), chain.end());
  // z_k = (1 + i) q_k has x^T H y Gram i * flip, so its real and imaginary
  // parts form a real basis whose Gram is the flip of size 2p.
  const Scalar one_plus_i = Scalar(1) + Scalar::i();
  for (const auto& chain : s.pair_blocks) {
    for (const auto& q : chain) {
      Vector z = one_plus_i * q;
      Vector x(z.size()), y(z.size());
      for (std::size_t r = 0; r < z.size(); ++r) {
        x[r] = z[r].real_part();
        y[r] = z[r].imag_part();
      }
      columns.push_back(std::move(x));
      columns.push_back(std::move(y));
    }
  }
  CanonicalPair pair;
  pair.kind = PairKind::kReal;
  pair.J = real_jordan_form(s.spec);
  pair.P = canonical_sip(s.spec, s.signs);
  pair.basis = Matrix::from_columns(columns, a.rows());
  pair.signs = std::move(s.signs);
  pair.spec = std::move(s.spec);
  check_postconditions(a, h, pair);
  return pair;
}

CanonicalPair focs_basis(const Matrix& a, const Matrix& h) {
  CanonicalPair real = real_canonical(a, h);
  CanonicalPair pair;
  pair.kind = PairKind::kComplex;
  pair.J = complex_jordan_form(real.spec);
  pair.P = real.P;
  pair.basis = real.basis * build_S(real.spec);
  pair.signs = std::move(real.signs);
  pair.spec = std::move(real.spec);
  pair.i_focs = true;
  check_postconditions(a, h, pair);
  return pair;
}

}  // namespace focs
