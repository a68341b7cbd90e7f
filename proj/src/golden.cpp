#include "focs/golden.hpp"

#include <exception>
#include <functional>

#include "focs/canonical.hpp"
#include "focs/certify.hpp"
#include "focs/verify.hpp"

namespace focs::golden {

namespace {

const Scalar I = Scalar::i();

std::vector<SipBlock> single_pair_sip() { return {{4, 1}}; }
std::vector<PairedRange> single_pair_range() { return {{0, 2}}; }

}  // namespace

Matrix example_A() { return Matrix::from_rows({{0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}, {-1, 0, -2, 0}}); }

Matrix example_H() { return Matrix::from_rows({{0, 2, 0, 1}, {2, 0, 1, 0}, {0, 1, 0, 0}, {1, 0, 0, 0}}); }

Matrix example_J() {
  return Matrix::from_rows({{I, 1, 0, 0}, {0, I, 0, 0}, {0, 0, -I, 1}, {0, 0, 0, -I}});
}

Matrix example_P() { return Matrix::from_rows({{0, 0, 0, 1}, {0, 0, 1, 0}, {0, 1, 0, 0}, {1, 0, 0, 0}}); }

Matrix example_T() {
  return Scalar(Rational(1, 2)) *
         Matrix::from_rows({{-I, 0, I, 1}, {1, -I, 1, 0}, {I, 2, -I, 1}, {-1, Scalar(3) * I, -1, Scalar(-2) * I}});
}

Matrix example_R() {
  return Scalar(Rational(1, 2)) *
         Matrix::from_rows({{-I, 2, I, 2}, {1, I, 1, -I}, {I, 0, -I, 0}, {-1, I, -1, -I}});
}

Matrix example_G() {
  return Matrix::from_rows({{0, 0, 0, 1}, {0, 0, 1, Scalar(-3) * I}, {0, 1, 0, 0}, {1, Scalar(3) * I, 0, 0}});
}

Matrix example_M() {
  return Scalar(Rational(1, 4)) * Matrix::from_rows({{Scalar(-2) * I, 1, Scalar(2) * I, 1},
                                                     {2, -I, 2, I},
                                                     {Scalar(2) * I, 3, Scalar(-2) * I, 3},
                                                     {-2, Scalar(5) * I, -2, Scalar(-5) * I}});
}

std::vector<SelftestItem> run_selftest() {
  const Matrix a = example_A(), h = example_H(), j = example_J(), p = example_P();
  const auto sip = single_pair_sip();
  const auto ranges = single_pair_range();
  std::vector<SelftestItem> items;

  auto run = [&](const std::string& name, const std::function<bool(std::string&)>& body) {
    SelftestItem item{name, false, ""};
    try {
      item.passed = body(item.detail);
    } catch (const std::exception& e) {
      item.detail = e.what();
    }
    items.push_back(std::move(item));
  };

  run("A is H-selfadjoint", [&](std::string&) { return is_h_selfadjoint(a, h).passed; });
  run("T: (A,H) -> (J,P), flipped orthogonal, not conjugate symmetric", [&](std::string&) {
    Matrix t = example_T();
    return check_affiliation(a, h, j, p, t).passed && is_flipped_orthogonal(t, h, sip).passed &&
           !is_gamma_cs(t, ranges, 1).passed;
  });
  run("R: (A,H) -> (J,G), conjugate symmetric, not flipped orthogonal (witness -3 i)", [&](std::string& detail) {
    Matrix r = example_R();
    CheckResult fo = is_flipped_orthogonal(r, h, sip);
    if (fo.witness) detail = "fo witness " + fo.witness->value.to_string();
    return check_affiliation(a, h, j, example_G(), r).passed && is_gamma_cs(r, ranges, 1).passed && !fo.passed &&
           fo.witness->i == 2 && fo.witness->j == 4 && fo.witness->value == Scalar(-3) * I;
  });
  run("M: (A,H) -> (J,P), flipped orthogonal and 1-conjugate symmetric", [&](std::string&) {
    Matrix m = example_M();
    return check_affiliation(a, h, j, p, m).passed && is_flipped_orthogonal(m, h, sip).passed &&
           is_gamma_cs(m, ranges, 1).passed && !is_gamma_cs(m, ranges, I).passed;
  });
  run("analysis: spectrum {i, -i}, one block of size 2 each, no signs", [&](std::string&) {
    Analysis an = analyze_pair(a, h);
    return an.spec.real.empty() && an.spec.nonreal.size() == 1 && an.spec.nonreal[0].sigma == 0 &&
           an.spec.nonreal[0].tau == 1 && an.spec.nonreal[0].sizes == std::vector<std::size_t>{2} &&
           an.signs.empty();
  });
  run("constructed i-FOCS basis N: N^-1 A N = J, N^* H N = P, i-conjugate symmetric", [&](std::string&) {
    CanonicalPair n = focs_basis(a, h);
    return n.J == j && n.P == p && check_affiliation(a, h, j, p, n.basis).passed &&
           is_gamma_cs(n.basis, ranges, I).passed;
  });
  run("constructed real canonical basis R: real, (A,H) -> (J_R,P)", [&](std::string&) {
    CanonicalPair r = real_canonical(a, h);
    return r.basis.is_real() && check_affiliation(a, h, r.J, p, r.basis).passed;
  });
  return items;
}

}  // namespace focs::golden
