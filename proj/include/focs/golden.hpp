#pragma once

#include <string>
#include <vector>

#include "focs/matrix.hpp"

/// The worked 4x4 example pair with its three reference bases:
/// T (flipped orthogonal, not conjugate symmetric), R (conjugate symmetric,
/// not flipped orthogonal) and M (both).
namespace focs::golden {

Matrix example_A();
Matrix example_H();
Matrix example_J();
Matrix example_P();
Matrix example_T();
Matrix example_R();
/// R^* H R.
Matrix example_G();
Matrix example_M();

struct SelftestItem {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Runs the golden corpus through the verifiers and the constructions.
std::vector<SelftestItem> run_selftest();

}  // namespace focs::golden
