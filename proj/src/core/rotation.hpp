#pragma once

#include <vector>

#include "common.hpp"

namespace siegel {

// Bounded-type irrational rotation number given by a finite prefix of its
// continued-fraction expansion [0; a1, a2, ...].  The prefix stands in for
// the full expansion; `depth` records the truncation.
struct RotationNumber {
  std::vector<int> cf;
  int bound = 1;
  double value = 0.0;
  cplx lambda;

  static RotationNumber golden(int depth = 64);
  static RotationNumber from_cf(const std::vector<int> &cf);
};

}  // namespace siegel
