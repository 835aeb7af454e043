#pragma once

#include <string>
#include <vector>

namespace stokes3d {

// One residual measured for an index pair; second = -1 for single-index checks.
struct PairResidual {
  int first = 0;
  int second = -1;
  double residual = 0.0;
};

// Outcome of one verification sweep: the worst residual seen and every
// pair that exceeded the tolerance.
struct VerificationReport {
  std::string name;
  double tolerance = 0.0;
  double max_residual = 0.0;
  long checks = 0;
  std::vector<PairResidual> failures;

  bool passed() const { return failures.empty(); }
};

}  // namespace stokes3d
