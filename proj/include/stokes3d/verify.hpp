#pragma once

#include <optional>
#include <vector>

#include "stokes3d/fock.hpp"
#include "stokes3d/report.hpp"
#include "stokes3d/stokes_quantum.hpp"

namespace stokes3d {

// Canonical commutation per mode: [a_j, a_j^dag] = 1 on states with
// n_j <= cutoff-1, plus exact vanishing of the cross-mode commutators.
VerificationReport check_fock_ccr(const FockBasis& basis, double tol = 1e-13);

// [Sigma_i, H] annihilates every safe-subspace state.
VerificationReport check_conservation(const FockBasis& basis, int margin = 2,
                                      double tol = 1e-12);

// [Sigma_l/2, Sigma_m/2] = i f_lmn Sigma_n/2 on the safe subspace, all 28
// unordered pairs.
VerificationReport check_fock_closure(const FockBasis& basis, int margin = 2,
                                      double tol = 1e-12);

// Quadrature-built angular momentum against the Stokes operators:
// L1-Sigma_7, L2+Sigma_5, L3-Sigma_2 vanish on the safe subspace.
VerificationReport check_angular_momentum_ids(const FockBasis& basis,
                                              int margin = 2,
                                              double tol = 1e-13);

// Seeded sweep of random coherent amplitudes comparing truncated-space
// expectations against the closed form.
VerificationReport check_classical_limit(const FockBasis& basis, int draws,
                                         unsigned long seed,
                                         double max_modulus = 1.2,
                                         double tol = 1e-9);

struct VerifySettings {
  int cutoff = 8;
  int margin = 2;
  int classical_draws = 10;
  unsigned long seed = 12345;
  double max_modulus = 1.2;
  std::optional<double> tol_override;  // replaces every per-check default
};

std::vector<VerificationReport> run_all_checks(const VerifySettings& settings);

}  // namespace stokes3d
