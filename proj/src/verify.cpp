#include "stokes3d/verify.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "stokes3d/su3.hpp"

namespace stokes3d {

namespace {

// Worst column norm of `op` over the masked columns; columns are the basis
// states the residual operator is applied to.
double masked_column_max(const SparseOperator& op, const std::vector<char>& mask) {
  const std::vector<double> norms = op.column_norms();
  double worst = 0.0;
  for (size_t i = 0; i < norms.size(); ++i)
    if (mask[i]) worst = std::max(worst, norms[i]);
  return worst;
}

void record(VerificationReport& report, int first, int second, double residual) {
  report.max_residual = std::max(report.max_residual, residual);
  ++report.checks;
  if (residual > report.tolerance)
    report.failures.push_back({first, second, residual});
}

}  // namespace

VerificationReport check_fock_ccr(const FockBasis& basis, double tol) {
  VerificationReport report;
  report.name = "fock_ccr";
  report.tolerance = tol;

  std::vector<SparseOperator> low, rai;
  for (int m = 1; m <= 3; ++m) {
    low.push_back(ladder(basis, m, Ladder::lower));
    rai.push_back(ladder(basis, m, Ladder::raise));
  }
  const SparseOperator one = SparseOperator::identity(basis);

  for (int m = 0; m < 3; ++m) {
    // Same-mode CCR holds away from the top rung n_m = cutoff.
    std::vector<char> mask(basis.dim(), 0);
    for (int flat = 0; flat < basis.dim(); ++flat)
      mask[flat] = basis.occupations(flat)[m] <= basis.cutoff() - 1 ? 1 : 0;
    const SparseOperator resid = low[m] * rai[m] - rai[m] * low[m] - one;
    record(report, m + 1, m + 1, masked_column_max(resid, mask));
  }
  for (int j = 0; j < 3; ++j) {
    for (int k = 0; k < 3; ++k) {
      if (j == k) continue;
      record(report, j + 1, k + 1,
             (low[j] * low[k] - low[k] * low[j]).max_abs_entry());
      record(report, j + 1, -(k + 1),
             (low[j] * rai[k] - rai[k] * low[j]).max_abs_entry());
    }
  }
  return report;
}

VerificationReport check_conservation(const FockBasis& basis, int margin, double tol) {
  VerificationReport report;
  report.name = "conservation";
  report.tolerance = tol;

  const std::vector<char> mask = safe_subspace_total_quanta(basis, margin);
  const StokesOperatorSet set(basis);
  const SparseOperator h = hamiltonian_3d(basis);
  for (int i = 0; i <= 8; ++i) {
    const SparseOperator comm = set.sigma(i) * h - h * set.sigma(i);
    record(report, i, -1, masked_column_max(comm, mask));
  }
  return report;
}

VerificationReport check_fock_closure(const FockBasis& basis, int margin, double tol) {
  VerificationReport report;
  report.name = "fock_su3_closure";
  report.tolerance = tol;

  const std::vector<char> mask = safe_subspace_total_quanta(basis, margin);
  const StokesOperatorSet set(basis);
  const cplx half_i(0.0, 0.5);
  for (int l = 1; l <= 8; ++l) {
    for (int m = l + 1; m <= 8; ++m) {
      SparseOperator resid =
          (set.sigma(l) * set.sigma(m) - set.sigma(m) * set.sigma(l)).scaled(0.25);
      for (int n = 1; n <= 8; ++n) {
        const double f = structure_constant(l, m, n);
        if (f != 0.0) resid = resid - set.sigma(n).scaled(half_i * f);
      }
      record(report, l, m, masked_column_max(resid, mask));
    }
  }
  return report;
}

VerificationReport check_angular_momentum_ids(const FockBasis& basis, int margin,
                                              double tol) {
  VerificationReport report;
  report.name = "angular_momentum_ids";
  report.tolerance = tol;

  const std::vector<char> mask = safe_subspace_total_quanta(basis, margin);
  const StokesOperatorSet set(basis);
  const auto l = angular_momentum_ops(basis);
  record(report, 1, 7, masked_column_max(l[0] - set.sigma(7), mask));
  record(report, 2, 5, masked_column_max(l[1] + set.sigma(5), mask));
  record(report, 3, 2, masked_column_max(l[2] - set.sigma(2), mask));
  return report;
}

VerificationReport check_classical_limit(const FockBasis& basis, int draws,
                                         unsigned long seed, double max_modulus,
                                         double tol) {
  VerificationReport report;
  report.name = "classical_limit";
  report.tolerance = tol;

  const StokesOperatorSet set(basis);
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> mod(0.0, max_modulus);
  std::uniform_real_distribution<double> ang(-std::numbers::pi, std::numbers::pi);

  for (int d = 0; d < draws; ++d) {
    cplx a[3];
    for (auto& v : a) v = std::polar(mod(rng), ang(rng));
    const CoherentAmplitudes alpha(a[0], a[1], a[2]);
    const StokesVector closed = stokes_closed_form(alpha);
    const StokesExpectation exp = stokes_expectation(alpha, set);
    double worst = 0.0;
    for (int i = 0; i < 9; ++i)
      worst = std::max(worst, std::abs(exp.values.s[i] - closed.s[i]));
    record(report, d, -1, worst);
  }
  return report;
}

std::vector<VerificationReport> run_all_checks(const VerifySettings& settings) {
  const FockBasis basis(settings.cutoff);
  const auto tol = [&](double fallback) {
    return settings.tol_override.value_or(fallback);
  };

  std::vector<VerificationReport> out;
  out.push_back(check_su3_closure(tol(1e-14)));
  out.push_back(check_trace_orthogonality(tol(1e-15)));
  out.push_back(check_fock_ccr(basis, tol(1e-13)));
  out.push_back(check_conservation(basis, settings.margin, tol(1e-12)));
  out.push_back(check_fock_closure(basis, settings.margin, tol(1e-12)));
  out.push_back(check_angular_momentum_ids(basis, settings.margin, tol(1e-13)));
  // The 1e-9 classical-limit tolerance is a tail bound valid from cutoff 16
  // up, so this one check never runs on a smaller space.
  const FockBasis classical_basis(std::max(settings.cutoff, 16));
  out.push_back(check_classical_limit(classical_basis, settings.classical_draws,
                                      settings.seed, settings.max_modulus,
                                      tol(1e-9)));
  return out;
}

}  // namespace stokes3d
