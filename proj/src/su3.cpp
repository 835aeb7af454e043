#include "stokes3d/su3.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>

namespace stokes3d {

ComplexMatrix3 gell_mann(int i) {
  const cplx I(0.0, 1.0);
  const double r3 = std::sqrt(1.0 / 3.0);
  ComplexMatrix3 m;
  switch (i) {
    case 0:
      return ComplexMatrix3::identity();
    case 1:
      m(0, 1) = 1.0;
      m(1, 0) = 1.0;
      return m;
    case 2:
      m(0, 1) = -I;
      m(1, 0) = I;
      return m;
    case 3:
      m(0, 0) = 1.0;
      m(1, 1) = -1.0;
      return m;
    case 4:
      m(0, 2) = 1.0;
      m(2, 0) = 1.0;
      return m;
    case 5:
      m(0, 2) = -I;
      m(2, 0) = I;
      return m;
    case 6:
      m(1, 2) = 1.0;
      m(2, 1) = 1.0;
      return m;
    case 7:
      m(1, 2) = -I;
      m(2, 1) = I;
      return m;
    case 8:
      m(0, 0) = r3;
      m(1, 1) = r3;
      m(2, 2) = -2.0 * r3;
      return m;
    default:
      throw std::out_of_range("gell_mann: index must be in 0..8");
  }
}

StructureConstantTable::StructureConstantTable() {
  const double h = 0.5;
  const double r = std::sqrt(3.0) / 2.0;
  base_[{1, 2, 3}] = 1.0;
  base_[{1, 4, 7}] = h;
  base_[{1, 5, 6}] = -h;
  base_[{2, 4, 6}] = h;
  base_[{2, 5, 7}] = h;
  base_[{3, 4, 5}] = h;
  base_[{3, 6, 7}] = -h;
  base_[{4, 5, 8}] = r;
  base_[{6, 7, 8}] = r;
}

double StructureConstantTable::value(int l, int m, int n) const {
  for (int idx : {l, m, n})
    if (idx < 1 || idx > 8)
      throw std::out_of_range("structure constant: index must be in 1..8");
  if (l == m || m == n || l == n) return 0.0;

  // Sort the triple with a bubble pass, tracking permutation parity.
  std::array<int, 3> p{l, m, n};
  int sign = 1;
  for (int pass = 0; pass < 2; ++pass)
    for (int i = 0; i + 1 < 3 - pass; ++i)
      if (p[i] > p[i + 1]) {
        std::swap(p[i], p[i + 1]);
        sign = -sign;
      }

  auto it = base_.find({p[0], p[1], p[2]});
  if (it == base_.end()) return 0.0;
  return sign * it->second;
}

void StructureConstantTable::set_base_entry(int l, int m, int n, double v) {
  if (!(l < m && m < n))
    throw std::invalid_argument("set_base_entry: indices must be ascending");
  for (int idx : {l, m, n})
    if (idx < 1 || idx > 8)
      throw std::out_of_range("set_base_entry: index must be in 1..8");
  base_[{l, m, n}] = v;
}

double structure_constant(int l, int m, int n) {
  static const StructureConstantTable table;
  return table.value(l, m, n);
}

VerificationReport check_su3_closure(double tolerance) {
  return check_su3_closure(tolerance, StructureConstantTable());
}

VerificationReport check_su3_closure(double tolerance, const StructureConstantTable& f) {
  VerificationReport report;
  report.name = "su3_closure";
  report.tolerance = tolerance;

  std::array<ComplexMatrix3, 9> half;
  for (int i = 0; i < 9; ++i) half[i] = gell_mann(i) * 0.5;

  const cplx I(0.0, 1.0);
  for (int l = 1; l <= 8; ++l) {
    for (int m = 1; m <= 8; ++m) {
      ComplexMatrix3 rhs;
      for (int n = 1; n <= 8; ++n) {
        const double fv = f.value(l, m, n);
        if (fv != 0.0) rhs = rhs + half[n] * (I * fv);
      }
      const double residual = commutator3(half[l], half[m]).max_abs_diff(rhs);
      report.max_residual = std::max(report.max_residual, residual);
      ++report.checks;
      if (residual > tolerance) report.failures.push_back({l, m, residual});
    }
  }
  return report;
}

VerificationReport check_trace_orthogonality(double tolerance) {
  VerificationReport report;
  report.name = "trace_orthogonality";
  report.tolerance = tolerance;

  for (int i = 0; i <= 8; ++i) {
    for (int j = 1; j <= 8; ++j) {
      const cplx tr = (gell_mann(i) * gell_mann(j)).trace();
      const double expected = (i == j) ? 2.0 : 0.0;
      const double residual = std::abs(tr - expected);
      report.max_residual = std::max(report.max_residual, residual);
      ++report.checks;
      if (residual > tolerance) report.failures.push_back({i, j, residual});
    }
  }
  return report;
}

}  // namespace stokes3d
