#include "stokes3d/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <utility>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace stokes3d::kernels {

bool openmp_enabled() {
#ifdef _OPENMP
  return true;
#else
  return false;
#endif
}

int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

cplx dot_serial(const cplx* x, const cplx* y, int n) {
  cplx s = 0.0;
  for (int i = 0; i < n; ++i) s += std::conj(x[i]) * y[i];
  return s;
}

cplx dot_omp(const cplx* x, const cplx* y, int n) {
  double re = 0.0, im = 0.0;
#pragma omp parallel for schedule(static) reduction(+ : re, im)
  for (int i = 0; i < n; ++i) {
    const cplx t = std::conj(x[i]) * y[i];
    re += t.real();
    im += t.imag();
  }
  return {re, im};
}

namespace {

inline void matvec_row(const SparseOperator& a, const cplx* x, cplx* y, int r) {
  const auto& rp = a.row_ptr();
  const auto& ci = a.col_ind();
  const auto& vv = a.values();
  cplx s = 0.0;
  for (int k = rp[r]; k < rp[r + 1]; ++k) s += vv[k] * x[ci[k]];
  y[r] = s;
}

}  // namespace

void matvec_serial(const SparseOperator& a, const cplx* x, cplx* y) {
  for (int r = 0; r < a.dim(); ++r) matvec_row(a, x, y, r);
}

void matvec_omp(const SparseOperator& a, const cplx* x, cplx* y) {
  const int dim = a.dim();
#pragma omp parallel for schedule(static)
  for (int r = 0; r < dim; ++r) matvec_row(a, x, y, r);
}

namespace {

using RowEntries = std::vector<std::pair<int, cplx>>;

// One output row of a CSR product, accumulated densely then compacted in
// column order.  Each row is owned by a single thread, so the arithmetic
// order inside a row never depends on the schedule.
inline void multiply_row(const SparseOperator& a, const SparseOperator& b, int r,
                         std::vector<cplx>& acc, std::vector<char>& used,
                         std::vector<int>& touched, RowEntries& out) {
  const auto& arp = a.row_ptr();
  const auto& aci = a.col_ind();
  const auto& avv = a.values();
  const auto& brp = b.row_ptr();
  const auto& bci = b.col_ind();
  const auto& bvv = b.values();

  touched.clear();
  for (int k = arp[r]; k < arp[r + 1]; ++k) {
    const int mid = aci[k];
    const cplx av = avv[k];
    for (int j = brp[mid]; j < brp[mid + 1]; ++j) {
      const int c = bci[j];
      if (!used[c]) {
        used[c] = 1;
        acc[c] = 0.0;
        touched.push_back(c);
      }
      acc[c] += av * bvv[j];
    }
  }
  std::sort(touched.begin(), touched.end());
  out.clear();
  out.reserve(touched.size());
  for (int c : touched) {
    if (acc[c] != 0.0) out.emplace_back(c, acc[c]);
    used[c] = 0;
  }
}

SparseOperator assemble(const FockBasis& basis, const std::vector<RowEntries>& rows) {
  std::vector<Triplet> t;
  size_t total = 0;
  for (const RowEntries& row : rows) total += row.size();
  t.reserve(total);
  for (int r = 0; r < static_cast<int>(rows.size()); ++r)
    for (const auto& [c, v] : rows[r]) t.push_back({r, c, v});
  return SparseOperator::from_triplets(basis, std::move(t));
}

}  // namespace

SparseOperator multiply_serial(const SparseOperator& a, const SparseOperator& b) {
  if (a.basis() != b.basis())
    throw std::invalid_argument("multiply: basis mismatch");
  const int dim = a.dim();
  std::vector<RowEntries> rows(dim);
  std::vector<cplx> acc(dim, 0.0);
  std::vector<char> used(dim, 0);
  std::vector<int> touched;
  for (int r = 0; r < dim; ++r) multiply_row(a, b, r, acc, used, touched, rows[r]);
  return assemble(a.basis(), rows);
}

SparseOperator multiply_omp(const SparseOperator& a, const SparseOperator& b) {
  if (a.basis() != b.basis())
    throw std::invalid_argument("multiply: basis mismatch");
  const int dim = a.dim();
  std::vector<RowEntries> rows(dim);
#pragma omp parallel
  {
    std::vector<cplx> acc(dim, 0.0);
    std::vector<char> used(dim, 0);
    std::vector<int> touched;
#pragma omp for schedule(static)
    for (int r = 0; r < dim; ++r) multiply_row(a, b, r, acc, used, touched, rows[r]);
  }
  return assemble(a.basis(), rows);
}

namespace {

// Per-mode coefficients of a normalized coherent state: c_n = e^{-|z|^2/2} z^n / sqrt(n!)
// built by the stable recurrence c_n = c_{n-1} z / sqrt(n).
std::vector<cplx> mode_table(cplx z, int cutoff) {
  std::vector<cplx> t(cutoff + 1);
  t[0] = std::exp(-0.5 * std::norm(z));
  for (int n = 1; n <= cutoff; ++n)
    t[n] = t[n - 1] * z / std::sqrt(static_cast<double>(n));
  return t;
}

}  // namespace

std::vector<cplx> coherent_coefficients_serial(const FockBasis& basis,
                                               cplx a1, cplx a2, cplx a3) {
  const auto t1 = mode_table(a1, basis.cutoff());
  const auto t2 = mode_table(a2, basis.cutoff());
  const auto t3 = mode_table(a3, basis.cutoff());
  std::vector<cplx> out(basis.dim());
  for (int flat = 0; flat < basis.dim(); ++flat) {
    const auto occ = basis.occupations(flat);
    out[flat] = t1[occ[0]] * t2[occ[1]] * t3[occ[2]];
  }
  return out;
}

std::vector<cplx> coherent_coefficients_omp(const FockBasis& basis,
                                            cplx a1, cplx a2, cplx a3) {
  const auto t1 = mode_table(a1, basis.cutoff());
  const auto t2 = mode_table(a2, basis.cutoff());
  const auto t3 = mode_table(a3, basis.cutoff());
  std::vector<cplx> out(basis.dim());
  const int dim = basis.dim();
#pragma omp parallel for schedule(static)
  for (int flat = 0; flat < dim; ++flat) {
    const auto occ = basis.occupations(flat);
    out[flat] = t1[occ[0]] * t2[occ[1]] * t3[occ[2]];
  }
  return out;
}

namespace {

inline double orbit_r2(const Vec3& a, const Vec3& b, double t) {
  const double c = std::cos(t);
  const double s = std::sin(t);
  const Vec3 x{a[0] * c + b[0] * s, a[1] * c + b[1] * s, a[2] * c + b[2] * s};
  return dot(x, x);
}

struct Candidate {
  double r2;
  double t;
};

inline bool better_max(const Candidate& n, const Candidate& cur) {
  return n.r2 > cur.r2 || (n.r2 == cur.r2 && n.t < cur.t);
}

inline bool better_min(const Candidate& n, const Candidate& cur) {
  return n.r2 < cur.r2 || (n.r2 == cur.r2 && n.t < cur.t);
}

}  // namespace

ExtentScan orbit_extent_serial(const Vec3& a, const Vec3& b, long samples) {
  if (samples < 4)
    throw std::invalid_argument("orbit_extent: need at least 4 samples");
  const double step = 2.0 * std::numbers::pi / static_cast<double>(samples);
  Candidate mx{-1.0, 0.0}, mn{-1.0, 0.0};
  for (long k = 0; k < samples; ++k) {
    const double t = step * static_cast<double>(k);
    const Candidate c{orbit_r2(a, b, t), t};
    if (mx.r2 < 0.0 || better_max(c, mx)) mx = c;
    if (mn.r2 < 0.0 || better_min(c, mn)) mn = c;
  }
  return {mx.r2, mn.r2, mx.t, mn.t};
}

ExtentScan orbit_extent_omp(const Vec3& a, const Vec3& b, long samples) {
  if (samples < 4)
    throw std::invalid_argument("orbit_extent: need at least 4 samples");
  const double step = 2.0 * std::numbers::pi / static_cast<double>(samples);
  Candidate mx{-1.0, 0.0}, mn{-1.0, 0.0};
#pragma omp parallel
  {
    Candidate lmx{-1.0, 0.0}, lmn{-1.0, 0.0};
#pragma omp for schedule(static)
    for (long k = 0; k < samples; ++k) {
      const double t = step * static_cast<double>(k);
      const Candidate c{orbit_r2(a, b, t), t};
      if (lmx.r2 < 0.0 || better_max(c, lmx)) lmx = c;
      if (lmn.r2 < 0.0 || better_min(c, lmn)) lmn = c;
    }
#pragma omp critical
    {
      if (lmx.r2 >= 0.0 && (mx.r2 < 0.0 || better_max(lmx, mx))) mx = lmx;
      if (lmn.r2 >= 0.0 && (mn.r2 < 0.0 || better_min(lmn, mn))) mn = lmn;
    }
  }
  return {mx.r2, mn.r2, mx.t, mn.t};
}

}  // namespace stokes3d::kernels
