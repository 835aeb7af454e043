#pragma once

#include <complex>
#include <vector>

#include "stokes3d/fock.hpp"
#include "stokes3d/linalg3.hpp"

// Hot loops, each in a serial reference form and an OpenMP form.  The OMP
// variants use schedule(static) and order-independent merges so the two
// always agree; tests pin that and the benchmark compares their timing.
namespace stokes3d::kernels {

cplx dot_serial(const cplx* x, const cplx* y, int n);  // conj(x) . y
cplx dot_omp(const cplx* x, const cplx* y, int n);

void matvec_serial(const SparseOperator& a, const cplx* x, cplx* y);
void matvec_omp(const SparseOperator& a, const cplx* x, cplx* y);

SparseOperator multiply_serial(const SparseOperator& a, const SparseOperator& b);
SparseOperator multiply_omp(const SparseOperator& a, const SparseOperator& b);

// Coefficients of a normalized three-mode coherent state over the truncated
// basis; the truncation shows up as a norm slightly below 1.
std::vector<cplx> coherent_coefficients_serial(const FockBasis& basis,
                                               cplx a1, cplx a2, cplx a3);
std::vector<cplx> coherent_coefficients_omp(const FockBasis& basis,
                                            cplx a1, cplx a2, cplx a3);

// Coarse scan of |x(t)|^2 for x(t) = a cos t + b sin t over one period.
// Ties in the scan resolve toward smaller t so both variants return the
// same bracket; callers polish the bracket if they need more accuracy.
struct ExtentScan {
  double r2_max = 0.0;
  double r2_min = 0.0;
  double t_max = 0.0;
  double t_min = 0.0;
};

ExtentScan orbit_extent_serial(const Vec3& a, const Vec3& b, long samples);
ExtentScan orbit_extent_omp(const Vec3& a, const Vec3& b, long samples);

bool openmp_enabled();
int max_threads();

}  // namespace stokes3d::kernels
