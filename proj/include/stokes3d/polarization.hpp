#pragma once

#include <array>

#include "stokes3d/complex_matrix.hpp"
#include "stokes3d/stokes_quantum.hpp"

namespace stokes3d {

using PolarizationMatrix3 = ComplexMatrix3;
using Matrix2 = std::array<std::array<cplx, 2>, 2>;

// J = (1/3) lambda_0 s0 + (1/2) sum_i lambda_i s_i.  Requires the canonical
// convention; the geometric normalization would break the trace identity.
PolarizationMatrix3 build_j3d(const StokesVector& s);

// Inversion by traces, s_j = Tr(J lambda_j).  Rejects inputs whose
// hermiticity defect exceeds hermiticity_tol instead of symmetrizing them.
StokesVector stokes_from_j3d(const PolarizationMatrix3& j,
                             double hermiticity_tol = 1e-10);

// Upper-left 2x2 block, valid only when the third row and column are below
// tolerance in magnitude (field propagating along z).
Matrix2 reduce_to_2d(const PolarizationMatrix3& j, double tolerance);

// Eigenvalues of a Hermitian 3x3, ascending, computed through the symmetric
// 6x6 real embedding [[Re, -Im], [Im, Re]] whose spectrum doubles each value.
std::array<double, 3> hermitian3_eigenvalues(const ComplexMatrix3& m);

}  // namespace stokes3d
