#include "stokes3d/polarization.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "stokes3d/errors.hpp"
#include "stokes3d/linalg3.hpp"
#include "stokes3d/su3.hpp"

namespace stokes3d {

PolarizationMatrix3 build_j3d(const StokesVector& s) {
  if (s.convention != StokesConvention::canonical)
    throw std::invalid_argument("build_j3d: expected canonical convention");
  PolarizationMatrix3 j = ComplexMatrix3::identity() * (s.s[0] / 3.0);
  for (int i = 1; i <= 8; ++i) j = j + gell_mann(i) * (0.5 * s.s[i]);
  return j;
}

StokesVector stokes_from_j3d(const PolarizationMatrix3& j, double hermiticity_tol) {
  if (j.hermiticity_defect() > hermiticity_tol)
    throw std::invalid_argument("stokes_from_j3d: input is not Hermitian");
  StokesVector s;
  s.convention = StokesConvention::canonical;
  s.s[0] = j.trace().real();
  for (int i = 1; i <= 8; ++i) s.s[i] = (j * gell_mann(i)).trace().real();
  return s;
}

Matrix2 reduce_to_2d(const PolarizationMatrix3& j, double tolerance) {
  double third = 0.0;
  for (int k = 0; k < 3; ++k)
    third = std::max({third, std::abs(j(2, k)), std::abs(j(k, 2))});
  if (third > tolerance)
    throw NotZPropagatingError(
        "reduce_to_2d: third-mode content above tolerance, field is not z-propagating");
  return {{{j(0, 0), j(0, 1)}, {j(1, 0), j(1, 1)}}};
}

std::array<double, 3> hermitian3_eigenvalues(const ComplexMatrix3& m) {
  std::vector<double> embed(36, 0.0);
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 3; ++c) {
      const cplx v = m(r, c);
      embed[r * 6 + c] = v.real();
      embed[(r + 3) * 6 + (c + 3)] = v.real();
      embed[r * 6 + (c + 3)] = -v.imag();
      embed[(r + 3) * 6 + c] = v.imag();
    }
  }
  const EigenSystem es = jacobi_eigensystem(embed, 6);
  // Pairs are adjacent after the ascending sort; averaging absorbs the last
  // rounding difference between the two copies.
  return {0.5 * (es.values[0] + es.values[1]),
          0.5 * (es.values[2] + es.values[3]),
          0.5 * (es.values[4] + es.values[5])};
}

}  // namespace stokes3d
