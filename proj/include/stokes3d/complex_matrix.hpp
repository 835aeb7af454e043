#pragma once

#include <array>
#include <complex>

namespace stokes3d {

using cplx = std::complex<double>;

// Dense complex 3x3 matrix, row-major.  Covers the mode-space objects
// (generators, polarization matrices); nothing bigger is needed densely.
class ComplexMatrix3 {
 public:
  ComplexMatrix3() : m_{} {}

  static ComplexMatrix3 identity();

  cplx& operator()(int r, int c) { return m_[r * 3 + c]; }
  const cplx& operator()(int r, int c) const { return m_[r * 3 + c]; }

  ComplexMatrix3 operator+(const ComplexMatrix3& o) const;
  ComplexMatrix3 operator-(const ComplexMatrix3& o) const;
  ComplexMatrix3 operator*(const ComplexMatrix3& o) const;
  ComplexMatrix3 operator*(const cplx& s) const;

  ComplexMatrix3 adjoint() const;
  cplx trace() const;
  double max_abs() const;
  double max_abs_diff(const ComplexMatrix3& o) const;
  double hermiticity_defect() const;  // max |m - adjoint(m)| entry

 private:
  std::array<cplx, 9> m_;
};

ComplexMatrix3 commutator3(const ComplexMatrix3& a, const ComplexMatrix3& b);

}  // namespace stokes3d
