#include "stokes3d/complex_matrix.hpp"

#include <algorithm>

namespace stokes3d {

ComplexMatrix3 ComplexMatrix3::identity() {
  ComplexMatrix3 out;
  out(0, 0) = out(1, 1) = out(2, 2) = 1.0;
  return out;
}

ComplexMatrix3 ComplexMatrix3::operator+(const ComplexMatrix3& o) const {
  ComplexMatrix3 out;
  for (int i = 0; i < 9; ++i) out.m_[i] = m_[i] + o.m_[i];
  return out;
}

ComplexMatrix3 ComplexMatrix3::operator-(const ComplexMatrix3& o) const {
  ComplexMatrix3 out;
  for (int i = 0; i < 9; ++i) out.m_[i] = m_[i] - o.m_[i];
  return out;
}

ComplexMatrix3 ComplexMatrix3::operator*(const ComplexMatrix3& o) const {
  ComplexMatrix3 out;
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) {
      cplx s = 0.0;
      for (int k = 0; k < 3; ++k) s += (*this)(r, k) * o(k, c);
      out(r, c) = s;
    }
  return out;
}

ComplexMatrix3 ComplexMatrix3::operator*(const cplx& s) const {
  ComplexMatrix3 out;
  for (int i = 0; i < 9; ++i) out.m_[i] = m_[i] * s;
  return out;
}

ComplexMatrix3 ComplexMatrix3::adjoint() const {
  ComplexMatrix3 out;
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) out(r, c) = std::conj((*this)(c, r));
  return out;
}

cplx ComplexMatrix3::trace() const { return m_[0] + m_[4] + m_[8]; }

double ComplexMatrix3::max_abs() const {
  double worst = 0.0;
  for (const cplx& v : m_) worst = std::max(worst, std::abs(v));
  return worst;
}

double ComplexMatrix3::max_abs_diff(const ComplexMatrix3& o) const {
  return (*this - o).max_abs();
}

double ComplexMatrix3::hermiticity_defect() const {
  return max_abs_diff(adjoint());
}

ComplexMatrix3 commutator3(const ComplexMatrix3& a, const ComplexMatrix3& b) {
  return a * b - b * a;
}

}  // namespace stokes3d
