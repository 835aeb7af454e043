#pragma once

#include <array>
#include <vector>

namespace stokes3d {

using Vec3 = std::array<double, 3>;

// Real symmetric 3x3, row-major storage.  Only small dense matrices appear
// on the classical side, so no sparse machinery here.
using Mat3 = std::array<double, 9>;

double dot(const Vec3& u, const Vec3& v);
Vec3 cross(const Vec3& u, const Vec3& v);
double norm(const Vec3& v);
Vec3 scaled(const Vec3& v, double s);
Vec3 normalized(const Vec3& v);  // throws std::invalid_argument on zero vector

Mat3 mat3_zero();
Vec3 mat3_apply(const Mat3& m, const Vec3& v);
double quadratic_form(const Mat3& m, const Vec3& v);  // v^T m v
double mat3_trace(const Mat3& m);
double mat3_max_abs_diff(const Mat3& a, const Mat3& b);

struct EigenSystem {
  std::vector<double> values;               // ascending
  std::vector<std::vector<double>> vectors; // vectors[k] pairs with values[k], unit norm
  int sweeps = 0;
  double off_norm = 0.0;                    // final off-diagonal Frobenius norm
};

// Cyclic Jacobi for a real symmetric n x n matrix (row-major).  Sweeps run in
// a fixed (p, q) order so results are reproducible; iteration stops once the
// off-diagonal Frobenius norm falls below tol relative to the matrix norm.
EigenSystem jacobi_eigensystem(const std::vector<double>& symmetric, int n,
                               double tol = 1e-14, int max_sweeps = 64);

EigenSystem eigensystem3(const Mat3& m, double tol = 1e-14);

}  // namespace stokes3d
