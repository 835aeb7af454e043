#include "stokes3d/linalg3.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace stokes3d {

double dot(const Vec3& u, const Vec3& v) {
  return u[0] * v[0] + u[1] * v[1] + u[2] * v[2];
}

Vec3 cross(const Vec3& u, const Vec3& v) {
  return {u[1] * v[2] - u[2] * v[1],
          u[2] * v[0] - u[0] * v[2],
          u[0] * v[1] - u[1] * v[0]};
}

double norm(const Vec3& v) { return std::sqrt(dot(v, v)); }

Vec3 scaled(const Vec3& v, double s) { return {v[0] * s, v[1] * s, v[2] * s}; }

Vec3 normalized(const Vec3& v) {
  const double n = norm(v);
  if (n == 0.0) throw std::invalid_argument("normalized: zero vector");
  return scaled(v, 1.0 / n);
}

Mat3 mat3_zero() { return {0, 0, 0, 0, 0, 0, 0, 0, 0}; }

Vec3 mat3_apply(const Mat3& m, const Vec3& v) {
  return {m[0] * v[0] + m[1] * v[1] + m[2] * v[2],
          m[3] * v[0] + m[4] * v[1] + m[5] * v[2],
          m[6] * v[0] + m[7] * v[1] + m[8] * v[2]};
}

double quadratic_form(const Mat3& m, const Vec3& v) {
  return dot(v, mat3_apply(m, v));
}

double mat3_trace(const Mat3& m) { return m[0] + m[4] + m[8]; }

double mat3_max_abs_diff(const Mat3& a, const Mat3& b) {
  double worst = 0.0;
  for (int i = 0; i < 9; ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
  return worst;
}

namespace {

double off_diagonal_norm(const std::vector<double>& a, int n) {
  double s = 0.0;
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q)
      if (p != q) s += a[p * n + q] * a[p * n + q];
  return std::sqrt(s);
}

double frobenius_norm(const std::vector<double>& a) {
  double s = 0.0;
  for (double v : a) s += v * v;
  return std::sqrt(s);
}

}  // namespace

EigenSystem jacobi_eigensystem(const std::vector<double>& symmetric, int n,
                               double tol, int max_sweeps) {
  if (n <= 0 || symmetric.size() != static_cast<size_t>(n) * n)
    throw std::invalid_argument("jacobi_eigensystem: bad dimensions");

  std::vector<double> a = symmetric;
  std::vector<double> vmat(static_cast<size_t>(n) * n, 0.0);
  for (int i = 0; i < n; ++i) vmat[i * n + i] = 1.0;

  const double scale = std::max(1.0, frobenius_norm(a));
  EigenSystem out;

  for (out.sweeps = 0; out.sweeps < max_sweeps; ++out.sweeps) {
    out.off_norm = off_diagonal_norm(a, n);
    if (out.off_norm <= tol * scale) break;
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const double apq = a[p * n + q];
        if (apq == 0.0) continue;
        const double tau = (a[q * n + q] - a[p * n + p]) / (2.0 * apq);
        const double t = (tau >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        for (int k = 0; k < n; ++k) {
          const double akp = a[k * n + p];
          const double akq = a[k * n + q];
          a[k * n + p] = c * akp - s * akq;
          a[k * n + q] = s * akp + c * akq;
        }
        for (int k = 0; k < n; ++k) {
          const double apk = a[p * n + k];
          const double aqk = a[q * n + k];
          a[p * n + k] = c * apk - s * aqk;
          a[q * n + k] = s * apk + c * aqk;
        }
        for (int k = 0; k < n; ++k) {
          const double vkp = vmat[k * n + p];
          const double vkq = vmat[k * n + q];
          vmat[k * n + p] = c * vkp - s * vkq;
          vmat[k * n + q] = s * vkp + c * vkq;
        }
      }
    }
    out.off_norm = off_diagonal_norm(a, n);
  }

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int i, int j) { return a[i * n + i] < a[j * n + j]; });

  out.values.resize(n);
  out.vectors.assign(n, std::vector<double>(n, 0.0));
  for (int k = 0; k < n; ++k) {
    const int src = order[k];
    out.values[k] = a[src * n + src];
    for (int r = 0; r < n; ++r) out.vectors[k][r] = vmat[r * n + src];
  }
  return out;
}

EigenSystem eigensystem3(const Mat3& m, double tol) {
  return jacobi_eigensystem(std::vector<double>(m.begin(), m.end()), 3, tol);
}

}  // namespace stokes3d
