#include "stokes3d/ellipse.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "stokes3d/errors.hpp"
#include "stokes3d/kernels.hpp"

namespace stokes3d {

Vec3 orbit_position(const InitialConditions& ic, double t) {
  const double c = std::cos(t);
  const double s = std::sin(t);
  return {ic.a[0] * c + ic.b[0] * s,
          ic.a[1] * c + ic.b[1] * s,
          ic.a[2] * c + ic.b[2] * s};
}

std::array<ModulusPhase, 3> amplitudes_geometric(const InitialConditions& ic) {
  std::array<ModulusPhase, 3> out;
  for (int i = 0; i < 3; ++i) {
    const double r = std::sqrt(ic.a[i] * ic.a[i] + ic.b[i] * ic.b[i]);
    out[i].modulus = r;
    out[i].phase = r == 0.0 ? 0.0 : std::atan2(ic.a[i], ic.b[i]);
  }
  return out;
}

CoherentAmplitudes amplitudes_canonical(const InitialConditions& ic) {
  const double s = std::sqrt(0.5);
  return {cplx(ic.a[0] * s, ic.b[0] * s),
          cplx(ic.a[1] * s, ic.b[1] * s),
          cplx(ic.a[2] * s, ic.b[2] * s)};
}

StokesVector stokes_canonical(const InitialConditions& ic) {
  return stokes_closed_form(amplitudes_canonical(ic));
}

StokesVector stokes_geometric(const InitialConditions& ic) {
  // w_i = b_i + i a_i carries the oscillation form: |w_i| is the modulus and
  // arg(w_i) the phase, so conj(w_i) w_j encodes the phase difference.
  const cplx w1(ic.b[0], ic.a[0]);
  const cplx w2(ic.b[1], ic.a[1]);
  const cplx w3(ic.b[2], ic.a[2]);
  const double n1 = std::norm(w1);
  const double n2 = std::norm(w2);
  const double n3 = std::norm(w3);
  const cplx c12 = std::conj(w1) * w2;
  const cplx c13 = std::conj(w1) * w3;
  const cplx c23 = std::conj(w2) * w3;

  StokesVector out;
  out.convention = StokesConvention::geometric;
  out.s[0] = n1 + n2 + n3;
  out.s[1] = 2.0 * c12.real();
  out.s[2] = 2.0 * c12.imag();
  out.s[3] = n1 - n2;
  out.s[4] = 2.0 * c13.real();
  out.s[5] = 2.0 * c13.imag();
  out.s[6] = 2.0 * c23.real();
  out.s[7] = 2.0 * c23.imag();
  out.s[8] = n1 + n2 - 2.0 * n3;
  return out;
}

Vec3 angular_momentum_cl(const InitialConditions& ic) {
  return cross(ic.a, ic.b);
}

EllipsoidQuadric ellipsoid_from_ic(const InitialConditions& ic) {
  const double r1 = ic.a[0] * ic.a[0] + ic.b[0] * ic.b[0];
  const double r2 = ic.a[1] * ic.a[1] + ic.b[1] * ic.b[1];
  const double r3 = ic.a[2] * ic.a[2] + ic.b[2] * ic.b[2];
  const double q12 = -(ic.a[0] * ic.a[1] + ic.b[0] * ic.b[1]);
  const double q13 = -(ic.a[0] * ic.a[2] + ic.b[0] * ic.b[2]);
  const double q23 = -(ic.a[1] * ic.a[2] + ic.b[1] * ic.b[2]);

  EllipsoidQuadric out;
  out.q = {r2 + r3, q12, q13,
           q12, r1 + r3, q23,
           q13, q23, r1 + r2};
  const Vec3 l = cross(ic.a, ic.b);
  out.c = dot(l, l);
  return out;
}

EllipsoidQuadric ellipsoid_from_stokes(const StokesVector& s) {
  if (s.convention != StokesConvention::geometric)
    throw std::invalid_argument("ellipsoid_from_stokes: expected geometric convention");
  const double diag12 = (4.0 * s.s[0] - s.s[8]) / 6.0;
  // Cross terms appear once in the scalar equation; the symmetric matrix
  // stores half of each.
  const double q12 = -s.s[1] / 2.0;
  const double q13 = -s.s[4] / 2.0;
  const double q23 = -s.s[6] / 2.0;

  EllipsoidQuadric out;
  out.q = {diag12 - s.s[3] / 2.0, q12, q13,
           q12, diag12 + s.s[3] / 2.0, q23,
           q13, q23, (2.0 * s.s[0] + s.s[8]) / 3.0};
  out.c = (s.s[7] * s.s[7] + s.s[5] * s.s[5] + s.s[2] * s.s[2]) / 4.0;
  return out;
}

EulerAngles euler_angles(const Vec3& l) {
  const double ln = norm(l);
  if (ln == 0.0)
    throw DegenerateOrbitError(
        "euler_angles: zero angular momentum, orbit plane undefined");
  EulerAngles out;
  out.theta = std::acos(std::clamp(l[2] / ln, -1.0, 1.0));
  out.phi = (l[0] == 0.0 && l[1] == 0.0) ? 0.0 : std::atan2(l[0], l[1]);
  return out;
}

RungeTensor runge_from_ic(const InitialConditions& ic) {
  RungeTensor out;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      out.a[i * 3 + j] = 0.5 * (ic.a[i] * ic.a[j] + ic.b[i] * ic.b[j]);
  return out;
}

RungeTensor runge_from_stokes(const StokesVector& s) {
  if (s.convention != StokesConvention::geometric)
    throw std::invalid_argument("runge_from_stokes: expected geometric convention");
  const double diag12 = (2.0 * s.s[0] + s.s[8]) / 12.0;
  const double a12 = s.s[1] / 4.0;
  const double a13 = s.s[4] / 4.0;
  const double a23 = s.s[6] / 4.0;

  RungeTensor out;
  out.a = {diag12 + s.s[3] / 4.0, a12, a13,
           a12, diag12 - s.s[3] / 4.0, a23,
           a13, a23, (s.s[0] - s.s[8]) / 6.0};
  return out;
}

namespace {

Vec3 canonical_sign(const Vec3& v) {
  int lead = 0;
  for (int i = 1; i < 3; ++i)
    if (std::abs(v[i]) > std::abs(v[lead])) lead = i;
  return v[lead] < 0.0 ? scaled(v, -1.0) : v;
}

}  // namespace

EllipseGeometry principal_axes(const RungeTensor& a, const Vec3& l) {
  const double ln = norm(l);
  if (ln == 0.0)
    throw DegenerateOrbitError(
        "principal_axes: zero angular momentum, orbit degenerate to a line");

  const EigenSystem es = eigensystem3(a.a);

  int zero_idx = 0;
  for (int k = 1; k < 3; ++k)
    if (std::abs(es.values[k]) < std::abs(es.values[zero_idx])) zero_idx = k;
  std::array<int, 2> plane{};
  for (int k = 0, j = 0; k < 3; ++k)
    if (k != zero_idx) plane[j++] = k;
  // Ascending input order makes plane[1] the larger in-plane eigenvalue.
  const double lam_minor = es.values[plane[0]];
  const double lam_major = es.values[plane[1]];

  EllipseGeometry out;
  out.angular_momentum = l;
  out.energy = mat3_trace(a.a);
  const EulerAngles angles = euler_angles(l);
  out.theta = angles.theta;
  out.phi = angles.phi;
  out.semi_major = std::sqrt(2.0 * std::max(0.0, lam_major));
  out.semi_minor = std::sqrt(2.0 * std::max(0.0, lam_minor));
  const auto& vmaj = es.vectors[plane[1]];
  const auto& vmin = es.vectors[plane[0]];
  out.major_axis = canonical_sign({vmaj[0], vmaj[1], vmaj[2]});
  out.minor_axis = canonical_sign({vmin[0], vmin[1], vmin[2]});
  out.normal = scaled(l, 1.0 / ln);
  out.eigenvalues = {lam_major, lam_minor, es.values[zero_idx]};
  out.circular = (lam_major - lam_minor) < 1e-10;
  return out;
}

std::pair<double, double> semi_axes_bruteforce(const InitialConditions& ic,
                                               long samples) {
  const kernels::ExtentScan scan = kernels::orbit_extent_omp(ic.a, ic.b, samples);
  const double h = 2.0 * std::numbers::pi / static_cast<double>(samples);

  const auto r2 = [&](double t) {
    const Vec3 x = orbit_position(ic, t);
    return dot(x, x);
  };
  // Ternary refinement inside the winning bracket; the scan guarantees the
  // bracket holds the extremum once samples resolve the trig polynomial.
  const auto refine = [&](double t0, bool maximize) {
    double lo = t0 - h;
    double hi = t0 + h;
    for (int it = 0; it < 200 && hi - lo > 1e-15; ++it) {
      const double m1 = lo + (hi - lo) / 3.0;
      const double m2 = hi - (hi - lo) / 3.0;
      const bool keep_right = maximize ? r2(m1) < r2(m2) : r2(m1) > r2(m2);
      if (keep_right)
        lo = m1;
      else
        hi = m2;
    }
    return r2(0.5 * (lo + hi));
  };

  const double best_max = std::max(scan.r2_max, refine(scan.t_max, true));
  const double best_min = std::min(scan.r2_min, refine(scan.t_min, false));
  return {std::sqrt(best_max), std::sqrt(best_min)};
}

GeometryReport geometry_report(const InitialConditions& ic) {
  GeometryReport out;
  out.canonical = stokes_canonical(ic);
  out.geometric = stokes_geometric(ic);
  out.angular_momentum = angular_momentum_cl(ic);
  out.quadric = ellipsoid_from_ic(ic);
  out.runge = runge_from_ic(ic);
  out.energy = mat3_trace(out.runge.a);

  out.rest = norm(ic.a) == 0.0 && norm(ic.b) == 0.0;
  const double lnorm = norm(out.angular_momentum);
  const double scale = std::max(1.0, norm(ic.a) * norm(ic.b));
  out.linear = !out.rest && lnorm <= 1e-12 * scale;

  if (!out.rest && !out.linear)
    out.geometry = principal_axes(out.runge, out.angular_momentum);
  return out;
}

}  // namespace stokes3d
