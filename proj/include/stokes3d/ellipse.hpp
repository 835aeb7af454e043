#pragma once

#include <array>
#include <optional>
#include <utility>

#include "stokes3d/linalg3.hpp"
#include "stokes3d/stokes_quantum.hpp"

namespace stokes3d {

// Orbit x_i(t) = a_i cos t + b_i sin t of the unit-frequency isotropic
// oscillator: a is the position and b the velocity at t = 0.
struct InitialConditions {
  Vec3 a{};
  Vec3 b{};
};

Vec3 orbit_position(const InitialConditions& ic, double t);

struct ModulusPhase {
  double modulus = 0.0;
  double phase = 0.0;
};

// Oscillation form x_i = |a0i| sin(t + phi_i): modulus sqrt(a_i^2 + b_i^2),
// phase atan2(a_i, b_i), zero-amplitude components pinned to phase 0.
std::array<ModulusPhase, 3> amplitudes_geometric(const InitialConditions& ic);

// alpha_i = (a_i + i b_i)/sqrt(2); the normalization that makes the
// angular-momentum identification L = (s7, -s5, s2) exact.
CoherentAmplitudes amplitudes_canonical(const InitialConditions& ic);

StokesVector stokes_canonical(const InitialConditions& ic);
StokesVector stokes_geometric(const InitialConditions& ic);

Vec3 angular_momentum_cl(const InitialConditions& ic);  // a x b

// The orbit-carrying ellipsoid x^T Q x = c, with Q symmetric and
// c = |a x b|^2; c = 0 collapses it to the degenerate (linear) case.
struct EllipsoidQuadric {
  Mat3 q{};
  double c = 0.0;
};

EllipsoidQuadric ellipsoid_from_ic(const InitialConditions& ic);
EllipsoidQuadric ellipsoid_from_stokes(const StokesVector& geometric);

struct EulerAngles {
  double theta = 0.0;
  double phi = 0.0;
};

// theta from cos(theta) = L3/|L|; phi = atan2(L1, L2) (line of nodes), with
// phi = 0 when the node line is undefined (L1 = L2 = 0).  Throws
// DegenerateOrbitError when |L| = 0.
EulerAngles euler_angles(const Vec3& l);

// Conserved symmetric tensor A_ij = (p_i p_j + x_i x_j)/2 = (aa^T + bb^T)/2.
struct RungeTensor {
  Mat3 a{};
};

RungeTensor runge_from_ic(const InitialConditions& ic);
RungeTensor runge_from_stokes(const StokesVector& geometric);

struct EllipseGeometry {
  Vec3 angular_momentum{};
  double energy = 0.0;
  double theta = 0.0;
  double phi = 0.0;
  double semi_major = 0.0;
  double semi_minor = 0.0;
  Vec3 major_axis{};
  Vec3 minor_axis{};
  Vec3 normal{};
  std::array<double, 3> eigenvalues{};  // descending: in-plane pair, then ~0
  bool circular = false;
};

// Eigen-decomposition of the Runge tensor: the near-zero eigenvalue pairs
// with the direction of L, the in-plane eigenvalues lambda give semi-axes
// sqrt(2 lambda).  Throws DegenerateOrbitError when |L| = 0.
EllipseGeometry principal_axes(const RungeTensor& a, const Vec3& l);

// Independent extent oracle: dense scan of |x(t)| over a period plus local
// ternary refinement; returns (max, min).
std::pair<double, double> semi_axes_bruteforce(const InitialConditions& ic,
                                               long samples);

// Everything the geometry pipeline can say about one orbit; the optional
// geometry is absent in the rest and linear cases where no ellipse exists.
struct GeometryReport {
  StokesVector canonical;
  StokesVector geometric;
  Vec3 angular_momentum{};
  double energy = 0.0;
  EllipsoidQuadric quadric;
  RungeTensor runge;
  bool rest = false;
  bool linear = false;
  std::optional<EllipseGeometry> geometry;
};

GeometryReport geometry_report(const InitialConditions& ic);

}  // namespace stokes3d
