#pragma once

#include <array>
#include <vector>

#include "stokes3d/complex_matrix.hpp"
#include "stokes3d/fock.hpp"

namespace stokes3d {

// Bilinear map M -> sum_jk M_jk a_j^dag a_k; matrix commutators become
// operator commutators, which is what carries the su(3) algebra onto the
// Fock space.
SparseOperator jordan_schwinger(const ComplexMatrix3& m, const FockBasis& basis);

// The nine generalized Stokes operators Sigma_i = a^dag lambda_i a.
class StokesOperatorSet {
 public:
  explicit StokesOperatorSet(const FockBasis& basis);

  const FockBasis& basis() const { return basis_; }
  const SparseOperator& sigma(int i) const;  // 0..8, throws std::out_of_range

 private:
  FockBasis basis_;
  std::vector<SparseOperator> ops_;
};

// H = n1 + n2 + n3 + 3/2 (diagonal).
SparseOperator hamiltonian_3d(const FockBasis& basis);

// L built independently from quadratures, L1 = x2 p3 - x3 p2 and cyclic;
// on the safe subspace these reproduce (Sigma_7, -Sigma_5, Sigma_2).
std::array<SparseOperator, 3> angular_momentum_ops(const FockBasis& basis);

class CoherentAmplitudes {
 public:
  CoherentAmplitudes() = default;
  CoherentAmplitudes(cplx a1, cplx a2, cplx a3) : a_{a1, a2, a3} {}

  cplx amplitude(int mode) const;       // mode in 1..3
  double modulus(int mode) const;
  double phase(int mode) const;         // principal value in (-pi, pi], 0 at the origin
  double phase_difference(int i, int j) const;  // phi_i - phi_j reduced to (-pi, pi]

 private:
  std::array<cplx, 3> a_{};
};

enum class StokesConvention { canonical, geometric };

// Nine real Stokes values with an explicit convention tag.  Canonical keeps
// the 1/sqrt(3) on s8 and matches operator expectations; geometric is the
// classical-field normalization used by the ellipsoid and Runge formulas.
struct StokesVector {
  std::array<double, 9> s{};
  StokesConvention convention = StokesConvention::canonical;

  double operator[](int i) const { return s[i]; }
  double& operator[](int i) { return s[i]; }
};

// Exact conversion between the two conventions: geometric = 2 D canonical
// with D = diag(1, 1, -1, 1, 1, -1, 1, -1, sqrt(3)).
StokesVector to_geometric(const StokesVector& canonical);
StokesVector to_canonical(const StokesVector& geometric);

struct CoherentState {
  StateVector state;
  double truncation_deficit;  // 1 - norm^2, the weight lost above the cutoff
};

CoherentState coherent_state(const CoherentAmplitudes& alpha, const FockBasis& basis);

// Closed-form coherent-state expectations of the Stokes operators
// (canonical convention).
StokesVector stokes_closed_form(const CoherentAmplitudes& alpha);

struct StokesExpectation {
  StokesVector values;  // canonical
  double truncation_deficit = 0.0;
  bool truncation_warning = false;
  double max_imag = 0.0;
};

// Expectations on the truncated space; imaginary parts above 1e-12 indicate
// a broken Hermitian operator and throw.  A truncation deficit above
// warn_threshold only sets the warning flag.
StokesExpectation stokes_expectation(const CoherentAmplitudes& alpha,
                                     const StokesOperatorSet& ops,
                                     double warn_threshold = 1e-9);
StokesExpectation stokes_expectation(const CoherentAmplitudes& alpha,
                                     const FockBasis& basis,
                                     double warn_threshold = 1e-9);

// Occupation recovery and the pure-state identities: any coherent-built
// StokesVector satisfies s1^2+s2^2 = 4 n1 n2 and partners, which is the
// operational form of the six-independent-parameter count.
std::array<double, 3> occupations_from_stokes(const StokesVector& canonical);
double pure_state_identity_residual(const StokesVector& canonical);

}  // namespace stokes3d
