#include "stokes3d/stokes_quantum.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "stokes3d/kernels.hpp"
#include "stokes3d/su3.hpp"

namespace stokes3d {

SparseOperator jordan_schwinger(const ComplexMatrix3& m, const FockBasis& basis) {
  std::vector<Triplet> t;
  t.reserve(static_cast<size_t>(basis.dim()) * 4);
  for (int flat = 0; flat < basis.dim(); ++flat) {
    const auto occ = basis.occupations(flat);
    for (int j = 0; j < 3; ++j) {
      for (int k = 0; k < 3; ++k) {
        const cplx v = m(j, k);
        if (v == 0.0) continue;
        if (j == k) {
          if (occ[k] > 0)
            t.push_back({flat, flat, v * static_cast<double>(occ[k])});
          continue;
        }
        if (occ[k] == 0 || occ[j] == basis.cutoff()) continue;
        const double w = std::sqrt(occ[j] + 1.0) * std::sqrt(static_cast<double>(occ[k]));
        auto target = occ;
        --target[k];
        ++target[j];
        t.push_back({basis.index(target[0], target[1], target[2]), flat, v * w});
      }
    }
  }
  return SparseOperator::from_triplets(basis, std::move(t));
}

StokesOperatorSet::StokesOperatorSet(const FockBasis& basis) : basis_(basis) {
  ops_.reserve(9);
  for (int i = 0; i <= 8; ++i)
    ops_.push_back(jordan_schwinger(gell_mann(i), basis));
}

const SparseOperator& StokesOperatorSet::sigma(int i) const {
  if (i < 0 || i > 8)
    throw std::out_of_range("StokesOperatorSet::sigma: index must be in 0..8");
  return ops_[i];
}

SparseOperator hamiltonian_3d(const FockBasis& basis) {
  std::vector<Triplet> t;
  t.reserve(basis.dim());
  for (int flat = 0; flat < basis.dim(); ++flat)
    t.push_back({flat, flat, basis.total_quanta(flat) + 1.5});
  return SparseOperator::from_triplets(basis, std::move(t));
}

std::array<SparseOperator, 3> angular_momentum_ops(const FockBasis& basis) {
  const SparseOperator x1 = quadrature(basis, 1, Quadrature::position);
  const SparseOperator x2 = quadrature(basis, 2, Quadrature::position);
  const SparseOperator x3 = quadrature(basis, 3, Quadrature::position);
  const SparseOperator p1 = quadrature(basis, 1, Quadrature::momentum);
  const SparseOperator p2 = quadrature(basis, 2, Quadrature::momentum);
  const SparseOperator p3 = quadrature(basis, 3, Quadrature::momentum);
  return {x2 * p3 - x3 * p2, x3 * p1 - x1 * p3, x1 * p2 - x2 * p1};
}

cplx CoherentAmplitudes::amplitude(int mode) const {
  if (mode < 1 || mode > 3)
    throw std::invalid_argument("CoherentAmplitudes: mode index must be in 1..3");
  return a_[mode - 1];
}

double CoherentAmplitudes::modulus(int mode) const {
  return std::abs(amplitude(mode));
}

double CoherentAmplitudes::phase(int mode) const {
  const cplx a = amplitude(mode);
  if (a == 0.0) return 0.0;
  double p = std::arg(a);
  if (p <= -std::numbers::pi) p = std::numbers::pi;  // pin the branch cut to +pi
  return p;
}

double CoherentAmplitudes::phase_difference(int i, int j) const {
  double d = std::remainder(phase(i) - phase(j), 2.0 * std::numbers::pi);
  if (d <= -std::numbers::pi) d += 2.0 * std::numbers::pi;
  return d;
}

namespace {

const std::array<double, 9> kConventionScale = {
    1.0, 1.0, -1.0, 1.0, 1.0, -1.0, 1.0, -1.0, std::sqrt(3.0)};

}  // namespace

StokesVector to_geometric(const StokesVector& v) {
  if (v.convention != StokesConvention::canonical)
    throw std::invalid_argument("to_geometric: expected canonical convention");
  StokesVector out;
  out.convention = StokesConvention::geometric;
  for (int i = 0; i < 9; ++i) out.s[i] = 2.0 * kConventionScale[i] * v.s[i];
  return out;
}

StokesVector to_canonical(const StokesVector& v) {
  if (v.convention != StokesConvention::geometric)
    throw std::invalid_argument("to_canonical: expected geometric convention");
  StokesVector out;
  out.convention = StokesConvention::canonical;
  for (int i = 0; i < 9; ++i) out.s[i] = v.s[i] / (2.0 * kConventionScale[i]);
  return out;
}

CoherentState coherent_state(const CoherentAmplitudes& alpha, const FockBasis& basis) {
  StateVector state(basis);
  state.coeffs() = kernels::coherent_coefficients_omp(
      basis, alpha.amplitude(1), alpha.amplitude(2), alpha.amplitude(3));
  return {state, 1.0 - state.norm2()};
}

StokesVector stokes_closed_form(const CoherentAmplitudes& alpha) {
  const cplx a1 = alpha.amplitude(1);
  const cplx a2 = alpha.amplitude(2);
  const cplx a3 = alpha.amplitude(3);
  const double n1 = std::norm(a1);
  const double n2 = std::norm(a2);
  const double n3 = std::norm(a3);
  const cplx c12 = std::conj(a1) * a2;
  const cplx c13 = std::conj(a1) * a3;
  const cplx c23 = std::conj(a2) * a3;

  StokesVector out;
  out.convention = StokesConvention::canonical;
  out.s[0] = n1 + n2 + n3;
  out.s[1] = 2.0 * c12.real();
  out.s[2] = 2.0 * c12.imag();
  out.s[3] = n1 - n2;
  out.s[4] = 2.0 * c13.real();
  out.s[5] = 2.0 * c13.imag();
  out.s[6] = 2.0 * c23.real();
  out.s[7] = 2.0 * c23.imag();
  out.s[8] = (n1 + n2 - 2.0 * n3) * std::sqrt(1.0 / 3.0);
  return out;
}

StokesExpectation stokes_expectation(const CoherentAmplitudes& alpha,
                                     const StokesOperatorSet& ops,
                                     double warn_threshold) {
  const CoherentState cs = coherent_state(alpha, ops.basis());

  StokesExpectation out;
  out.values.convention = StokesConvention::canonical;
  out.truncation_deficit = cs.truncation_deficit;
  out.truncation_warning = cs.truncation_deficit > warn_threshold;

  if (cs.state.norm2() == 0.0)
    throw std::invalid_argument("stokes_expectation: state truncated to zero norm");

  for (int i = 0; i <= 8; ++i) {
    const cplx e = expectation(ops.sigma(i), cs.state);
    out.max_imag = std::max(out.max_imag, std::abs(e.imag()));
    out.values.s[i] = e.real();
  }
  if (out.max_imag > 1e-12)
    throw std::runtime_error(
        "stokes_expectation: non-real expectation of a Hermitian operator");
  return out;
}

StokesExpectation stokes_expectation(const CoherentAmplitudes& alpha,
                                     const FockBasis& basis,
                                     double warn_threshold) {
  return stokes_expectation(alpha, StokesOperatorSet(basis), warn_threshold);
}

std::array<double, 3> occupations_from_stokes(const StokesVector& v) {
  if (v.convention != StokesConvention::canonical)
    throw std::invalid_argument("occupations_from_stokes: expected canonical convention");
  const double n3 = (v.s[0] - std::sqrt(3.0) * v.s[8]) / 3.0;
  const double t = v.s[0] - n3;
  return {(t + v.s[3]) / 2.0, (t - v.s[3]) / 2.0, n3};
}

double pure_state_identity_residual(const StokesVector& v) {
  const auto n = occupations_from_stokes(v);
  const double r1 = v.s[1] * v.s[1] + v.s[2] * v.s[2] - 4.0 * n[0] * n[1];
  const double r2 = v.s[4] * v.s[4] + v.s[5] * v.s[5] - 4.0 * n[0] * n[2];
  const double r3 = v.s[6] * v.s[6] + v.s[7] * v.s[7] - 4.0 * n[1] * n[2];
  const double r4 = v.s[1] * v.s[6] - v.s[2] * v.s[7] - 2.0 * n[1] * v.s[4];
  return std::max({std::abs(r1), std::abs(r2), std::abs(r3), std::abs(r4)});
}

}  // namespace stokes3d
