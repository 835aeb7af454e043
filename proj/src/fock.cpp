#include "stokes3d/fock.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "stokes3d/kernels.hpp"

namespace stokes3d {

FockBasis::FockBasis(int cutoff) : cutoff_(cutoff), side_(cutoff + 1) {
  if (cutoff < 1) throw std::invalid_argument("FockBasis: cutoff must be >= 1");
  if (cutoff > 256) throw std::invalid_argument("FockBasis: cutoff too large");
  dim_ = side_ * side_ * side_;
}

int FockBasis::index(int n1, int n2, int n3) const {
  for (int n : {n1, n2, n3})
    if (n < 0 || n > cutoff_)
      throw std::out_of_range("FockBasis::index: occupation outside 0..cutoff");
  return (n1 * side_ + n2) * side_ + n3;
}

std::array<int, 3> FockBasis::occupations(int flat) const {
  if (flat < 0 || flat >= dim_)
    throw std::out_of_range("FockBasis::occupations: flat index out of range");
  const int n3 = flat % side_;
  const int n2 = (flat / side_) % side_;
  const int n1 = flat / (side_ * side_);
  return {n1, n2, n3};
}

int FockBasis::total_quanta(int flat) const {
  const auto occ = occupations(flat);
  return occ[0] + occ[1] + occ[2];
}

SparseOperator::SparseOperator(const FockBasis& basis)
    : basis_(basis), row_ptr_(basis.dim() + 1, 0) {}

SparseOperator SparseOperator::from_triplets(const FockBasis& basis,
                                             std::vector<Triplet> triplets) {
  const int dim = basis.dim();
  for (const Triplet& t : triplets)
    if (t.row < 0 || t.row >= dim || t.col < 0 || t.col >= dim)
      throw std::out_of_range("SparseOperator: triplet index out of range");

  std::stable_sort(triplets.begin(), triplets.end(),
                   [](const Triplet& a, const Triplet& b) {
                     return a.row != b.row ? a.row < b.row : a.col < b.col;
                   });

  SparseOperator out(basis);
  out.col_ind_.reserve(triplets.size());
  out.values_.reserve(triplets.size());

  size_t i = 0;
  while (i < triplets.size()) {
    const int r = triplets[i].row;
    const int c = triplets[i].col;
    cplx v = triplets[i].value;
    for (++i; i < triplets.size() && triplets[i].row == r && triplets[i].col == c; ++i)
      v += triplets[i].value;
    if (v != 0.0) {
      out.col_ind_.push_back(c);
      out.values_.push_back(v);
      ++out.row_ptr_[r + 1];
    }
  }
  for (int r = 0; r < dim; ++r) out.row_ptr_[r + 1] += out.row_ptr_[r];
  return out;
}

SparseOperator SparseOperator::identity(const FockBasis& basis) {
  std::vector<Triplet> t(basis.dim());
  for (int i = 0; i < basis.dim(); ++i) t[i] = {i, i, 1.0};
  return from_triplets(basis, std::move(t));
}

void SparseOperator::check_same_basis(const SparseOperator& o) const {
  if (basis_ != o.basis_)
    throw std::invalid_argument("SparseOperator: basis mismatch");
}

std::vector<Triplet> SparseOperator::to_triplets() const {
  std::vector<Triplet> t;
  t.reserve(values_.size());
  for (int r = 0; r < dim(); ++r)
    for (int k = row_ptr_[r]; k < row_ptr_[r + 1]; ++k)
      t.push_back({r, col_ind_[k], values_[k]});
  return t;
}

SparseOperator SparseOperator::operator+(const SparseOperator& o) const {
  check_same_basis(o);
  std::vector<Triplet> t = to_triplets();
  const std::vector<Triplet> u = o.to_triplets();
  t.insert(t.end(), u.begin(), u.end());
  return from_triplets(basis_, std::move(t));
}

SparseOperator SparseOperator::operator-(const SparseOperator& o) const {
  return *this + o.scaled(-1.0);
}

SparseOperator SparseOperator::operator*(const SparseOperator& o) const {
  check_same_basis(o);
  return kernels::multiply_omp(*this, o);
}

SparseOperator SparseOperator::scaled(const cplx& s) const {
  SparseOperator out = *this;
  for (cplx& v : out.values_) v *= s;
  return out;
}

SparseOperator SparseOperator::adjoint() const {
  std::vector<Triplet> t;
  t.reserve(values_.size());
  for (int r = 0; r < dim(); ++r)
    for (int k = row_ptr_[r]; k < row_ptr_[r + 1]; ++k)
      t.push_back({col_ind_[k], r, std::conj(values_[k])});
  return from_triplets(basis_, std::move(t));
}

cplx SparseOperator::entry(int r, int c) const {
  if (r < 0 || r >= dim() || c < 0 || c >= dim())
    throw std::out_of_range("SparseOperator::entry: index out of range");
  const auto first = col_ind_.begin() + row_ptr_[r];
  const auto last = col_ind_.begin() + row_ptr_[r + 1];
  const auto it = std::lower_bound(first, last, c);
  if (it == last || *it != c) return 0.0;
  return values_[it - col_ind_.begin()];
}

double SparseOperator::max_abs_entry() const {
  double worst = 0.0;
  for (const cplx& v : values_) worst = std::max(worst, std::abs(v));
  return worst;
}

double SparseOperator::max_abs_diff(const SparseOperator& o) const {
  return (*this - o).max_abs_entry();
}

double SparseOperator::hermiticity_defect() const {
  return max_abs_diff(adjoint());
}

std::vector<double> SparseOperator::column_norms() const {
  std::vector<double> acc(dim(), 0.0);
  for (int r = 0; r < dim(); ++r)
    for (int k = row_ptr_[r]; k < row_ptr_[r + 1]; ++k)
      acc[col_ind_[k]] += std::norm(values_[k]);
  for (double& v : acc) v = std::sqrt(v);
  return acc;
}

StateVector::StateVector(const FockBasis& basis)
    : basis_(basis), coeffs_(basis.dim(), cplx(0.0, 0.0)) {}

double StateVector::norm2() const {
  return kernels::dot_omp(coeffs_.data(), coeffs_.data(), dim()).real();
}

double StateVector::norm() const { return std::sqrt(norm2()); }

namespace {

int check_mode(int mode) {
  if (mode < 1 || mode > 3)
    throw std::invalid_argument("mode index must be in 1..3");
  return mode - 1;
}

}  // namespace

SparseOperator ladder(const FockBasis& basis, int mode, Ladder kind) {
  const int m = check_mode(mode);
  std::vector<Triplet> t;
  t.reserve(basis.dim());
  for (int flat = 0; flat < basis.dim(); ++flat) {
    auto occ = basis.occupations(flat);
    if (kind == Ladder::lower) {
      if (occ[m] == 0) continue;  // annihilates the per-mode vacuum
      const double v = std::sqrt(static_cast<double>(occ[m]));
      --occ[m];
      t.push_back({basis.index(occ[0], occ[1], occ[2]), flat, v});
    } else {
      if (occ[m] == basis.cutoff()) continue;  // raising off the top is dropped
      const double v = std::sqrt(static_cast<double>(occ[m] + 1));
      ++occ[m];
      t.push_back({basis.index(occ[0], occ[1], occ[2]), flat, v});
    }
  }
  return SparseOperator::from_triplets(basis, std::move(t));
}

SparseOperator number_op(const FockBasis& basis, int mode) {
  const int m = check_mode(mode);
  std::vector<Triplet> t;
  t.reserve(basis.dim());
  for (int flat = 0; flat < basis.dim(); ++flat) {
    const auto occ = basis.occupations(flat);
    if (occ[m] > 0) t.push_back({flat, flat, static_cast<double>(occ[m])});
  }
  return SparseOperator::from_triplets(basis, std::move(t));
}

SparseOperator quadrature(const FockBasis& basis, int mode, Quadrature kind) {
  if (kind == Quadrature::position) {
    const double s = std::sqrt(0.5);
    return (ladder(basis, mode, Ladder::lower) + ladder(basis, mode, Ladder::raise))
        .scaled(s);
  }
  const cplx is(0.0, std::sqrt(0.5));
  return (ladder(basis, mode, Ladder::raise) - ladder(basis, mode, Ladder::lower))
      .scaled(is);
}

std::vector<char> safe_subspace_total_quanta(const FockBasis& basis, int margin) {
  if (margin < 0 || margin > basis.cutoff())
    throw std::invalid_argument("safe_subspace_total_quanta: margin outside 0..cutoff");
  const int limit = basis.cutoff() - margin;
  std::vector<char> mask(basis.dim(), 0);
  for (int flat = 0; flat < basis.dim(); ++flat)
    mask[flat] = basis.total_quanta(flat) <= limit ? 1 : 0;
  return mask;
}

StateVector basis_state(const FockBasis& basis, int n1, int n2, int n3) {
  StateVector v(basis);
  v[basis.index(n1, n2, n3)] = 1.0;
  return v;
}

StateVector apply(const SparseOperator& op, const StateVector& v) {
  if (op.basis() != v.basis())
    throw std::invalid_argument("apply: basis mismatch");
  StateVector out(v.basis());
  kernels::matvec_omp(op, v.coeffs().data(), out.coeffs().data());
  return out;
}

cplx inner(const StateVector& x, const StateVector& y) {
  if (x.basis() != y.basis())
    throw std::invalid_argument("inner: basis mismatch");
  return kernels::dot_omp(x.coeffs().data(), y.coeffs().data(), x.dim());
}

cplx expectation(const SparseOperator& op, const StateVector& v) {
  const double n2 = v.norm2();
  if (n2 == 0.0)
    throw std::invalid_argument("expectation: zero-norm state");
  return inner(v, apply(op, v)) / n2;
}

}  // namespace stokes3d
