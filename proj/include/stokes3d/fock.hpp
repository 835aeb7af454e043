#pragma once

#include <array>
#include <complex>
#include <vector>

#include "stokes3d/complex_matrix.hpp"

namespace stokes3d {

// Three bosonic modes truncated at `cutoff` quanta per mode.  Flat index is
// row-major in (n1, n2, n3).
class FockBasis {
 public:
  explicit FockBasis(int cutoff);

  int cutoff() const { return cutoff_; }
  int dim() const { return dim_; }

  int index(int n1, int n2, int n3) const;  // throws std::out_of_range
  std::array<int, 3> occupations(int flat) const;
  int total_quanta(int flat) const;

  bool operator==(const FockBasis& o) const { return cutoff_ == o.cutoff_; }
  bool operator!=(const FockBasis& o) const { return !(*this == o); }

 private:
  int cutoff_;
  int side_;  // cutoff + 1
  int dim_;
};

struct Triplet {
  int row = 0;
  int col = 0;
  cplx value;
};

// Compressed sparse row operator over a FockBasis.  All algebra keeps entries
// sorted by (row, col) so equal operators compare entry-for-entry.
class SparseOperator {
 public:
  explicit SparseOperator(const FockBasis& basis);  // zero operator

  static SparseOperator from_triplets(const FockBasis& basis,
                                      std::vector<Triplet> triplets);
  static SparseOperator identity(const FockBasis& basis);

  const FockBasis& basis() const { return basis_; }
  int dim() const { return basis_.dim(); }
  long nnz() const { return static_cast<long>(values_.size()); }

  SparseOperator operator+(const SparseOperator& o) const;
  SparseOperator operator-(const SparseOperator& o) const;
  SparseOperator operator*(const SparseOperator& o) const;  // parallel kernel
  SparseOperator scaled(const cplx& s) const;
  SparseOperator adjoint() const;

  cplx entry(int r, int c) const;
  double max_abs_entry() const;
  double max_abs_diff(const SparseOperator& o) const;
  double hermiticity_defect() const;
  std::vector<double> column_norms() const;

  const std::vector<int>& row_ptr() const { return row_ptr_; }
  const std::vector<int>& col_ind() const { return col_ind_; }
  const std::vector<cplx>& values() const { return values_; }

 private:
  void check_same_basis(const SparseOperator& o) const;
  std::vector<Triplet> to_triplets() const;

  FockBasis basis_;
  std::vector<int> row_ptr_;
  std::vector<int> col_ind_;
  std::vector<cplx> values_;
};

class StateVector {
 public:
  explicit StateVector(const FockBasis& basis);

  const FockBasis& basis() const { return basis_; }
  int dim() const { return basis_.dim(); }

  cplx& operator[](int i) { return coeffs_[i]; }
  const cplx& operator[](int i) const { return coeffs_[i]; }

  std::vector<cplx>& coeffs() { return coeffs_; }
  const std::vector<cplx>& coeffs() const { return coeffs_; }

  double norm2() const;
  double norm() const;

 private:
  FockBasis basis_;
  std::vector<cplx> coeffs_;
};

enum class Ladder { lower, raise };
enum class Quadrature { position, momentum };

// Single-mode operators; mode indices run 1..3.
SparseOperator ladder(const FockBasis& basis, int mode, Ladder kind);
SparseOperator number_op(const FockBasis& basis, int mode);
// position: (a + a^dag)/sqrt(2); momentum: i(a^dag - a)/sqrt(2)
SparseOperator quadrature(const FockBasis& basis, int mode, Quadrature kind);

// Mask over flat indices selecting states with n1+n2+n3 <= cutoff - margin,
// where ladder-product identities are untouched by truncation.
std::vector<char> safe_subspace_total_quanta(const FockBasis& basis, int margin);

StateVector basis_state(const FockBasis& basis, int n1, int n2, int n3);

StateVector apply(const SparseOperator& op, const StateVector& v);
cplx inner(const StateVector& x, const StateVector& y);
// Normalized expectation <v|op|v> / <v|v>; throws std::invalid_argument on a
// zero-norm state or basis mismatch.
cplx expectation(const SparseOperator& op, const StateVector& v);

}  // namespace stokes3d
