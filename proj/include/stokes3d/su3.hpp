#pragma once

#include <map>
#include <tuple>

#include "stokes3d/complex_matrix.hpp"
#include "stokes3d/report.hpp"

namespace stokes3d {

// Gell-Mann generator lambda_i for i in 0..8, with lambda_0 the identity.
// Throws std::out_of_range for any other index.
ComplexMatrix3 gell_mann(int i);

// Totally antisymmetric su(3) structure constants.  Lookups accept any index
// order in {1..8}, resolve sign by permutation parity, and return 0 for
// triples with a repeated index or no base entry.
class StructureConstantTable {
 public:
  StructureConstantTable();  // canonical table

  double value(int l, int m, int n) const;  // throws std::out_of_range off 1..8

  // Replace one base entry (indices strictly ascending).  Exists so tests can
  // inject a wrong value and watch the closure check flag exactly that pair.
  void set_base_entry(int l, int m, int n, double v);

 private:
  std::map<std::tuple<int, int, int>, double> base_;
};

double structure_constant(int l, int m, int n);

// Residual of [lambda_l/2, lambda_m/2] = i f_lmn lambda_n/2 over every pair
// (l, m) in {1..8}^2, measured as a max-abs matrix entry.
VerificationReport check_su3_closure(double tolerance);
VerificationReport check_su3_closure(double tolerance, const StructureConstantTable& f);

// Residuals of Tr(lambda_i lambda_j) = 2 delta_ij over {1..8}^2 together with
// Tr(lambda_0 lambda_i) = 0 tracelessness of the non-identity generators.
VerificationReport check_trace_orthogonality(double tolerance);

}  // namespace stokes3d
