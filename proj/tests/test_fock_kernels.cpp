#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>
#include <random>
#include <stdexcept>
#include <vector>

#include "stokes3d/fock.hpp"
#include "stokes3d/kernels.hpp"
#include "stokes3d/stokes_quantum.hpp"
#include "stokes3d/su3.hpp"
#include "stokes3d/verify.hpp"

using namespace stokes3d;

namespace {

std::vector<cplx> random_state(int n, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<cplx> x(n);
  for (cplx& v : x) v = cplx(u(rng), u(rng));
  return x;
}

}  // namespace

TEST_CASE("fock basis indexing") {
  CHECK_THROWS_AS(FockBasis(0), std::invalid_argument);
  CHECK_THROWS_AS(FockBasis(300), std::invalid_argument);

  const FockBasis basis(3);
  CHECK(basis.dim() == 64);
  for (int flat = 0; flat < basis.dim(); ++flat) {
    const auto occ = basis.occupations(flat);
    CHECK(basis.index(occ[0], occ[1], occ[2]) == flat);
  }
  CHECK_THROWS_AS(basis.index(4, 0, 0), std::out_of_range);
  CHECK_THROWS_AS(basis.index(0, -1, 0), std::out_of_range);
  CHECK_THROWS_AS(basis.occupations(64), std::out_of_range);
}

TEST_CASE("ladder operators act correctly at the edges") {
  const FockBasis basis(3);

  SECTION("lowering annihilates the vacuum") {
    const SparseOperator a1 = ladder(basis, 1, Ladder::lower);
    const StateVector out = apply(a1, basis_state(basis, 0, 0, 0));
    CHECK(out.norm() == 0.0);
  }

  SECTION("raising off the top rung is dropped") {
    const SparseOperator r3 = ladder(basis, 3, Ladder::raise);
    const StateVector out = apply(r3, basis_state(basis, 0, 0, 3));
    CHECK(out.norm() == 0.0);
  }

  SECTION("matrix elements carry the sqrt factors") {
    const SparseOperator r1 = ladder(basis, 1, Ladder::raise);
    CHECK(r1.entry(basis.index(3, 0, 0), basis.index(2, 0, 0)) ==
          cplx(std::sqrt(3.0), 0.0));
    const SparseOperator a2 = ladder(basis, 2, Ladder::lower);
    CHECK(a2.entry(basis.index(0, 1, 0), basis.index(0, 2, 0)) ==
          cplx(std::sqrt(2.0), 0.0));
    CHECK_THROWS_AS(ladder(basis, 0, Ladder::lower), std::invalid_argument);
  }

  SECTION("number operator equals raise times lower") {
    for (int m = 1; m <= 3; ++m) {
      const SparseOperator prod = ladder(basis, m, Ladder::raise) *
                                  ladder(basis, m, Ladder::lower);
      CHECK(prod.max_abs_diff(number_op(basis, m)) <= 1e-13);
    }
  }
}

TEST_CASE("quadratures are hermitian and satisfy the commutator") {
  const FockBasis basis(5);
  const SparseOperator x1 = quadrature(basis, 1, Quadrature::position);
  const SparseOperator p1 = quadrature(basis, 1, Quadrature::momentum);
  CHECK(x1.hermiticity_defect() == 0.0);
  CHECK(p1.hermiticity_defect() == 0.0);

  // [x, p] = i away from the top rung of the mode.
  const SparseOperator comm = x1 * p1 - p1 * x1;
  const SparseOperator resid = comm - SparseOperator::identity(basis).scaled(cplx(0.0, 1.0));
  const std::vector<double> norms = resid.column_norms();
  for (int flat = 0; flat < basis.dim(); ++flat)
    if (basis.occupations(flat)[0] <= basis.cutoff() - 1)
      CHECK(norms[flat] <= 1e-13);
}

TEST_CASE("canonical commutation check passes on a truncated basis") {
  const VerificationReport rep = check_fock_ccr(FockBasis(3));
  CHECK(rep.passed());
  CHECK(rep.checks == 15);
}

TEST_CASE("safe subspace mask counts states by total quanta") {
  const FockBasis basis(4);
  const std::vector<char> mask = safe_subspace_total_quanta(basis, 2);
  int count = 0;
  for (char c : mask) count += c;
  CHECK(count == 10);  // states with n1+n2+n3 <= 2
  CHECK_THROWS_AS(safe_subspace_total_quanta(basis, 5), std::invalid_argument);
  CHECK_THROWS_AS(safe_subspace_total_quanta(basis, -1), std::invalid_argument);
}

TEST_CASE("state vector operations enforce the shared basis") {
  const FockBasis small(2);
  const FockBasis large(3);
  const SparseOperator n1 = number_op(small, 1);

  CHECK_THROWS_AS(apply(n1, basis_state(large, 0, 0, 0)), std::invalid_argument);
  CHECK_THROWS_AS(inner(basis_state(small, 0, 0, 0), basis_state(large, 0, 0, 0)),
                  std::invalid_argument);
  CHECK_THROWS_AS(expectation(n1, StateVector(small)), std::invalid_argument);

  CHECK(expectation(n1, basis_state(small, 2, 1, 0)) == cplx(2.0, 0.0));
  CHECK(basis_state(small, 1, 1, 1).norm() == 1.0);
}

TEST_CASE("jordan_schwinger images match explicit ladder products") {
  const FockBasis basis(3);
  const auto rai = [&](int m) { return ladder(basis, m, Ladder::raise); };
  const auto low = [&](int m) { return ladder(basis, m, Ladder::lower); };

  SECTION("lambda_1 image") {
    const SparseOperator expected = rai(1) * low(2) + rai(2) * low(1);
    CHECK(jordan_schwinger(gell_mann(1), basis).max_abs_diff(expected) == 0.0);
  }

  SECTION("lambda_2 image") {
    const SparseOperator expected = (rai(2) * low(1)).scaled(cplx(0.0, 1.0)) +
                                    (rai(1) * low(2)).scaled(cplx(0.0, -1.0));
    CHECK(jordan_schwinger(gell_mann(2), basis).max_abs_diff(expected) == 0.0);
  }

  SECTION("lambda_5 image") {
    const SparseOperator expected = (rai(3) * low(1)).scaled(cplx(0.0, 1.0)) +
                                    (rai(1) * low(3)).scaled(cplx(0.0, -1.0));
    CHECK(jordan_schwinger(gell_mann(5), basis).max_abs_diff(expected) == 0.0);
  }

  SECTION("lambda_8 image from number operators") {
    const double r3 = std::sqrt(1.0 / 3.0);
    const SparseOperator expected =
        (number_op(basis, 1) + number_op(basis, 2) - number_op(basis, 3).scaled(2.0))
            .scaled(r3);
    CHECK(jordan_schwinger(gell_mann(8), basis).max_abs_diff(expected) <= 1e-13);
  }

  SECTION("lambda_0 image is the total number operator") {
    const SparseOperator expected =
        number_op(basis, 1) + number_op(basis, 2) + number_op(basis, 3);
    CHECK(jordan_schwinger(gell_mann(0), basis).max_abs_diff(expected) == 0.0);
  }

  SECTION("all nine images are hermitian") {
    const StokesOperatorSet set(basis);
    for (int i = 0; i <= 8; ++i)
      CHECK(set.sigma(i).hermiticity_defect() <= 1e-15);
    CHECK_THROWS_AS(set.sigma(9), std::out_of_range);
  }
}

TEST_CASE("hamiltonian is diagonal with the zero-point offset") {
  const FockBasis basis(2);
  const SparseOperator h = hamiltonian_3d(basis);
  CHECK(h.entry(0, 0) == cplx(1.5, 0.0));
  const int top = basis.index(2, 2, 2);
  CHECK(h.entry(top, top) == cplx(7.5, 0.0));
  CHECK(check_conservation(FockBasis(4)).passed());
}

TEST_CASE("parallel kernels agree with the serial references") {
  const FockBasis basis(5);
  const StokesOperatorSet set(basis);
  const SparseOperator& s1 = set.sigma(1);
  const SparseOperator& s4 = set.sigma(4);
  const std::vector<cplx> x = random_state(basis.dim(), 99);

  SECTION("matvec is entrywise identical") {
    std::vector<cplx> ys(x.size()), yp(x.size());
    kernels::matvec_serial(s1, x.data(), ys.data());
    kernels::matvec_omp(s1, x.data(), yp.data());
    for (size_t i = 0; i < x.size(); ++i) CHECK(ys[i] == yp[i]);
  }

  SECTION("dot products agree") {
    const cplx ds = kernels::dot_serial(x.data(), x.data(), basis.dim());
    const cplx dp = kernels::dot_omp(x.data(), x.data(), basis.dim());
    CHECK(std::abs(ds - dp) <= 1e-12 * (1.0 + std::abs(ds)));
  }

  SECTION("sparse products are entrywise identical") {
    const SparseOperator ps = kernels::multiply_serial(s1, s4);
    const SparseOperator pp = kernels::multiply_omp(s1, s4);
    CHECK(ps.nnz() == pp.nnz());
    CHECK(ps.max_abs_diff(pp) == 0.0);
  }

  SECTION("coherent coefficients are entrywise identical") {
    const cplx a1(0.7, -0.2), a2(-0.4, 0.5), a3(0.1, 0.3);
    const auto cs = kernels::coherent_coefficients_serial(basis, a1, a2, a3);
    const auto cp = kernels::coherent_coefficients_omp(basis, a1, a2, a3);
    for (size_t i = 0; i < cs.size(); ++i) CHECK(cs[i] == cp[i]);
  }

  SECTION("orbit extent scans agree including tie-breaks") {
    const Vec3 a{1.3, -0.2, 0.8};
    const Vec3 b{0.1, 0.9, -0.4};
    const auto ss = kernels::orbit_extent_serial(a, b, 5000);
    const auto sp = kernels::orbit_extent_omp(a, b, 5000);
    CHECK(ss.r2_max == sp.r2_max);
    CHECK(ss.r2_min == sp.r2_min);
    CHECK(ss.t_max == sp.t_max);
    CHECK(ss.t_min == sp.t_min);

    // A circle never ties exactly in floating point, but the two variants
    // must still land on the same sample.
    const auto circ = kernels::orbit_extent_serial({2, 0, 0}, {0, 2, 0}, 64);
    const auto circ_p = kernels::orbit_extent_omp({2, 0, 0}, {0, 2, 0}, 64);
    CHECK(circ.t_max == circ_p.t_max);
    CHECK(circ.t_min == circ_p.t_min);
    CHECK(circ.r2_max == Catch::Approx(4.0));
    CHECK(circ.r2_min == Catch::Approx(4.0));

    // The zero orbit ties exactly everywhere; both variants must pick the
    // smallest t.
    const auto zero = kernels::orbit_extent_serial({0, 0, 0}, {0, 0, 0}, 64);
    const auto zero_p = kernels::orbit_extent_omp({0, 0, 0}, {0, 0, 0}, 64);
    CHECK(zero.t_max == 0.0);
    CHECK(zero.t_min == 0.0);
    CHECK(zero_p.t_max == 0.0);
    CHECK(zero_p.t_min == 0.0);
    CHECK(zero.r2_max == 0.0);
    CHECK(zero.r2_min == 0.0);
  }

  SECTION("scan rejects degenerate sampling") {
    CHECK_THROWS_AS(kernels::orbit_extent_serial({1, 0, 0}, {0, 1, 0}, 3),
                    std::invalid_argument);
    CHECK_THROWS_AS(kernels::orbit_extent_omp({1, 0, 0}, {0, 1, 0}, 2),
                    std::invalid_argument);
  }
}

TEST_CASE("sparse multiply matches a dense reference") {
  const FockBasis basis(2);
  const StokesOperatorSet set(basis);
  const SparseOperator& a = set.sigma(1);
  const SparseOperator& b = set.sigma(4);
  const SparseOperator prod = a * b;

  for (int r = 0; r < basis.dim(); ++r) {
    for (int c = 0; c < basis.dim(); ++c) {
      cplx dense = 0.0;
      for (int k = 0; k < basis.dim(); ++k) dense += a.entry(r, k) * b.entry(k, c);
      CHECK(std::abs(prod.entry(r, c) - dense) <= 1e-14);
    }
  }
}

TEST_CASE("sparse operator algebra basics") {
  const FockBasis basis(2);
  const SparseOperator r1 = ladder(basis, 1, Ladder::raise);

  CHECK(r1.adjoint().max_abs_diff(ladder(basis, 1, Ladder::lower)) == 0.0);
  CHECK((r1 - r1).nnz() == 0);
  CHECK(r1.scaled(2.0).max_abs_entry() == 2.0 * r1.max_abs_entry());

  const FockBasis other(3);
  CHECK_THROWS_AS(r1 * ladder(other, 1, Ladder::lower), std::invalid_argument);

  // Triplet assembly is order-independent and accumulates duplicates.
  std::vector<Triplet> t1{{0, 1, 1.0}, {2, 0, cplx(0.0, 2.0)}, {0, 1, 0.5}};
  std::vector<Triplet> t2{{2, 0, cplx(0.0, 2.0)}, {0, 1, 0.5}, {0, 1, 1.0}};
  const SparseOperator o1 = SparseOperator::from_triplets(basis, t1);
  const SparseOperator o2 = SparseOperator::from_triplets(basis, t2);
  CHECK(o1.max_abs_diff(o2) == 0.0);
  CHECK(o1.entry(0, 1) == cplx(1.5, 0.0));
  CHECK_THROWS_AS(SparseOperator::from_triplets(basis, {{0, 27, 1.0}}),
                  std::out_of_range);
}

TEST_CASE("coherent coefficients match the explicit formula") {
  const FockBasis basis(4);
  const cplx a1(0.6, 0.2), a2(-0.3, 0.4), a3(0.0, -0.5);
  const auto coeff = kernels::coherent_coefficients_omp(basis, a1, a2, a3);

  const double gauss =
      std::exp(-0.5 * (std::norm(a1) + std::norm(a2) + std::norm(a3)));
  const auto fact = [](int n) {
    double f = 1.0;
    for (int k = 2; k <= n; ++k) f *= k;
    return f;
  };
  for (int flat = 0; flat < basis.dim(); ++flat) {
    const auto occ = basis.occupations(flat);
    const cplx direct = gauss * std::pow(a1, occ[0]) * std::pow(a2, occ[1]) *
                        std::pow(a3, occ[2]) /
                        std::sqrt(fact(occ[0]) * fact(occ[1]) * fact(occ[2]));
    CHECK(std::abs(coeff[flat] - direct) <= 1e-14);
  }

  // More weight above the cutoff for larger amplitudes.
  const CoherentAmplitudes small(0.5, 0.0, 0.0);
  const CoherentAmplitudes large(1.2, 0.0, 0.0);
  CHECK(coherent_state(small, basis).truncation_deficit <
        coherent_state(large, basis).truncation_deficit);
  CHECK(coherent_state(small, basis).truncation_deficit >= 0.0);
}
