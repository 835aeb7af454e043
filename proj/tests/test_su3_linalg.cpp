#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <stdexcept>

#include "stokes3d/complex_matrix.hpp"
#include "stokes3d/linalg3.hpp"
#include "stokes3d/su3.hpp"

using namespace stokes3d;

TEST_CASE("gell_mann generators have the right structure") {
  CHECK(gell_mann(0).max_abs_diff(ComplexMatrix3::identity()) == 0.0);

  for (int i = 1; i <= 8; ++i) {
    const ComplexMatrix3 m = gell_mann(i);
    CHECK(m.hermiticity_defect() == 0.0);
    CHECK(std::abs(m.trace()) <= 1e-15);
  }

  const ComplexMatrix3 l2 = gell_mann(2);
  CHECK(l2(0, 1) == cplx(0.0, -1.0));
  CHECK(l2(1, 0) == cplx(0.0, 1.0));
  CHECK(l2(2, 2) == cplx(0.0, 0.0));

  const ComplexMatrix3 l8 = gell_mann(8);
  CHECK(l8(0, 0) == l8(1, 1));
  CHECK(l8(2, 2).real() == Catch::Approx(-2.0 * std::sqrt(1.0 / 3.0)));

  CHECK_THROWS_AS(gell_mann(9), std::out_of_range);
  CHECK_THROWS_AS(gell_mann(-1), std::out_of_range);
}

TEST_CASE("structure constants resolve every index order") {
  CHECK(structure_constant(1, 2, 3) == 1.0);
  CHECK(structure_constant(2, 1, 3) == -1.0);
  CHECK(structure_constant(2, 3, 1) == 1.0);
  CHECK(structure_constant(3, 1, 2) == 1.0);
  CHECK(structure_constant(4, 5, 8) == Catch::Approx(std::sqrt(3.0) / 2.0));
  CHECK(structure_constant(8, 5, 4) == Catch::Approx(-std::sqrt(3.0) / 2.0));
  CHECK(structure_constant(5, 8, 4) == Catch::Approx(std::sqrt(3.0) / 2.0));
  CHECK(structure_constant(1, 5, 6) == -0.5);

  CHECK(structure_constant(1, 1, 2) == 0.0);
  CHECK(structure_constant(1, 2, 4) == 0.0);

  CHECK_THROWS_AS(structure_constant(0, 1, 2), std::out_of_range);
  CHECK_THROWS_AS(structure_constant(1, 2, 9), std::out_of_range);

  StructureConstantTable table;
  CHECK_THROWS_AS(table.set_base_entry(2, 1, 3, 1.0), std::invalid_argument);
}

TEST_CASE("su3 closure holds for the canonical constants") {
  const VerificationReport rep = check_su3_closure(1e-14);
  CHECK(rep.passed());
  CHECK(rep.checks == 64);
  CHECK(rep.max_residual <= 1e-14);
}

TEST_CASE("a corrupted structure constant is flagged at its pair") {
  StructureConstantTable table;
  table.set_base_entry(1, 2, 3, 0.9);
  const VerificationReport rep = check_su3_closure(1e-14, table);
  REQUIRE_FALSE(rep.passed());

  bool saw_12 = false;
  for (const PairResidual& f : rep.failures) {
    CHECK(f.first >= 1);
    CHECK(f.first <= 3);
    CHECK(f.second >= 1);
    CHECK(f.second <= 3);
    if (f.first == 1 && f.second == 2) saw_12 = true;
  }
  CHECK(saw_12);
}

TEST_CASE("trace orthogonality of the generator basis") {
  const VerificationReport rep = check_trace_orthogonality(1e-15);
  CHECK(rep.passed());
  CHECK(rep.checks == 72);
  CHECK(rep.max_residual <= 1e-15);
}

TEST_CASE("complex matrix algebra") {
  ComplexMatrix3 a;
  a(0, 1) = cplx(1.0, 2.0);
  a(2, 0) = cplx(0.0, -1.0);
  ComplexMatrix3 b;
  b(1, 2) = cplx(3.0, 0.0);
  b(0, 0) = cplx(0.5, 0.5);

  const ComplexMatrix3 p = a * b;
  CHECK(p(0, 2) == cplx(3.0, 6.0));
  CHECK(p(2, 0) == cplx(0.5, -0.5));

  const ComplexMatrix3 adj = a.adjoint();
  CHECK(adj(1, 0) == cplx(1.0, -2.0));
  CHECK(adj(0, 2) == cplx(0.0, 1.0));

  const ComplexMatrix3 anti = commutator3(a, b) + commutator3(b, a);
  CHECK(anti.max_abs() == 0.0);
}

TEST_CASE("vector helpers") {
  const Vec3 u{1.0, 2.0, 3.0};
  const Vec3 v{4.0, 5.0, 6.0};
  CHECK(dot(u, v) == 32.0);
  const Vec3 c = cross(u, v);
  CHECK(c[0] == -3.0);
  CHECK(c[1] == 6.0);
  CHECK(c[2] == -3.0);
  CHECK(norm(Vec3{3.0, 4.0, 0.0}) == 5.0);
  CHECK_THROWS_AS(normalized(Vec3{0.0, 0.0, 0.0}), std::invalid_argument);

  const Mat3 m{1.0, 2.0, 3.0, 2.0, 5.0, 6.0, 3.0, 6.0, 9.0};
  CHECK(mat3_trace(m) == 15.0);
  CHECK(quadratic_form(m, Vec3{1.0, 0.0, 0.0}) == 1.0);
  CHECK(quadratic_form(m, Vec3{1.0, 1.0, 0.0}) == 10.0);
}

TEST_CASE("jacobi eigensystem on known symmetric matrices") {
  SECTION("already diagonal") {
    const EigenSystem es = jacobi_eigensystem({5.0, 0.0, 0.0, 0.0, -1.0, 0.0, 0.0, 0.0, 2.0}, 3);
    REQUIRE(es.values.size() == 3);
    CHECK(es.values[0] == Catch::Approx(-1.0));
    CHECK(es.values[1] == Catch::Approx(2.0));
    CHECK(es.values[2] == Catch::Approx(5.0));
  }

  SECTION("2x2 block with a decoupled mode") {
    const Mat3 m{2.0, 1.0, 0.0, 1.0, 2.0, 0.0, 0.0, 0.0, 5.0};
    const EigenSystem es = eigensystem3(m);
    CHECK(std::abs(es.values[0] - 1.0) <= 1e-13);
    CHECK(std::abs(es.values[1] - 3.0) <= 1e-13);
    CHECK(std::abs(es.values[2] - 5.0) <= 1e-13);

    for (int k = 0; k < 3; ++k) {
      const Vec3 v{es.vectors[k][0], es.vectors[k][1], es.vectors[k][2]};
      const Vec3 mv = mat3_apply(m, v);
      const Vec3 resid{mv[0] - es.values[k] * v[0],
                       mv[1] - es.values[k] * v[1],
                       mv[2] - es.values[k] * v[2]};
      CHECK(norm(resid) <= 1e-12);
      CHECK(std::abs(norm(v) - 1.0) <= 1e-13);
    }
  }

  SECTION("random symmetric matrix reconstructs") {
    std::vector<double> m{1.7, -0.3, 0.9, -0.3, 2.4, -1.1, 0.9, -1.1, 0.6};
    const EigenSystem es = jacobi_eigensystem(m, 3);
    double trace_sum = 0.0;
    for (double v : es.values) trace_sum += v;
    CHECK(std::abs(trace_sum - (1.7 + 2.4 + 0.6)) <= 1e-12);
    CHECK(es.values[0] <= es.values[1]);
    CHECK(es.values[1] <= es.values[2]);
  }
}
