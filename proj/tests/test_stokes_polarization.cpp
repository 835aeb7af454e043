#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "stokes3d/errors.hpp"
#include "stokes3d/polarization.hpp"
#include "stokes3d/stokes_quantum.hpp"

using namespace stokes3d;

namespace {

CoherentAmplitudes random_amplitudes(std::mt19937_64& rng, double max_modulus) {
  std::uniform_real_distribution<double> mod(0.1, max_modulus);
  std::uniform_real_distribution<double> ang(-std::numbers::pi, std::numbers::pi);
  return {std::polar(mod(rng), ang(rng)), std::polar(mod(rng), ang(rng)),
          std::polar(mod(rng), ang(rng))};
}

}  // namespace

TEST_CASE("amplitude moduli, phases and phase differences") {
  const CoherentAmplitudes alpha(cplx(1.0, 1.0), cplx(0.0, 0.0), cplx(-1.0, 0.0));

  CHECK(alpha.modulus(1) == Catch::Approx(std::sqrt(2.0)));
  CHECK(alpha.phase(1) == Catch::Approx(std::numbers::pi / 4.0));
  CHECK(alpha.phase(2) == 0.0);
  CHECK(alpha.phase(3) == Catch::Approx(std::numbers::pi));

  CHECK(alpha.phase_difference(1, 3) == Catch::Approx(-3.0 * std::numbers::pi / 4.0));
  CHECK(alpha.phase_difference(3, 1) == Catch::Approx(3.0 * std::numbers::pi / 4.0));
  // Reduction keeps the difference in (-pi, pi].
  const CoherentAmplitudes wrap(cplx(-1.0, 1e-12), cplx(-1.0, -1e-12), 0.0);
  const double d = wrap.phase_difference(1, 2);
  CHECK(d <= std::numbers::pi);
  CHECK(d > -std::numbers::pi);

  CHECK_THROWS_AS(alpha.amplitude(0), std::invalid_argument);
  CHECK_THROWS_AS(alpha.modulus(4), std::invalid_argument);
}

TEST_CASE("closed-form Stokes values for a worked amplitude") {
  const CoherentAmplitudes alpha(cplx(1.0, 0.0), cplx(0.0, 1.0), cplx(0.0, 0.0));
  const StokesVector s = stokes_closed_form(alpha);

  CHECK(s.convention == StokesConvention::canonical);
  CHECK(s[0] == 2.0);
  CHECK(s[1] == 0.0);
  CHECK(s[2] == 2.0);
  CHECK(s[3] == 0.0);
  CHECK(s[4] == 0.0);
  CHECK(s[5] == 0.0);
  CHECK(s[6] == 0.0);
  CHECK(s[7] == 0.0);
  CHECK(s[8] == Catch::Approx(2.0 * std::sqrt(1.0 / 3.0)));
}

TEST_CASE("truncated-space expectations converge to the closed form") {
  const CoherentAmplitudes alpha(cplx(0.6, 0.0), cplx(-0.3, 0.2), cplx(0.0, 0.1));
  const FockBasis basis(16);
  const StokesExpectation e = stokes_expectation(alpha, basis);
  const StokesVector closed = stokes_closed_form(alpha);

  CHECK_FALSE(e.truncation_warning);
  CHECK(e.max_imag <= 1e-12);
  for (int i = 0; i < 9; ++i)
    CHECK(std::abs(e.values[i] - closed[i]) <= 1e-9);
}

TEST_CASE("heavy truncation raises the warning flag") {
  const CoherentAmplitudes alpha(cplx(1.2, 0.0), cplx(0.0, 1.2), cplx(1.2, 0.0));
  const StokesExpectation e = stokes_expectation(alpha, FockBasis(2));
  CHECK(e.truncation_warning);
  CHECK(e.truncation_deficit > 0.1);
}

TEST_CASE("occupations recovered from canonical Stokes values") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 10; ++trial) {
    const CoherentAmplitudes alpha = random_amplitudes(rng, 1.5);
    const StokesVector s = stokes_closed_form(alpha);
    const auto n = occupations_from_stokes(s);
    for (int m = 1; m <= 3; ++m)
      CHECK(std::abs(n[m - 1] - std::norm(alpha.amplitude(m))) <= 1e-13);
  }

  StokesVector geo;
  geo.convention = StokesConvention::geometric;
  CHECK_THROWS_AS(occupations_from_stokes(geo), std::invalid_argument);
}

TEST_CASE("pure-state identities hold for coherent inputs") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 10; ++trial) {
    const StokesVector s = stokes_closed_form(random_amplitudes(rng, 1.5));
    CHECK(pure_state_identity_residual(s) <= 1e-13);
  }
}

TEST_CASE("convention conversion is an involution with fixed scales") {
  StokesVector can;
  can.convention = StokesConvention::canonical;
  for (int i = 0; i < 9; ++i) can[i] = 0.3 * (i + 1);

  const StokesVector geo = to_geometric(can);
  CHECK(geo.convention == StokesConvention::geometric);
  CHECK(geo[0] == 2.0 * can[0]);
  CHECK(geo[2] == -2.0 * can[2]);
  CHECK(geo[5] == -2.0 * can[5]);
  CHECK(geo[7] == -2.0 * can[7]);
  CHECK(geo[8] == Catch::Approx(2.0 * std::sqrt(3.0) * can[8]));

  const StokesVector back = to_canonical(geo);
  for (int i = 0; i < 9; ++i) CHECK(std::abs(back[i] - can[i]) <= 1e-14);

  CHECK_THROWS_AS(to_geometric(geo), std::invalid_argument);
  CHECK_THROWS_AS(to_canonical(can), std::invalid_argument);
}

TEST_CASE("polarization matrix is the amplitude outer product") {
  const CoherentAmplitudes alpha(cplx(1.0, 0.0), cplx(0.0, 1.0), cplx(0.0, 0.0));
  const PolarizationMatrix3 j = build_j3d(stokes_closed_form(alpha));

  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c)
      CHECK(std::abs(j(r, c) - alpha.amplitude(r + 1) *
                                   std::conj(alpha.amplitude(c + 1))) <= 1e-14);
  CHECK(j.hermiticity_defect() <= 1e-15);
  CHECK(std::abs(j.trace() - cplx(2.0, 0.0)) <= 1e-14);

  StokesVector geo;
  geo.convention = StokesConvention::geometric;
  CHECK_THROWS_AS(build_j3d(geo), std::invalid_argument);
}

TEST_CASE("stokes round trip through the polarization matrix") {
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (int trial = 0; trial < 20; ++trial) {
    StokesVector s;
    s.convention = StokesConvention::canonical;
    for (int i = 0; i < 9; ++i) s[i] = u(rng);
    const StokesVector back = stokes_from_j3d(build_j3d(s));
    for (int i = 0; i < 9; ++i) CHECK(std::abs(back[i] - s[i]) <= 1e-13);
  }

  ComplexMatrix3 bad;
  bad(0, 1) = 1.0;  // no matching (1,0) entry
  CHECK_THROWS_AS(stokes_from_j3d(bad), std::invalid_argument);
}

TEST_CASE("coherent polarization matrices are rank one") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 10; ++trial) {
    const CoherentAmplitudes alpha = random_amplitudes(rng, 1.2);
    const StokesVector s = stokes_closed_form(alpha);
    const auto eig = hermitian3_eigenvalues(build_j3d(s));
    CHECK(std::abs(eig[0]) <= 1e-12 * s[0]);
    CHECK(std::abs(eig[1]) <= 1e-12 * s[0]);
    CHECK(std::abs(eig[2] - s[0]) <= 1e-12 * s[0]);
  }
}

TEST_CASE("hermitian eigenvalues through the real embedding") {
  ComplexMatrix3 m;
  m(0, 0) = 2.0;
  m(0, 1) = cplx(0.0, 1.0);
  m(1, 0) = cplx(0.0, -1.0);
  m(1, 1) = 2.0;
  m(2, 2) = 5.0;
  const auto eig = hermitian3_eigenvalues(m);
  CHECK(std::abs(eig[0] - 1.0) <= 1e-12);
  CHECK(std::abs(eig[1] - 3.0) <= 1e-12);
  CHECK(std::abs(eig[2] - 5.0) <= 1e-12);
}

TEST_CASE("reduction to the transverse block") {
  SECTION("z-propagating field reduces and keeps the trace") {
    const CoherentAmplitudes alpha(cplx(0.8, 0.1), cplx(-0.2, 0.5), cplx(0.0, 0.0));
    const StokesVector s = stokes_closed_form(alpha);
    const PolarizationMatrix3 j = build_j3d(s);
    const Matrix2 block = reduce_to_2d(j, 1e-13);
    CHECK(std::abs(block[0][0] + block[1][1] - j.trace()) <= 1e-14);
    CHECK(std::abs(block[0][1] - j(0, 1)) == 0.0);
  }

  SECTION("third-mode weight blocks the reduction") {
    const CoherentAmplitudes alpha(cplx(0.8, 0.1), cplx(-0.2, 0.5), cplx(0.3, 0.0));
    const PolarizationMatrix3 j = build_j3d(stokes_closed_form(alpha));
    CHECK_THROWS_AS(reduce_to_2d(j, 1e-13), NotZPropagatingError);
  }
}
