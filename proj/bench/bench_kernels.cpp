// Times each OpenMP kernel against its serial reference on identical inputs
// and reports the speedup plus the worst entrywise deviation.
//
// Usage: bench_kernels [cutoff] [extent_samples] [repeats]

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <vector>

#include "stokes3d/fock.hpp"
#include "stokes3d/kernels.hpp"
#include "stokes3d/stokes_quantum.hpp"

namespace {

using stokes3d::cplx;
namespace kernels = stokes3d::kernels;

double time_ms(const std::function<void()>& fn, int repeats) {
  double best = 1e300;
  for (int r = 0; r < repeats; ++r) {
    const auto t0 = std::chrono::steady_clock::now();
    fn();
    const auto t1 = std::chrono::steady_clock::now();
    const double ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    if (ms < best) best = ms;
  }
  return best;
}

void report(const char* name, double serial_ms, double omp_ms, double deviation) {
  std::printf("%-20s serial %10.3f ms   omp %10.3f ms   speedup %5.2fx   max dev %.3e\n",
              name, serial_ms, omp_ms, omp_ms > 0.0 ? serial_ms / omp_ms : 0.0,
              deviation);
}

}  // namespace

int main(int argc, char** argv) {
  int cutoff = 10;
  long extent_samples = 200000;
  int repeats = 3;
  if (argc > 1) cutoff = std::atoi(argv[1]);
  if (argc > 2) extent_samples = std::atol(argv[2]);
  if (argc > 3) repeats = std::atoi(argv[3]);
  if (cutoff < 2 || cutoff > 64 || extent_samples < 4 || repeats < 1) {
    std::fprintf(stderr,
                 "usage: bench_kernels [cutoff 2..64] [extent_samples >= 4] [repeats >= 1]\n");
    return 2;
  }

  const stokes3d::FockBasis basis(cutoff);
  std::printf("openmp enabled: %s, max threads: %d\n",
              kernels::openmp_enabled() ? "yes" : "no", kernels::max_threads());
  std::printf("fock cutoff %d (dimension %d), extent samples %ld, repeats %d\n\n",
              cutoff, basis.dim(), extent_samples, repeats);

  const stokes3d::StokesOperatorSet ops(basis);
  const stokes3d::SparseOperator& s1 = ops.sigma(1);
  const stokes3d::SparseOperator& s4 = ops.sigma(4);

  const int n = basis.dim();
  std::vector<cplx> x(n);
  for (int i = 0; i < n; ++i)
    x[i] = cplx(std::cos(0.37 * i), std::sin(0.11 * i));

  {
    std::vector<cplx> ys(n), yp(n);
    const double ts =
        time_ms([&] { kernels::matvec_serial(s1, x.data(), ys.data()); }, repeats);
    const double tp =
        time_ms([&] { kernels::matvec_omp(s1, x.data(), yp.data()); }, repeats);
    double dev = 0.0;
    for (int i = 0; i < n; ++i) dev = std::max(dev, std::abs(ys[i] - yp[i]));
    report("matvec", ts, tp, dev);
  }

  {
    cplx ds{}, dp{};
    const double ts =
        time_ms([&] { ds = kernels::dot_serial(x.data(), x.data(), n); }, repeats);
    const double tp =
        time_ms([&] { dp = kernels::dot_omp(x.data(), x.data(), n); }, repeats);
    report("dot", ts, tp, std::abs(ds - dp));
  }

  {
    stokes3d::SparseOperator ps(basis), pp(basis);
    const double ts =
        time_ms([&] { ps = kernels::multiply_serial(s1, s4); }, repeats);
    const double tp = time_ms([&] { pp = kernels::multiply_omp(s1, s4); }, repeats);
    report("sparse multiply", ts, tp, ps.max_abs_diff(pp));
  }

  {
    const cplx a1(0.9, -0.3), a2(-0.5, 0.7), a3(0.2, 0.4);
    std::vector<cplx> cs, cp;
    const double ts = time_ms(
        [&] { cs = kernels::coherent_coefficients_serial(basis, a1, a2, a3); },
        repeats);
    const double tp = time_ms(
        [&] { cp = kernels::coherent_coefficients_omp(basis, a1, a2, a3); },
        repeats);
    double dev = 0.0;
    for (int i = 0; i < n; ++i) dev = std::max(dev, std::abs(cs[i] - cp[i]));
    report("coherent state", ts, tp, dev);
  }

  {
    const stokes3d::Vec3 a{1.3, -0.2, 0.8};
    const stokes3d::Vec3 b{0.1, 0.9, -0.4};
    kernels::ExtentScan ss{}, sp{};
    const double ts = time_ms(
        [&] { ss = kernels::orbit_extent_serial(a, b, extent_samples); }, repeats);
    const double tp = time_ms(
        [&] { sp = kernels::orbit_extent_omp(a, b, extent_samples); }, repeats);
    const double dev =
        std::max(std::max(std::abs(ss.r2_max - sp.r2_max),
                          std::abs(ss.r2_min - sp.r2_min)),
                 std::max(std::abs(ss.t_max - sp.t_max),
                          std::abs(ss.t_min - sp.t_min)));
    report("orbit extent scan", ts, tp, dev);
  }

  return 0;
}
