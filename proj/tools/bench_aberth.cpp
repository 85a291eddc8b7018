// Micro-benchmark for the Aberth sweep kernels: sweeps/second at several
// degrees, scalar vs AVX2. Not part of the test suite.

#include <chrono>
#include <cstdio>
#include <random>
#include <vector>

#include "zdp/kernels.hpp"

namespace {

double bench(zdp::AberthSweepFn sweep, std::size_t degree, std::size_t reps) {
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> cdist(0.5, 20.0);
  std::uniform_real_distribution<double> zdist(-1.5, 1.5);
  std::vector<double> coeffs(degree + 1);
  for (auto& c : coeffs) c = cdist(rng);
  std::vector<double> zr(degree), zi(degree), wr(degree), wi(degree);
  for (std::size_t k = 0; k < degree; ++k) {
    zr[k] = zdist(rng);
    zi[k] = zdist(rng);
  }
  const auto t0 = std::chrono::steady_clock::now();
  for (std::size_t r = 0; r < reps; ++r)
    sweep(coeffs.data(), degree, zr.data(), zi.data(), degree, wr.data(),
          wi.data());
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  return static_cast<double>(reps) / secs;
}

}  // namespace

int main() {
  std::printf("%8s %14s %14s %8s\n", "degree", "scalar sw/s", "avx2 sw/s",
              "speedup");
  for (const std::size_t degree : {16u, 64u, 216u, 512u}) {
    const std::size_t reps = degree <= 64 ? 40000 : 2000;
    const double scalar = bench(zdp::aberth_sweep_scalar, degree, reps);
    double avx2 = 0.0;
#if ZDP_HAVE_AVX2_KERNEL
    if (zdp::avx2_available())
      avx2 = bench(zdp::aberth_sweep_avx2, degree, reps);
#endif
    if (avx2 > 0.0)
      std::printf("%8zu %14.0f %14.0f %7.2fx\n", degree, scalar, avx2,
                  avx2 / scalar);
    else
      std::printf("%8zu %14.0f %14s %8s\n", degree, scalar, "n/a", "-");
  }
  return 0;
}
