// Times the packed GF(2) kernels against the byte-per-entry reference.
// Usage: gf2_bench [size] [trials]

#include "ttk/gf2.hpp"
#include "ttk/gf2_dense.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <random>
#ifdef _OPENMP
#include <omp.h>
#endif

using Clock = std::chrono::steady_clock;

static double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

int main(int argc, char** argv) {
  std::size_t n = argc > 1 ? std::strtoul(argv[1], nullptr, 10) : 512;
  int trials = argc > 2 ? std::atoi(argv[2]) : 3;

  std::mt19937 rng(42);
  ttk::gf2::BitMatrix A(n, n);
  ttk::gf2::DenseMat D(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      bool v = rng() & 1;
      A.set(i, j, v);
      D.at(i, j) = v ? 1 : 0;
    }
  }

#ifdef _OPENMP
  std::printf("openmp: max %d thread(s)\n", omp_get_max_threads());
#else
  std::printf("openmp: disabled\n");
#endif
  std::printf("matrix: %zu x %zu, %d trial(s)\n\n", n, n, trials);

  double packed_best = 1e300, dense_best = 1e300;
  std::size_t rp = 0, rd = 0;
  for (int t = 0; t < trials; ++t) {
    auto t0 = Clock::now();
    rp = ttk::gf2::rank(A);
    packed_best = std::min(packed_best, ms_since(t0));

    t0 = Clock::now();
    rd = ttk::gf2::dense_rank(D);
    dense_best = std::min(dense_best, ms_since(t0));
  }
  std::printf("rank   packed %8.2f ms   dense %8.2f ms   speedup %.1fx\n",
              packed_best, dense_best, dense_best / packed_best);
  if (rp != rd) {
    std::printf("RANK MISMATCH: packed %zu dense %zu\n", rp, rd);
    return 1;
  }

  packed_best = dense_best = 1e300;
  for (int t = 0; t < trials; ++t) {
    auto t0 = Clock::now();
    auto C = ttk::gf2::mul(A, A);
    packed_best = std::min(packed_best, ms_since(t0));
    (void) C;

    t0 = Clock::now();
    auto E = ttk::gf2::dense_mul(D, D);
    dense_best = std::min(dense_best, ms_since(t0));
    (void) E;
  }
  std::printf("mul    packed %8.2f ms   dense %8.2f ms   speedup %.1fx\n",
              packed_best, dense_best, dense_best / packed_best);
  return 0;
}
