#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ttk/gf2.hpp"
#include "ttk/gf2_dense.hpp"

#include <random>
#ifdef _OPENMP
#include <omp.h>
#endif

using ttk::gf2::BitMatrix;
using ttk::gf2::DenseMat;

namespace {

BitMatrix random_bit(std::mt19937& rng, std::size_t r, std::size_t c,
                     double density = 0.5) {
  BitMatrix A(r, c);
  std::bernoulli_distribution coin(density);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < c; ++j) {
      if (coin(rng)) {
        A.set(i, j, true);
      }
    }
  }
  return A;
}

DenseMat to_dense(BitMatrix const& A) {
  DenseMat D(A.rows(), A.cols());
  for (std::size_t i = 0; i < A.rows(); ++i) {
    for (std::size_t j = 0; j < A.cols(); ++j) {
      D.at(i, j) = A.get(i, j) ? 1 : 0;
    }
  }
  return D;
}

bool equal(BitMatrix const& A, DenseMat const& D) {
  if (A.rows() != D.rows() || A.cols() != D.cols()) {
    return false;
  }
  for (std::size_t i = 0; i < A.rows(); ++i) {
    for (std::size_t j = 0; j < A.cols(); ++j) {
      if ((A.get(i, j) ? 1 : 0) != D.at(i, j)) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace

TEST_CASE("bit get/set round trip across word boundaries") {
  BitMatrix A(3, 130);
  A.set(0, 0, true);
  A.set(1, 63, true);
  A.set(1, 64, true);
  A.set(2, 129, true);
  CHECK(A.get(0, 0));
  CHECK(A.get(1, 63));
  CHECK(A.get(1, 64));
  CHECK(A.get(2, 129));
  CHECK(!A.get(0, 1));
  A.set(1, 64, false);
  CHECK(!A.get(1, 64));
}

TEST_CASE("known rank and kernel") {
  // rows: 110, 011, 101 = sum of the first two; rank 2, kernel = <111>
  BitMatrix A(3, 3);
  A.set(0, 0, true);
  A.set(0, 1, true);
  A.set(1, 1, true);
  A.set(1, 2, true);
  A.set(2, 0, true);
  A.set(2, 2, true);
  CHECK(ttk::gf2::rank(A) == 2);
  auto K = ttk::gf2::kernel(A);
  REQUIRE(K.rows() == 1);
  CHECK(K.get(0, 0));
  CHECK(K.get(0, 1));
  CHECK(K.get(0, 2));
}

TEST_CASE("packed agrees with dense reference on random matrices") {
  std::mt19937 rng(20260825);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t r = 1 + rng() % 90;
    std::size_t c = 1 + rng() % 90;
    BitMatrix A = random_bit(rng, r, c, 0.3);
    DenseMat D = to_dense(A);

    CHECK(ttk::gf2::rank(A) == ttk::gf2::dense_rank(D));

    BitMatrix R = A;
    DenseMat S = D;
    auto p1 = ttk::gf2::rref(R);
    auto p2 = ttk::gf2::dense_rref(S);
    CHECK(p1 == p2);
    CHECK(equal(R, S));

    auto K1 = ttk::gf2::kernel(A);
    auto K2 = ttk::gf2::dense_kernel(D);
    CHECK(equal(K1, K2));

    // kernel rows really are in the kernel
    for (std::size_t i = 0; i < K1.rows(); ++i) {
      for (std::size_t row = 0; row < A.rows(); ++row) {
        int s = 0;
        for (std::size_t j = 0; j < A.cols(); ++j) {
          s ^= (A.get(row, j) && K1.get(i, j)) ? 1 : 0;
        }
        CHECK(s == 0);
      }
    }
    CHECK(K1.rows() == A.cols() - ttk::gf2::rank(A));
  }
}

TEST_CASE("mul agrees with dense reference") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t m = 1 + rng() % 50;
    std::size_t k = 1 + rng() % 50;
    std::size_t n = 1 + rng() % 50;
    BitMatrix A = random_bit(rng, m, k);
    BitMatrix B = random_bit(rng, k, n);
    CHECK(equal(ttk::gf2::mul(A, B),
                ttk::gf2::dense_mul(to_dense(A), to_dense(B))));
  }
}

TEST_CASE("solve finds a solution exactly when dense does") {
  std::mt19937 rng(99);
  int solvable = 0;
  for (int trial = 0; trial < 80; ++trial) {
    std::size_t r = 1 + rng() % 30;
    std::size_t c = 1 + rng() % 30;
    BitMatrix A = random_bit(rng, r, c, 0.4);
    std::vector<bool> b(r);
    std::vector<uint8_t> bd(r);
    for (std::size_t i = 0; i < r; ++i) {
      b[i] = rng() & 1;
      bd[i] = b[i] ? 1 : 0;
    }
    std::vector<bool> x;
    std::vector<uint8_t> xd;
    bool ok1 = ttk::gf2::solve(A, b, x);
    bool ok2 = ttk::gf2::dense_solve(to_dense(A), bd, xd);
    CHECK(ok1 == ok2);
    if (ok1) {
      ++solvable;
      for (std::size_t i = 0; i < r; ++i) {
        int s = 0;
        for (std::size_t j = 0; j < c; ++j) {
          s ^= (A.get(i, j) && x[j]) ? 1 : 0;
        }
        CHECK(s == (b[i] ? 1 : 0));
      }
    }
  }
  CHECK(solvable > 0);
}

TEST_CASE("in_row_span") {
  BitMatrix A(2, 3);
  A.set(0, 0, true);
  A.set(0, 1, true);
  A.set(1, 1, true);
  A.set(1, 2, true);
  CHECK(ttk::gf2::in_row_span(A, {true, false, true}));
  CHECK(ttk::gf2::in_row_span(A, {false, false, false}));
  CHECK(!ttk::gf2::in_row_span(A, {true, false, false}));
}

TEST_CASE("rref result is independent of thread count") {
  std::mt19937 rng(5150);
  BitMatrix A = random_bit(rng, 120, 200, 0.2);
#ifdef _OPENMP
  BitMatrix R1 = A;
  omp_set_num_threads(1);
  auto p1 = ttk::gf2::rref(R1);
  BitMatrix R4 = A;
  omp_set_num_threads(4);
  auto p4 = ttk::gf2::rref(R4);
  CHECK(p1 == p4);
  CHECK(R1 == R4);
#else
  BitMatrix R1 = A;
  auto p1 = ttk::gf2::rref(R1);
  BitMatrix R2 = A;
  auto p2 = ttk::gf2::rref(R2);
  CHECK(p1 == p2);
  CHECK(R1 == R2);
#endif
}

TEST_CASE("transpose and identity") {
  BitMatrix A(2, 3);
  A.set(0, 2, true);
  A.set(1, 0, true);
  auto T = ttk::gf2::transpose(A);
  CHECK(T.rows() == 3);
  CHECK(T.get(2, 0));
  CHECK(T.get(0, 1));
  auto I = ttk::gf2::identity(4);
  CHECK(ttk::gf2::mul(I, I) == I);
  CHECK(ttk::gf2::rank(I) == 4);
}
