#include "ttk/gf2_dense.hpp"

namespace ttk {
namespace gf2 {

DenseMat dense_mul(DenseMat const& A, DenseMat const& B) {
  DenseMat C(A.rows(), B.cols());
  for (std::size_t i = 0; i < A.rows(); ++i) {
    for (std::size_t j = 0; j < B.cols(); ++j) {
      uint8_t s = 0;
      for (std::size_t k = 0; k < A.cols(); ++k) {
        s ^= (uint8_t)(A.at(i, k) & B.at(k, j));
      }
      C.at(i, j) = s;
    }
  }
  return C;
}

std::vector<std::size_t> dense_rref(DenseMat& A) {
  std::vector<std::size_t> pivots;
  std::size_t pr = 0;
  for (std::size_t c = 0; c < A.cols() && pr < A.rows(); ++c) {
    std::size_t sel = A.rows();
    for (std::size_t r = pr; r < A.rows(); ++r) {
      if (A.at(r, c)) {
        sel = r;
        break;
      }
    }
    if (sel == A.rows()) {
      continue;
    }
    if (sel != pr) {
      for (std::size_t j = 0; j < A.cols(); ++j) {
        uint8_t t = A.at(pr, j);
        A.at(pr, j) = A.at(sel, j);
        A.at(sel, j) = t;
      }
    }
    for (std::size_t r = 0; r < A.rows(); ++r) {
      if (r != pr && A.at(r, c)) {
        for (std::size_t j = 0; j < A.cols(); ++j) {
          A.at(r, j) ^= A.at(pr, j);
        }
      }
    }
    pivots.push_back(c);
    ++pr;
  }
  return pivots;
}

std::size_t dense_rank(DenseMat const& A) {
  DenseMat B = A;
  return dense_rref(B).size();
}

DenseMat dense_kernel(DenseMat const& A) {
  DenseMat R = A;
  auto pivots = dense_rref(R);
  std::vector<bool> is_pivot(A.cols(), false);
  for (auto c : pivots) {
    is_pivot[c] = true;
  }
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < A.cols(); ++c) {
    if (!is_pivot[c]) {
      free_cols.push_back(c);
    }
  }
  DenseMat K(free_cols.size(), A.cols());
  for (std::size_t i = 0; i < free_cols.size(); ++i) {
    K.at(i, free_cols[i]) = 1;
    for (std::size_t p = 0; p < pivots.size(); ++p) {
      if (R.at(p, free_cols[i])) {
        K.at(i, pivots[p]) = 1;
      }
    }
  }
  return K;
}

bool dense_solve(DenseMat const& A, std::vector<uint8_t> const& b,
                 std::vector<uint8_t>& x) {
  DenseMat Ab(A.rows(), A.cols() + 1);
  for (std::size_t r = 0; r < A.rows(); ++r) {
    for (std::size_t c = 0; c < A.cols(); ++c) {
      Ab.at(r, c) = A.at(r, c);
    }
    Ab.at(r, A.cols()) = b[r];
  }
  auto pivots = dense_rref(Ab);
  x.assign(A.cols(), 0);
  for (std::size_t p = 0; p < pivots.size(); ++p) {
    if (pivots[p] == A.cols()) {
      return false;
    }
    x[pivots[p]] = Ab.at(p, A.cols());
  }
  return true;
}

}  // namespace gf2
}  // namespace ttk
