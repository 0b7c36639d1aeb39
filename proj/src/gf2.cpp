#include "ttk/gf2.hpp"

#include <algorithm>
#include <cstddef>

namespace ttk {
namespace gf2 {

void BitMatrix::swap_rows(std::size_t r, std::size_t s) {
  if (r == s) {
    return;
  }
  uint64_t* a = &words_[r * stride_];
  uint64_t* b = &words_[s * stride_];
  for (std::size_t i = 0; i < stride_; ++i) {
    std::swap(a[i], b[i]);
  }
}

bool BitMatrix::row_is_zero(std::size_t r) const {
  uint64_t const* a = &words_[r * stride_];
  for (std::size_t i = 0; i < stride_; ++i) {
    if (a[i] != 0) {
      return false;
    }
  }
  return true;
}

std::vector<bool> BitMatrix::row(std::size_t r) const {
  std::vector<bool> v(cols_);
  for (std::size_t c = 0; c < cols_; ++c) {
    v[c] = get(r, c);
  }
  return v;
}

void BitMatrix::set_row(std::size_t r, std::vector<bool> const& v) {
  for (std::size_t c = 0; c < cols_ && c < v.size(); ++c) {
    set(r, c, v[c]);
  }
}

BitMatrix mul(BitMatrix const& A, BitMatrix const& B) {
  BitMatrix C(A.rows(), B.cols());
  std::size_t const st = B.stride();
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
  for (long long ri = 0; ri < (long long) A.rows(); ++ri) {
    auto r = (std::size_t) ri;
    uint64_t* out = C.row_words(r);
    for (std::size_t k = 0; k < A.cols(); ++k) {
      if (A.get(r, k)) {
        uint64_t const* bk = B.row_words(k);
        for (std::size_t i = 0; i < st; ++i) {
          out[i] ^= bk[i];
        }
      }
    }
  }
  return C;
}

BitMatrix add(BitMatrix const& A, BitMatrix const& B) {
  BitMatrix C = A;
  for (std::size_t r = 0; r < A.rows(); ++r) {
    uint64_t* out = C.row_words(r);
    uint64_t const* in = B.row_words(r);
    for (std::size_t i = 0; i < A.stride(); ++i) {
      out[i] ^= in[i];
    }
  }
  return C;
}

BitMatrix transpose(BitMatrix const& A) {
  BitMatrix T(A.cols(), A.rows());
  for (std::size_t r = 0; r < A.rows(); ++r) {
    for (std::size_t c = 0; c < A.cols(); ++c) {
      if (A.get(r, c)) {
        T.set(c, r, true);
      }
    }
  }
  return T;
}

BitMatrix identity(std::size_t n) {
  BitMatrix I(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    I.set(i, i, true);
  }
  return I;
}

std::vector<std::size_t> rref(BitMatrix& A) {
  std::vector<std::size_t> pivots;
  std::size_t pr = 0;  // next pivot row
  for (std::size_t c = 0; c < A.cols() && pr < A.rows(); ++c) {
    std::size_t sel = A.rows();
    for (std::size_t r = pr; r < A.rows(); ++r) {
      if (A.get(r, c)) {
        sel = r;
        break;
      }
    }
    if (sel == A.rows()) {
      continue;
    }
    A.swap_rows(pr, sel);
    // clear column c in every other row; rows are independent here
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
    for (long long ri = 0; ri < (long long) A.rows(); ++ri) {
      auto r = (std::size_t) ri;
      if (r != pr && A.get(r, c)) {
        A.xor_row(r, pr);
      }
    }
    pivots.push_back(c);
    ++pr;
  }
  return pivots;
}

std::size_t rank(BitMatrix const& A) {
  BitMatrix B = A;
  return rref(B).size();
}

BitMatrix kernel(BitMatrix const& A) {
  BitMatrix R = A;
  auto pivots = rref(R);
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
  BitMatrix K(free_cols.size(), A.cols());
  for (std::size_t i = 0; i < free_cols.size(); ++i) {
    std::size_t fc = free_cols[i];
    K.set(i, fc, true);
    for (std::size_t p = 0; p < pivots.size(); ++p) {
      if (R.get(p, fc)) {
        K.set(i, pivots[p], true);
      }
    }
  }
  return K;
}

bool solve(BitMatrix const& A, std::vector<bool> const& b,
           std::vector<bool>& x) {
  // reduce [A | b]
  BitMatrix Ab(A.rows(), A.cols() + 1);
  for (std::size_t r = 0; r < A.rows(); ++r) {
    uint64_t* out = Ab.row_words(r);
    uint64_t const* in = A.row_words(r);
    for (std::size_t i = 0; i < A.stride(); ++i) {
      out[i] = in[i];
    }
    Ab.set(r, A.cols(), b[r]);
  }
  auto pivots = rref(Ab);
  x.assign(A.cols(), false);
  for (std::size_t p = 0; p < pivots.size(); ++p) {
    if (pivots[p] == A.cols()) {
      return false;  // pivot in the augmented column
    }
    x[pivots[p]] = Ab.get(p, A.cols());
  }
  return true;
}

bool in_row_span(BitMatrix const& A, std::vector<bool> const& v) {
  BitMatrix B(A.rows() + 1, A.cols());
  for (std::size_t r = 0; r < A.rows(); ++r) {
    uint64_t* out = B.row_words(r);
    uint64_t const* in = A.row_words(r);
    for (std::size_t i = 0; i < A.stride(); ++i) {
      out[i] = in[i];
    }
  }
  B.set_row(A.rows(), v);
  return rank(B) == rank(A);
}

}  // namespace gf2
}  // namespace ttk
