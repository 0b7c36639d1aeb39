#ifndef TTK_GF2_HPP_
#define TTK_GF2_HPP_

#include <cstdint>
#include <vector>

namespace ttk {
namespace gf2 {

// Dense GF(2) matrix, 64 entries per word, row major. Row reduction always
// picks the first usable pivot row scanning top down, so results do not
// depend on the number of threads.
class BitMatrix {
 public:
  BitMatrix() : rows_(0), cols_(0), stride_(0) {}
  BitMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), stride_((cols + 63) / 64),
        words_(rows * stride_, 0) {}

  std::size_t rows() const noexcept {
    return rows_;
  }
  std::size_t cols() const noexcept {
    return cols_;
  }

  bool get(std::size_t r, std::size_t c) const {
    return (words_[r * stride_ + c / 64] >> (c % 64)) & 1u;
  }

  void set(std::size_t r, std::size_t c, bool v) {
    uint64_t& w = words_[r * stride_ + c / 64];
    uint64_t m = uint64_t(1) << (c % 64);
    w = v ? (w | m) : (w & ~m);
  }

  void flip(std::size_t r, std::size_t c) {
    words_[r * stride_ + c / 64] ^= uint64_t(1) << (c % 64);
  }

  // row(r) ^= row(s)
  void xor_row(std::size_t r, std::size_t s) {
    uint64_t* a = &words_[r * stride_];
    uint64_t const* b = &words_[s * stride_];
    for (std::size_t i = 0; i < stride_; ++i) {
      a[i] ^= b[i];
    }
  }

  void swap_rows(std::size_t r, std::size_t s);

  bool row_is_zero(std::size_t r) const;

  std::vector<bool> row(std::size_t r) const;
  void set_row(std::size_t r, std::vector<bool> const& v);

  bool operator==(BitMatrix const& that) const {
    return rows_ == that.rows_ && cols_ == that.cols_
           && words_ == that.words_;
  }

  uint64_t const* row_words(std::size_t r) const {
    return &words_[r * stride_];
  }
  uint64_t* row_words(std::size_t r) {
    return &words_[r * stride_];
  }
  std::size_t stride() const noexcept {
    return stride_;
  }

 private:
  std::size_t rows_, cols_, stride_;
  std::vector<uint64_t> words_;
};

// C = A * B over GF(2). Parallel over rows of A.
BitMatrix mul(BitMatrix const& A, BitMatrix const& B);

BitMatrix add(BitMatrix const& A, BitMatrix const& B);

BitMatrix transpose(BitMatrix const& A);

BitMatrix identity(std::size_t n);

// In-place reduced row echelon form. Returns pivot columns in increasing
// order. Elimination of non-pivot rows runs in parallel per pivot.
std::vector<std::size_t> rref(BitMatrix& A);

std::size_t rank(BitMatrix const& A);

// Basis of the right kernel {x : A x = 0}, rows of the result. Basis vectors
// are in increasing order of their free column.
BitMatrix kernel(BitMatrix const& A);

// Solves A x = b. Returns false if inconsistent; x has size cols().
bool solve(BitMatrix const& A, std::vector<bool> const& b,
           std::vector<bool>& x);

// Row span membership: is v in the span of the rows of A?
bool in_row_span(BitMatrix const& A, std::vector<bool> const& v);

}  // namespace gf2
}  // namespace ttk
#endif  // TTK_GF2_HPP_
