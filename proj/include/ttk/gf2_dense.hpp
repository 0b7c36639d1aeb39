#ifndef TTK_GF2_DENSE_HPP_
#define TTK_GF2_DENSE_HPP_

#include <cstdint>
#include <cstddef>
#include <vector>

namespace ttk {
namespace gf2 {

// Byte-per-entry GF(2) matrix with textbook serial elimination. Used as a
// cross check for BitMatrix and in tests; keep this implementation
// independent of the packed one.
class DenseMat {
 public:
  DenseMat() : rows_(0), cols_(0) {}
  DenseMat(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols, 0) {}

  std::size_t rows() const noexcept {
    return rows_;
  }
  std::size_t cols() const noexcept {
    return cols_;
  }

  uint8_t& at(std::size_t r, std::size_t c) {
    return a_[r * cols_ + c];
  }
  uint8_t at(std::size_t r, std::size_t c) const {
    return a_[r * cols_ + c];
  }

  bool operator==(DenseMat const& that) const {
    return rows_ == that.rows_ && cols_ == that.cols_ && a_ == that.a_;
  }

 private:
  std::size_t rows_, cols_;
  std::vector<uint8_t> a_;
};

DenseMat dense_mul(DenseMat const& A, DenseMat const& B);
std::vector<std::size_t> dense_rref(DenseMat& A);
std::size_t dense_rank(DenseMat const& A);
DenseMat dense_kernel(DenseMat const& A);
bool dense_solve(DenseMat const& A, std::vector<uint8_t> const& b,
                 std::vector<uint8_t>& x);

}  // namespace gf2
}  // namespace ttk
#endif  // TTK_GF2_DENSE_HPP_
