#ifndef TTK_STEENROD_HPP_
#define TTK_STEENROD_HPP_

#include "ttk/gf2.hpp"

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace ttk {
namespace steenrod {

// Exponent sequence (i1,...,ik) standing for Sq^{i1}...Sq^{ik}. Admissible
// means i_j >= 2*i_{j+1} and i_k >= 1; the empty sequence is the unit.
using Monomial = std::vector<unsigned>;

unsigned degree(Monomial const& m);
bool is_admissible(Monomial const& m);

// Homogeneous GF(2) combination of admissible monomials of one degree.
// Support is kept sorted (lexicographic) without repeats.
struct Element {
  std::vector<Monomial> support;

  bool is_zero() const noexcept {
    return support.empty();
  }
  bool operator==(Element const& that) const {
    return support == that.support;
  }
};

Element zero_element();
Element unit_element();
Element sq(unsigned n);
Element add(Element const& a, Element const& b);

// Rewrites an arbitrary word of exponents (all >= 1) into the admissible
// basis using the Adem relations. Memoized per thread.
Element adem_reduce(Monomial const& word);

Element multiply(Element const& a, Element const& b);

// All admissible monomials of degree n, lexicographically sorted.
std::vector<Monomial> const& admissible_basis(unsigned n);

// Dimension of the degree-n part of the algebra, counted in the admissible
// basis and re-counted as Milnor sequences (sum r_i (2^i - 1) = n). Throws
// BasisMismatch if the two counts disagree.
std::size_t dim_A(unsigned n);

std::string to_string(Monomial const& m);
std::string to_string(Element const& e);

// Accepts "0", "1", "Sq(i1,...,ik)" and '+'-separated sums thereof. Words
// are reduced to the admissible basis.
Element parse_element(std::string const& s);

// Free graded module over the algebra, given by generators with degrees.
struct FreeModule {
  struct Gen {
    std::string id;
    unsigned degree;
  };
  std::vector<Gen> gens;
};

// Element of a free module: GF(2) set of (generator index, admissible
// monomial) pairs, i.e. sum of Sq^m * g. Homogeneous.
using FreeElem = std::vector<std::pair<std::size_t, Monomial>>;

// Basis of the degree-t part of a free module: (gen, monomial) pairs sorted
// by generator index then monomial. This fixes all matrix column orders.
struct DegreeBasis {
  std::vector<std::pair<std::size_t, Monomial>> elems;
  std::map<std::pair<std::size_t, Monomial>, std::size_t> index;
};

DegreeBasis free_basis(FreeModule const& F, unsigned t);

// Presentation of a module as free gens modulo the submodule generated by
// relation elements. Relations may sit in any degree.
struct ModulePresentation {
  FreeModule free;
  std::vector<FreeElem> rels;
};

ModulePresentation f2_module(unsigned t_max);

// Graded pieces of a presented module through degree t_max, with the Sq
// action. Degree-t coordinates refer to the stored quotient basis.
class TruncatedModule {
 public:
  TruncatedModule(ModulePresentation const& pres, unsigned t_max);

  unsigned t_max() const noexcept {
    return t_max_;
  }
  std::size_t dim(unsigned t) const;

  // Matrix of Sq^j from degree t to degree t+j; row r = image of the r-th
  // degree-t basis vector.
  gf2::BitMatrix sq_action(unsigned j, unsigned t) const;

 private:
  unsigned t_max_;
  // per degree: pivot columns of the relation span inside the free module,
  // rref rows for reduction, and the surviving (non-pivot) columns
  struct Piece {
    DegreeBasis free_basis;
    gf2::BitMatrix rel_rref;
    std::vector<std::size_t> rel_pivots;
    std::vector<std::size_t> coset_cols;
  };
  std::vector<Piece> pieces_;

  std::vector<bool> reduce_to_coords(unsigned t, std::vector<bool> free_vec)
      const;
};

}  // namespace steenrod
}  // namespace ttk
#endif  // TTK_STEENROD_HPP_
