#ifndef TTK_CHAINS_HPP_
#define TTK_CHAINS_HPP_

#include "ttk/report.hpp"
#include "ttk/resolution.hpp"
#include "ttk/tta.hpp"

#include <array>
#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace ttk {
namespace chains {

// Finite additive category given by tables. Hom sets list every element;
// missing add table means the hom carries no known abelian structure.
struct AddCategory {
  std::vector<std::string> objects;
  std::map<std::pair<std::string, std::string>, std::vector<std::string>> hom;
  std::map<std::pair<std::string, std::string>, std::size_t> zero;
  std::map<std::pair<std::string, std::string>,
           std::vector<std::vector<std::size_t>>>
      add;
  // compose[{a,b,c}][g][f] = index of g.f, f: a->b, g: b->c
  std::map<std::array<std::string, 3>,
           std::vector<std::vector<std::size_t>>>
      compose;
  std::map<std::string, std::size_t> unit;
  // (a, b, cell) -> class rep, for categories obtained from an algebra
  std::map<std::tuple<std::string, std::string, std::string>, std::string>
      class_of;

  std::size_t index(std::string const& a, std::string const& b,
                    std::string const& id) const;  // UnknownId
};

// Homotopy classes of an algebra with sums read off the cell labels
// (a+b names the sum of a and b, 0 the zero cell). Homs whose labels do
// not resolve are left without an add table.
AddCategory pi0_additive(tta::TwoTrackAlgebra const& A);

// objects for n_min..n_max, d[n]: objects[n+1] -> objects[n] below n_max.
// An augmented complex carries its target as the bottom object.
struct ChainComplex {
  int n_min = 0, n_max = 0;
  std::map<int, std::string> objects;
  std::map<int, std::string> d;
};

// clauses chain.shape and chain.dd (one entry per failing position)
Report check_chain(AddCategory const& C, ChainComplex const& X);

// exactness of hom(W, X_*) at every interior position, for each W listed.
// NotAdditive when a hom involved has no addition.
bool is_a_exact(AddCategory const& C, ChainComplex const& X,
                std::vector<std::string> const& a_objects);

// dimension over F2 of ker/im of hom(X_*, B) at position s.
// WindowExceeded outside [n_min, n_max-1]; NotAdditive when an involved
// hom is not an F2 vector space under its add table.
std::size_t ext_group_dim(AddCategory const& C, ChainComplex const& X,
                          std::string const& B, int s);

// Same group computed from a free resolution window: H^s of the dual
// complex into the degree t sphere. Does not assume minimality.
std::size_t ext_group_dim(resolution::MinimalResolution const& res, unsigned s,
                          unsigned t);

// Differentials as degree 0 cells plus a null path gamma[n] bounding each
// consecutive composite, for n_min <= n <= n_max-2.
struct SecondaryComplex {
  int n_min = 0, n_max = 0;
  std::map<int, std::string> objects;
  std::map<int, tta::Element> d;
  std::map<int, tta::Element> gamma;
};

// adds xi[n]: gamma[n] (x) d[n+2] => d[n] (x) gamma[n+1] up to n_max-3
struct TertiaryComplex {
  SecondaryComplex sec;
  std::map<int, tta::Element> xi;
};

// clauses chain.shape, chain.gamma resp. plus chain.xi
Report check_secondary(tta::TwoTrackAlgebra const& A,
                       SecondaryComplex const& S);
Report check_tertiary(tta::TwoTrackAlgebra const& A, TertiaryComplex const& T);

// the underlying complex of homotopy classes
ChainComplex induced_complex(AddCategory const& C, SecondaryComplex const& S);

// identity automorphism of the basepoint; the Element form wants degree 2
bool vanishes(tta::TwoTrackAlgebra const& A, tta::Track const& t);
bool vanishes(tta::TwoTrackAlgebra const& A, tta::Element const& c);

// Mismatch of the two ways gamma[n-1] and gamma[n] null the triple
// composite: a loop at the zero map of hom(objects[n+2], objects[n-1]).
// IndexOutOfWindow when either track is missing, SecondaryInvalid when
// the involved cells fail their boundary conditions.
tta::Track secondary_obstruction(tta::TwoTrackAlgebra const& A,
                                 SecondaryComplex const& S, int n);
bool is_secondary_chain_complex(tta::TwoTrackAlgebra const& A,
                                SecondaryComplex const& S);

// The cyclic composite of xi[n-1] (x) d[n+2], gamma[n-1] (x) gamma[n+1]
// and d[n-1] (x) xi[n], normalized to the basepoint of
// hom(objects[n+3], objects[n-1]).
tta::Element tertiary_obstruction(tta::TwoTrackAlgebra const& A,
                                  TertiaryComplex const& T, int n);
bool is_tertiary_chain_complex(tta::TwoTrackAlgebra const& A,
                               TertiaryComplex const& T);

// Replace the gamma (resp. xi) assignment so every obstruction vanishes,
// keeping objects and differentials (resp. also gamma). Backtracking
// search in increasing n, incumbent candidate first, then carrier order.
// NotAResolution when the induced complex fails check_chain or
// is_a_exact; NoCorrectionFound when the algebra holds no valid choice.
SecondaryComplex correct_1tracks(tta::TwoTrackAlgebra const& A,
                                 SecondaryComplex const& S,
                                 AddCategory const& C,
                                 std::vector<std::string> const& a_objects);
TertiaryComplex correct_2tracks(tta::TwoTrackAlgebra const& A,
                                TertiaryComplex const& T,
                                AddCategory const& C,
                                std::vector<std::string> const& a_objects);

// Lift a class level resolution to cells, then search gamma and xi.
TertiaryComplex build_resolution(tta::TwoTrackAlgebra const& A,
                                 AddCategory const& C,
                                 std::vector<std::string> const& a_objects,
                                 ChainComplex const& X);

}  // namespace chains
}  // namespace ttk
#endif  // TTK_CHAINS_HPP_
