#ifndef TTK_BALLS_HPP_
#define TTK_BALLS_HPP_

#include "ttk/report.hpp"
#include "ttk/tta.hpp"
#include "ttk/ttg.hpp"

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace ttk {
namespace balls {

// Normal form of a two dimensional ball: k closed cells around the center
// vertex, cell i glued to cell i+1 (cyclically) along edge i.
struct CkDescriptor {
  std::size_t k;
  // interior edges of each cell, counterclockwise: {previous, own}
  std::vector<std::array<std::size_t, 2>> cell_edges;
};

// InvalidK below 2
CkDescriptor normalize_ball(std::size_t k);

// Cyclic chain of degree 2 cells of hom(from, to), each used either as
// stored (+1) or inverted (-1). Entry i feeds entry i+1; the last one
// closes up on the first.
struct BallChain {
  std::string from, to;
  std::vector<std::pair<tta::Element, int>> entries;
};

// clauses ball.k, ball.cell, ball.composable
Report validate_chain(tta::TwoTrackAlgebra const& A, BallChain const& ch);

// Composite of the whole cycle, an automorphism of the starting null
// path, normalized to the basepoint. Rotating the chain does not change
// the value. InvalidChain when validate_chain fails.
tta::Element obstruction(tta::TwoTrackAlgebra const& A, BallChain const& ch);

struct AlgCubView {
  tta::HomotopyCategory pi0;
  // D(a,b): the abelian group of basepoint automorphisms of hom(a,b)
  std::map<std::pair<std::string, std::string>, ttg::GroupTable> D;
};

AlgCubView alg_cub(tta::TwoTrackAlgebra const& A);

// the two actions making D a functor on the homotopy category: precompose
// with a degree 0 cell (contravariant slot), or postcompose (covariant)
tta::Element d_act_right(tta::TwoTrackAlgebra const& A, tta::Element const& m,
                         tta::Element const& f);
tta::Element d_act_left(tta::TwoTrackAlgebra const& A, tta::Element const& g,
                        tta::Element const& m);

// Seeded random walk through the track groupoid of hom(from, to), closed
// up after k steps. Requires a degree 2 cell out of some null path.
BallChain random_chain(tta::TwoTrackAlgebra const& A, std::string const& from,
                       std::string const& to, std::size_t k,
                       std::uint64_t seed);

BallChain rotated(BallChain const& ch, std::size_t by);

}  // namespace balls
}  // namespace ttk
#endif  // TTK_BALLS_HPP_
