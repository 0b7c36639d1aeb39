#ifndef TTK_FIXTURES_HPP_
#define TTK_FIXTURES_HPP_

#include "ttk/balls.hpp"
#include "ttk/chains.hpp"
#include "ttk/em_model.hpp"
#include "ttk/gpd.hpp"
#include "ttk/steenrod.hpp"
#include "ttk/tta.hpp"
#include "ttk/ttg.hpp"

#include <string>
#include <vector>

namespace ttk {
namespace fixtures {

// two objects x, y joined by mutually inverse f, g
gpd::Groupoid gf1();

// one object "<prefix>o", automorphisms <prefix>0..<prefix>(n-1) forming
// a cyclic group under addition of indices
gpd::Groupoid cyclic_groupoid(unsigned n, std::string const& prefix);

// two objects u, v with Aut = Z/n, connected; morphism labels add. u_g and
// v_g are automorphisms, a_g runs u to v, b_g runs v to u.
gpd::Groupoid connected_cyclic(unsigned n);

// every id prefixed, cross references included
gpd::GroupoidData renamed(gpd::GroupoidData d, std::string const& prefix);

// Valid but nowhere skeletal: g1 = connected_cyclic(2) pointed at u, one
// two-object null path component per element of the star of u. pi0 is a
// point, pi1 = pi2 = Z/2. Every id gets |prefix|.
ttg::TwoTrackGroupoid fat_ttg(std::string const& prefix = "");

// Four objects Y0..Y3 with one generating map each of Y1->Y0 .. Y0->Y3,
// consecutive composites bounded by tracks. with_za controls a second
// nullhomotopy of x1 x2, with_mpp a second degree 2 cell over hom(Y0,Y1).
// Both brackets <x1,x2,x3> and <x1,x2,x3,x4> are defined; they contain 0
// exactly when the corresponding extra cell is present.
em::AlgebraData t1_data(std::string const& prefix = "", bool with_za = true,
                        bool with_mpp = true);
tta::TwoTrackAlgebra t1_algebra(std::string const& prefix = "",
                                bool with_za = true, bool with_mpp = true);

// single object Z, every hom the zero complex
tta::TwoTrackAlgebra terminal_algebra();

// prefix every basis name occurring in a composite cell id, leaving the
// zero summand and the (|+) punctuation alone
std::string prefix_cell_id(std::string const& id, std::string const& prefix);

// isomorphism t1_algebra() -> t1_algebra(prefix) given by prefix_cell_id
tta::TtaMorphism t1_relabel(std::string const& prefix);

// three cell cycle over hom(Y0,Y1) of t1_algebra() with obstruction (0|mpp)
balls::BallChain b1_chain();

// Window [0,4] over t1_algebra(prefix): Y0 <- Y1 <- Y2 <- Y3 <- Y0 along
// x1..x4, bounded by the first tracks a0, b0, c0. The obstruction at n = 1
// is (0|p+r); replacing a0 by a0+za repairs it.
chains::SecondaryComplex s1_secondary(std::string const& prefix = "");

// Repaired tracks plus the first choice of fillers (r|0), (pp|mp). The
// obstruction at n = 1 is (0|om); replacing (pp|mp) by (pp|mp+mpp)
// repairs it.
chains::TertiaryComplex t1c_tertiary(std::string const& prefix = "");

// Degree zero module maps between the free modules of a minimal
// resolution window, with identity tracks only. lift names the
// differentials, carriers the objects F0..Fs. Hom dimensions must stay
// within the table cap, so keep the window small.
struct DiscreteResolution {
  em::AlgebraData data;
  chains::ChainComplex lift;
  std::vector<std::string> carriers;
};
DiscreteResolution discrete_resolution(steenrod::ModulePresentation const& pres,
                                       unsigned s_max, unsigned t_max);

}  // namespace fixtures
}  // namespace ttk
#endif  // TTK_FIXTURES_HPP_
