#ifndef TTK_TTG_HPP_
#define TTK_TTG_HPP_

#include "ttk/gpd.hpp"
#include "ttk/report.hpp"

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace ttk {
namespace ttg {

// Degrees: 0 for g1 objects, 1 for g2 objects, 2 for g2 morphisms. The g2
// objects play the role of null paths; q sends each to the g1 morphism it
// bounds, landing in the star of the basepoint.
struct TwoTrackGroupoid {
  gpd::PointedGroupoid g1;
  gpd::StrictlyAbelianGroupoid g2;
  std::vector<std::size_t> q;  // per g2 object: a g1 morphism index

  TwoTrackGroupoid(gpd::PointedGroupoid g1_in,
                   gpd::StrictlyAbelianGroupoid g2_in,
                   std::map<std::string, std::string> const& q_by_id);

  std::size_t q_of(std::size_t g2_obj) const {
    return q[g2_obj];
  }
  bool is_connected() const {
    return g1.G.n_components() == 1;
  }
};

// Finite group presented by a full multiplication table.
struct GroupTable {
  std::vector<std::string> elems;
  std::size_t id_elem;
  std::vector<std::vector<std::size_t>> mul;
  std::vector<std::size_t> inv;

  std::size_t index(std::string const& e) const;
  bool is_abelian() const;
  std::size_t order() const noexcept {
    return elems.size();
  }
};

// group of automorphisms of x under composition, element order = id order
GroupTable aut_group(gpd::Groupoid const& G, std::size_t x);

// true if m is a bijective homomorphism A -> B given on element ids
bool is_group_iso(GroupTable const& A, GroupTable const& B,
                  std::map<std::string, std::string> const& m);

struct HomotopyGroups {
  std::vector<std::string> pi0;  // least object id per g1 component
  std::size_t pi0_base;          // which entry holds the basepoint
  GroupTable pi1, pi2;
};

// underlying groupoid laws (prefixed g1/g2), abelian structure, and the
// q clauses: ttg.q_pointed, ttg.q_star, ttg.q_constant, ttg.q_surjective,
// ttg.q_bijective
Report validate_ttg(TwoTrackGroupoid const& G);

// throws NotAbelian if the degree-2 automorphism group fails commutativity
HomotopyGroups homotopy_groups(TwoTrackGroupoid const& G);

TwoTrackGroupoid product(TwoTrackGroupoid const& A,
                         TwoTrackGroupoid const& B);

struct TtgMorphism {
  gpd::Functor f1, f2;
};

// pointed functor checks plus the two squares from the morphism
// definition: ttg.morphism_psi and ttg.morphism_q
Report check_morphism(TtgMorphism const& F, TwoTrackGroupoid const& dom,
                      TwoTrackGroupoid const& cod);

// throws InvalidMorphism when check_morphism fails
bool is_weak_equivalence(TtgMorphism const& F, TwoTrackGroupoid const& dom,
                         TwoTrackGroupoid const& cod);

// skeletal replacement of the degree-0 part; the morphism includes the
// result back into G and is a weak equivalence
std::pair<TwoTrackGroupoid, TtgMorphism> sk1(TwoTrackGroupoid const& G);

// skeletal replacement of the degree-1 part; requires G connected with
// skeletal g1, else PreconditionFailed
std::pair<TwoTrackGroupoid, TtgMorphism> sk2(TwoTrackGroupoid const& G);

// connected skeletal model with prescribed homotopy groups; psi tables are
// identity copies. Throws NotAbelian.
TwoTrackGroupoid build_skeletal(GroupTable const& pi1,
                                GroupTable const& pi2);

// weak equivalence between connected skeletal models realizing the group
// isomorphisms phi1, phi2 (object map through q, automorphism map through
// psi). Throws PreconditionFailed / NotIsomorphism.
TtgMorphism connect_weak_equivalence(
    TwoTrackGroupoid const& G, TwoTrackGroupoid const& H,
    std::map<std::string, std::string> const& phi1,
    std::map<std::string, std::string> const& phi2);

}  // namespace ttg
}  // namespace ttk
#endif  // TTK_TTG_HPP_
