#ifndef TTK_GPD_HPP_
#define TTK_GPD_HPP_

#include "ttk/report.hpp"

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace ttk {
namespace gpd {

struct MorData {
  std::string id, src, tgt;
};

// Raw tables as they appear in JSON documents.
struct GroupoidData {
  std::vector<std::string> objects;
  std::vector<MorData> morphisms;
  std::vector<std::array<std::string, 3>> compose;   // g, f, g after f
  std::vector<std::array<std::string, 2>> inverse;   // f, f inverse
  std::vector<std::array<std::string, 2>> identity;  // x, id_x
};

// Finite groupoid with total lookup tables. The constructor checks the
// tables are well formed (ids resolve, composition defined exactly on
// composable pairs, identity and inverse total) and throws on violations;
// the algebraic laws are checked separately by check() so that broken
// fixtures can still be built and reported on.
class Groupoid {
 public:
  explicit Groupoid(GroupoidData data);

  std::size_t n_objects() const noexcept {
    return objects_.size();
  }
  std::size_t n_morphisms() const noexcept {
    return mors_.size();
  }
  std::string const& object_id(std::size_t x) const {
    return objects_[x];
  }
  std::string const& mor_id(std::size_t m) const {
    return mors_[m];
  }
  std::size_t object_index(std::string const& id) const;
  std::size_t mor_index(std::string const& id) const;
  bool has_object(std::string const& id) const {
    return obj_index_.count(id) != 0;
  }
  bool has_morphism(std::string const& id) const {
    return mor_index_.count(id) != 0;
  }

  std::size_t src(std::size_t m) const {
    return src_[m];
  }
  std::size_t tgt(std::size_t m) const {
    return tgt_[m];
  }
  std::size_t identity_of(std::size_t x) const {
    return id_of_[x];
  }
  bool is_identity(std::size_t m) const {
    return id_of_[src_[m]] == m;
  }
  bool composable(std::size_t g, std::size_t f) const {
    return src_[g] == tgt_[f];
  }
  // g after f; throws NotComposable
  std::size_t compose(std::size_t g, std::size_t f) const;
  std::size_t inverse(std::size_t m) const {
    return inv_[m];
  }

  // automorphisms of x, ascending index (= lexicographic by id)
  std::vector<std::size_t> aut(std::size_t x) const;

  std::size_t component(std::size_t x) const {
    return comp_[x];
  }
  std::size_t n_components() const noexcept {
    return n_comps_;
  }
  // least object id in each component, sorted
  std::vector<std::size_t> component_reps() const;

  // law check: associativity, units, inverses, source/target of composites
  Report check() const;

  GroupoidData data() const;

 private:
  std::vector<std::string> objects_, mors_;
  std::map<std::string, std::size_t> obj_index_, mor_index_;
  std::vector<std::size_t> src_, tgt_, inv_, id_of_;
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> comp_table_;
  std::vector<std::size_t> comp_;
  std::size_t n_comps_;
};

// Object and morphism assignment between groupoids, by id.
struct Functor {
  std::map<std::string, std::string> on_objects, on_morphisms;
};

// clause prefix "functor.": totality, src/tgt, identities, composition
Report check_functor(Functor const& F, Groupoid const& dom,
                     Groupoid const& cod);

bool is_equivalence(Functor const& F, Groupoid const& dom,
                    Groupoid const& cod);

// table of conjugation Aut(tgt f) -> Aut(src f), a maps to finv a f
std::map<std::string, std::string> change_of_basepoint(Groupoid const& G,
                                                       std::string const& f);

struct SkeletonResult {
  Groupoid sk;
  Functor inclusion;
};

// Full subgroupoid on one least-id object per component. If prefer is set,
// that object represents its own component regardless of id order.
SkeletonResult skeleton(Groupoid const& G,
                        std::optional<std::size_t> prefer = std::nullopt);

struct PointedGroupoid {
  Groupoid G;
  std::size_t basepoint;

  PointedGroupoid(Groupoid g, std::string const& basepoint_id);

  // morphisms with target the basepoint
  std::vector<std::size_t> star() const;
  std::vector<std::size_t> aut0() const {
    return G.aut(basepoint);
  }
};

struct StrictlyAbelianGroupoid {
  PointedGroupoid P;
  // psi[x] : automorphism of x -> automorphism of the basepoint
  std::vector<std::map<std::size_t, std::size_t>> psi;

  StrictlyAbelianGroupoid(PointedGroupoid p,
                          std::map<std::string,
                                   std::map<std::string, std::string>> const&
                              psi_by_id);

  std::size_t apply_psi(std::size_t x, std::size_t a) const;
  std::size_t apply_psi_inv(std::size_t x, std::size_t a) const;

  // clauses abelian.psi_bijective, abelian.psi_hom, abelian.psi_coherence
  Report check() const;
};

// componentwise product; object and morphism ids become "(a,b)"
Groupoid product(Groupoid const& A, Groupoid const& B);
std::string pair_id(std::string const& a, std::string const& b);

}  // namespace gpd
}  // namespace ttk
#endif  // TTK_GPD_HPP_
