#ifndef TTK_TTA_HPP_
#define TTK_TTA_HPP_

#include "ttk/report.hpp"
#include "ttk/ttg.hpp"

#include <array>
#include <compare>
#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace ttk {
namespace tta {

// A cell of hom(src,tgt). Degree 0 picks a g1 object, degree 1 a g2 object
// (a null path), degree 2 a g2 morphism of that hom two-track groupoid.
struct Element {
  std::string src, tgt;
  int degree;
  std::string id;
  auto operator<=>(Element const&) const = default;
};

// A g1 morphism of a hom two-track groupoid (a track between degree 0
// cells). Not an Element; tensoring against tracks is tabled separately.
struct Track {
  std::string src, tgt;
  std::string id;
  auto operator<=>(Track const&) const = default;
};

struct TwoTrackAlgebra {
  std::vector<std::string> objects;
  std::map<std::pair<std::string, std::string>, ttg::TwoTrackGroupoid> hom;
  std::map<std::string, std::string> units;  // object -> g1 object id

  // x in hom(B,C), y in hom(A,B), value in hom(A,C); every composable
  // pair of degree sum <= 2 must be present
  std::map<std::pair<Element, Element>, Element> tensor_table;
  std::map<std::pair<Element, Track>, Track> whisker_left;
  std::map<std::pair<Track, Element>, Track> whisker_right;

  ttg::TwoTrackGroupoid const& hom_at(std::string const& a,
                                      std::string const& b) const;
  Element unit(std::string const& obj) const;
  // basepoint cell of the given degree (degree 2: its identity track)
  Element zero(std::string const& a, std::string const& b, int degree) const;
};

// table lookups; errors NotComposable, DegreeOverflow, MissingTableEntry
Element tensor(TwoTrackAlgebra const& A, Element const& x, Element const& y);
Track whisker(TwoTrackAlgebra const& A, Element const& x, Track const& t);
Track whisker(TwoTrackAlgebra const& A, Track const& t, Element const& x);

// boundary operators
Track bounding_track(TwoTrackAlgebra const& A, Element const& a);  // q(a)
Element boundary(TwoTrackAlgebra const& A, Element const& a);   // deg 1 -> 0
Element boundary0(TwoTrackAlgebra const& A, Element const& c);  // deg 2 -> 1
Element boundary1(TwoTrackAlgebra const& A, Element const& c);
Element track_src(TwoTrackAlgebra const& A, Track const& t);
Element track_tgt(TwoTrackAlgebra const& A, Track const& t);

// Hom-wise two-track groupoid laws plus the tensor axioms. Clauses:
// tta.degree, tta.tensor_total, tta.units, tta.pointed, tta.assoc,
// tta.tensor_boundary, tta.mixed_boundary, tta.whisker_boundary,
// tta.whisker_square, tta.q_compat, tta.track_interchange.
Report check_axioms(TwoTrackAlgebra const& A);

// Classes are least g1 object ids per component. compose is keyed by
// {a,b,c,g,f} with f: a->b, g: b->c, giving the class of g tensor f.
struct HomotopyCategory {
  std::vector<std::string> objects;
  std::map<std::pair<std::string, std::string>, std::vector<std::string>>
      hom_classes;
  std::map<std::tuple<std::string, std::string, std::string>, std::string>
      class_of;  // (a, b, g1 object) -> class rep
  std::map<std::array<std::string, 5>, std::string> compose;
  std::map<std::string, std::string> unit_class;
  std::map<std::pair<std::string, std::string>, std::string> zero_class;
};

// throws IllDefinedComposition when representatives disagree
HomotopyCategory homotopy_category(TwoTrackAlgebra const& A);

struct TtaMorphism {
  std::map<std::string, std::string> on_objects;
  std::map<std::pair<std::string, std::string>, ttg::TtgMorphism> on_homs;
};

Element apply(TtaMorphism const& F, TwoTrackAlgebra const& dom,
              Element const& x);
Track apply(TtaMorphism const& F, TwoTrackAlgebra const& dom, Track const& t);

// hom-wise morphism squares plus tta.morphism_objects,
// tta.morphism_units, tta.morphism_tensor
Report check_morphism(TtaMorphism const& F, TwoTrackAlgebra const& dom,
                      TwoTrackAlgebra const& cod);

// hom-wise weak equivalences and an equivalence on homotopy categories;
// throws InvalidMorphism
bool is_weak_equivalence(TtaMorphism const& F, TwoTrackAlgebra const& dom,
                         TwoTrackAlgebra const& cod);

struct BracketOptions {
  std::size_t cap = 1000000;  // choice combinations before refusing
  bool fix_reps = false;      // use only the given degree 0 representatives
};

// Values are g1 automorphism ids of the basepoint in hom(src y3, tgt y1).
// Errors: CompositesNotNull, EnumerationCapExceeded.
std::set<std::string> toda3(TwoTrackAlgebra const& A, Element const& y1,
                            Element const& y2, Element const& y3,
                            BracketOptions const& opts = {});

// Values are psi-normalized g2 automorphism ids of the g2 basepoint in
// hom(src y4, tgt y1). Errors: CompositesNotNull, NotDefined,
// EnumerationCapExceeded.
std::set<std::string> toda4(TwoTrackAlgebra const& A, Element const& y1,
                            Element const& y2, Element const& y3,
                            Element const& y4, BracketOptions const& opts = {});

}  // namespace tta
}  // namespace ttk
#endif  // TTK_TTA_HPP_
