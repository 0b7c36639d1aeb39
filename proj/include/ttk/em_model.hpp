#ifndef TTK_EM_MODEL_HPP_
#define TTK_EM_MODEL_HPP_

#include "ttk/tta.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace ttk {
namespace em {

// Two-stage GF(2) chain data for one hom: C2 -> C1 -> C0 on named bases.
// Boundaries are bit masks over the basis one degree down.
struct HomComplex {
  std::vector<std::string> b0, b1, b2;
  std::vector<std::uint32_t> d1;  // one mask over b0 per b1 element
  std::vector<std::uint32_t> d2;  // one mask over b1 per b2 element
};

// Basis pairing: left factor from hom(b,c) degree i, right factor from
// hom(a,b) degree j, value a sum of basis elements of hom(a,c) degree
// i+j. Pairs not listed multiply to zero; unit products are filled in
// automatically.
struct PairingEntry {
  std::string a, b, c;
  int i, j;
  std::string left, right;
  std::vector<std::string> out;
};

struct AlgebraData {
  std::vector<std::string> objects;
  // absent pair = zero complex
  std::map<std::pair<std::string, std::string>, HomComplex> homs;
  // b0 name or '+' joined sum of b0 names in basis order, "" = zero vector.
  // Single-name units get their identity products filled in automatically,
  // composite units rely on explicit mu entries.
  std::map<std::string, std::string> units;
  std::vector<PairingEntry> mu;
};

// Hom groupoids: degree 0 cells are C0 vectors, tracks are pairs of a C0
// vector with a class of C1 mod the image of d2, null paths are C1
// vectors, two cells pairs of a C1 vector with a C2 vector. Tensor tables
// spread bilinearly from mu, with the degree (1,1) value anchored at the
// left boundary. Throws PreconditionFailed when d1 d2 != 0 or a basis is
// oversized, DuplicateId on conflicting pairings, UnknownId on unresolved
// names. Axioms of the result are a separate concern: run
// tta::check_axioms on it.
tta::TwoTrackAlgebra realize(AlgebraData const& data);

}  // namespace em
}  // namespace ttk
#endif  // TTK_EM_MODEL_HPP_
