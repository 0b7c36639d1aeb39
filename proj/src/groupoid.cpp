#include "ttk/gpd.hpp"

#include "ttk/errors.hpp"

#include <algorithm>
#include <numeric>

namespace ttk {
namespace gpd {

Groupoid::Groupoid(GroupoidData data) {
  objects_ = data.objects;
  std::sort(objects_.begin(), objects_.end());
  for (std::size_t i = 0; i < objects_.size(); ++i) {
    if (!obj_index_.emplace(objects_[i], i).second) {
      throw_error(Err::DuplicateId, "object " + objects_[i]);
    }
  }
  std::sort(data.morphisms.begin(), data.morphisms.end(),
            [](MorData const& a, MorData const& b) { return a.id < b.id; });
  for (auto const& m : data.morphisms) {
    if (obj_index_.count(m.id)) {
      throw_error(Err::DuplicateId, "morphism id reuses object id " + m.id);
    }
    if (!mor_index_.emplace(m.id, mors_.size()).second) {
      throw_error(Err::DuplicateId, "morphism " + m.id);
    }
    mors_.push_back(m.id);
    src_.push_back(object_index(m.src));
    tgt_.push_back(object_index(m.tgt));
  }

  id_of_.assign(objects_.size(), mors_.size());
  for (auto const& [x, idx] : data.identity) {
    std::size_t xi = object_index(x);
    std::size_t mi = mor_index(idx);
    if (id_of_[xi] != mors_.size()) {
      throw_error(Err::DuplicateId, "two identities at " + x);
    }
    if (src_[mi] != xi || tgt_[mi] != xi) {
      throw_error(Err::InvalidMorphism, "identity of " + x
                                            + " is not an endomorphism");
    }
    id_of_[xi] = mi;
  }
  for (std::size_t x = 0; x < objects_.size(); ++x) {
    if (id_of_[x] == mors_.size()) {
      throw_error(Err::MissingTableEntry, "no identity at " + objects_[x]);
    }
  }

  inv_.assign(mors_.size(), mors_.size());
  for (auto const& [f, fi] : data.inverse) {
    std::size_t a = mor_index(f);
    if (inv_[a] != mors_.size()) {
      throw_error(Err::DuplicateId, "two inverses for " + f);
    }
    inv_[a] = mor_index(fi);
  }
  for (std::size_t m = 0; m < mors_.size(); ++m) {
    if (inv_[m] == mors_.size()) {
      throw_error(Err::MissingTableEntry, "no inverse for " + mors_[m]);
    }
  }

  for (auto const& [g, f, gf] : data.compose) {
    std::size_t gi = mor_index(g), fi = mor_index(f);
    if (src_[gi] != tgt_[fi]) {
      throw_error(Err::NotComposable,
                  "table entry on non-composable pair (" + g + ", " + f
                      + ")");
    }
    if (!comp_table_.emplace(std::make_pair(gi, fi), mor_index(gf)).second) {
      throw_error(Err::DuplicateId, "two entries for (" + g + ", " + f + ")");
    }
  }
  for (std::size_t g = 0; g < mors_.size(); ++g) {
    for (std::size_t f = 0; f < mors_.size(); ++f) {
      if (src_[g] == tgt_[f] && !comp_table_.count({g, f})) {
        throw_error(Err::MissingTableEntry, "no composite for (" + mors_[g]
                                                + ", " + mors_[f] + ")");
      }
    }
  }

  // components by repeated relabeling to the least reachable object
  comp_.resize(objects_.size());
  std::iota(comp_.begin(), comp_.end(), 0);
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t m = 0; m < mors_.size(); ++m) {
      std::size_t a = comp_[src_[m]], b = comp_[tgt_[m]];
      if (a != b) {
        std::size_t lo = std::min(a, b);
        comp_[src_[m]] = comp_[tgt_[m]] = lo;
        changed = true;
      }
    }
  }
  std::map<std::size_t, std::size_t> relabel;
  for (auto& c : comp_) {
    auto it = relabel.emplace(c, relabel.size()).first;
    c = it->second;
  }
  n_comps_ = relabel.size();
}

std::size_t Groupoid::object_index(std::string const& id) const {
  auto it = obj_index_.find(id);
  if (it == obj_index_.end()) {
    throw_error(Err::UnknownId, "object " + id);
  }
  return it->second;
}

std::size_t Groupoid::mor_index(std::string const& id) const {
  auto it = mor_index_.find(id);
  if (it == mor_index_.end()) {
    throw_error(Err::UnknownId, "morphism " + id);
  }
  return it->second;
}

std::size_t Groupoid::compose(std::size_t g, std::size_t f) const {
  auto it = comp_table_.find({g, f});
  if (it == comp_table_.end()) {
    throw_error(Err::NotComposable,
                mors_[g] + " after " + mors_[f] + " undefined");
  }
  return it->second;
}

std::vector<std::size_t> Groupoid::aut(std::size_t x) const {
  std::vector<std::size_t> out;
  for (std::size_t m = 0; m < mors_.size(); ++m) {
    if (src_[m] == x && tgt_[m] == x) {
      out.push_back(m);
    }
  }
  return out;
}

std::vector<std::size_t> Groupoid::component_reps() const {
  std::vector<std::size_t> rep(n_comps_, objects_.size());
  for (std::size_t x = 0; x < objects_.size(); ++x) {
    if (rep[comp_[x]] == objects_.size()) {
      rep[comp_[x]] = x;  // first hit is the least id, objects are sorted
    }
  }
  std::sort(rep.begin(), rep.end());
  return rep;
}

Report Groupoid::check() const {
  Report rep;
  // nested lookups may fall off the table when a composite has the wrong
  // source or target; those cases are already flagged by src_tgt, so the
  // remaining passes skip them
  auto lookup = [&](std::size_t g, std::size_t f) -> std::size_t {
    auto it = comp_table_.find({g, f});
    return it == comp_table_.end() ? mors_.size() : it->second;
  };
  for (auto const& [pair, gf] : comp_table_) {
    auto [g, f] = pair;
    if (src_[gf] != src_[f] || tgt_[gf] != tgt_[g]) {
      rep.add("groupoid.src_tgt", {mors_[g], mors_[f]});
    }
  }
  for (std::size_t f = 0; f < mors_.size(); ++f) {
    if (lookup(id_of_[tgt_[f]], f) != f || lookup(f, id_of_[src_[f]]) != f) {
      rep.add("groupoid.unit", {mors_[f]});
    }
    if (lookup(f, inv_[f]) != id_of_[tgt_[f]]
        || lookup(inv_[f], f) != id_of_[src_[f]]) {
      rep.add("groupoid.inverse", {mors_[f]});
    }
  }
  for (std::size_t h = 0; h < mors_.size(); ++h) {
    for (std::size_t g = 0; g < mors_.size(); ++g) {
      if (src_[h] != tgt_[g]) {
        continue;
      }
      std::size_t hg = lookup(h, g);
      for (std::size_t f = 0; f < mors_.size(); ++f) {
        if (src_[g] != tgt_[f]) {
          continue;
        }
        std::size_t gf = lookup(g, f);
        if (hg == mors_.size() || gf == mors_.size()) {
          continue;
        }
        std::size_t left = lookup(hg, f), right = lookup(h, gf);
        if (left == mors_.size() || right == mors_.size()) {
          continue;
        }
        if (left != right) {
          rep.add("groupoid.assoc", {mors_[h], mors_[g], mors_[f]});
        }
      }
    }
  }
  return rep;
}

GroupoidData Groupoid::data() const {
  GroupoidData d;
  d.objects = objects_;
  for (std::size_t m = 0; m < mors_.size(); ++m) {
    d.morphisms.push_back({mors_[m], objects_[src_[m]], objects_[tgt_[m]]});
    d.inverse.push_back({mors_[m], mors_[inv_[m]]});
  }
  for (std::size_t x = 0; x < objects_.size(); ++x) {
    d.identity.push_back({objects_[x], mors_[id_of_[x]]});
  }
  for (auto const& [pair, gf] : comp_table_) {
    d.compose.push_back({mors_[pair.first], mors_[pair.second], mors_[gf]});
  }
  return d;
}

Report check_functor(Functor const& F, Groupoid const& dom,
                     Groupoid const& cod) {
  Report rep;
  for (std::size_t x = 0; x < dom.n_objects(); ++x) {
    auto it = F.on_objects.find(dom.object_id(x));
    if (it == F.on_objects.end() || !cod.has_object(it->second)) {
      rep.add("functor.objects", {dom.object_id(x)});
    }
  }
  for (std::size_t m = 0; m < dom.n_morphisms(); ++m) {
    auto it = F.on_morphisms.find(dom.mor_id(m));
    if (it == F.on_morphisms.end()) {
      rep.add("functor.morphisms", {dom.mor_id(m)});
    }
  }
  if (!rep.ok()) {
    return rep;
  }
  auto fo = [&](std::size_t x) {
    return cod.object_index(F.on_objects.at(dom.object_id(x)));
  };
  auto fm = [&](std::size_t m) {
    return cod.mor_index(F.on_morphisms.at(dom.mor_id(m)));
  };
  for (std::size_t m = 0; m < dom.n_morphisms(); ++m) {
    if (cod.src(fm(m)) != fo(dom.src(m))
        || cod.tgt(fm(m)) != fo(dom.tgt(m))) {
      rep.add("functor.src_tgt", {dom.mor_id(m)});
    }
  }
  if (!rep.ok()) {
    return rep;
  }
  for (std::size_t x = 0; x < dom.n_objects(); ++x) {
    if (fm(dom.identity_of(x)) != cod.identity_of(fo(x))) {
      rep.add("functor.identity", {dom.object_id(x)});
    }
  }
  for (std::size_t g = 0; g < dom.n_morphisms(); ++g) {
    for (std::size_t f = 0; f < dom.n_morphisms(); ++f) {
      if (dom.composable(g, f)
          && fm(dom.compose(g, f)) != cod.compose(fm(g), fm(f))) {
        rep.add("functor.compose", {dom.mor_id(g), dom.mor_id(f)});
      }
    }
  }
  return rep;
}

bool is_equivalence(Functor const& F, Groupoid const& dom,
                    Groupoid const& cod) {
  if (!check_functor(F, dom, cod).ok()) {
    return false;
  }
  auto fo = [&](std::size_t x) {
    return cod.object_index(F.on_objects.at(dom.object_id(x)));
  };
  auto fm = [&](std::size_t m) {
    return cod.mor_index(F.on_morphisms.at(dom.mor_id(m)));
  };
  // essentially surjective: every codomain component is hit
  std::vector<bool> hit(cod.n_components(), false);
  for (std::size_t x = 0; x < dom.n_objects(); ++x) {
    hit[cod.component(fo(x))] = true;
  }
  for (bool h : hit) {
    if (!h) {
      return false;
    }
  }
  // fully faithful: bijective on each hom set
  for (std::size_t x = 0; x < dom.n_objects(); ++x) {
    for (std::size_t y = 0; y < dom.n_objects(); ++y) {
      std::vector<std::size_t> want;
      for (std::size_t m = 0; m < cod.n_morphisms(); ++m) {
        if (cod.src(m) == fo(x) && cod.tgt(m) == fo(y)) {
          want.push_back(m);
        }
      }
      std::vector<std::size_t> got;
      for (std::size_t m = 0; m < dom.n_morphisms(); ++m) {
        if (dom.src(m) == x && dom.tgt(m) == y) {
          got.push_back(fm(m));
        }
      }
      std::sort(got.begin(), got.end());
      if (std::unique(got.begin(), got.end()) != got.end() || got != want) {
        return false;
      }
    }
  }
  return true;
}

std::map<std::string, std::string> change_of_basepoint(Groupoid const& G,
                                                       std::string const& f) {
  std::size_t fi = G.mor_index(f);
  std::size_t x = G.src(fi), y = G.tgt(fi);
  std::map<std::string, std::string> table;
  for (auto a : G.aut(y)) {
    std::size_t conj = G.compose(G.compose(G.inverse(fi), a), fi);
    (void) x;
    table[G.mor_id(a)] = G.mor_id(conj);
  }
  return table;
}

SkeletonResult skeleton(Groupoid const& G, std::optional<std::size_t> prefer) {
  std::vector<std::size_t> reps = G.component_reps();
  if (prefer) {
    for (auto& r : reps) {
      if (G.component(r) == G.component(*prefer)) {
        r = *prefer;
      }
    }
  }
  std::vector<bool> keep_obj(G.n_objects(), false);
  for (auto r : reps) {
    keep_obj[r] = true;
  }
  GroupoidData d;
  for (auto r : reps) {
    d.objects.push_back(G.object_id(r));
  }
  std::vector<bool> keep_mor(G.n_morphisms(), false);
  for (std::size_t m = 0; m < G.n_morphisms(); ++m) {
    if (keep_obj[G.src(m)] && keep_obj[G.tgt(m)]) {
      keep_mor[m] = true;
      d.morphisms.push_back({G.mor_id(m), G.object_id(G.src(m)),
                             G.object_id(G.tgt(m))});
      d.inverse.push_back({G.mor_id(m), G.mor_id(G.inverse(m))});
    }
  }
  for (auto r : reps) {
    d.identity.push_back({G.object_id(r), G.mor_id(G.identity_of(r))});
  }
  for (std::size_t g = 0; g < G.n_morphisms(); ++g) {
    for (std::size_t f = 0; f < G.n_morphisms(); ++f) {
      if (keep_mor[g] && keep_mor[f] && G.composable(g, f)) {
        d.compose.push_back(
            {G.mor_id(g), G.mor_id(f), G.mor_id(G.compose(g, f))});
      }
    }
  }
  SkeletonResult out{Groupoid(std::move(d)), {}};
  for (std::size_t x = 0; x < out.sk.n_objects(); ++x) {
    out.inclusion.on_objects[out.sk.object_id(x)] = out.sk.object_id(x);
  }
  for (std::size_t m = 0; m < out.sk.n_morphisms(); ++m) {
    out.inclusion.on_morphisms[out.sk.mor_id(m)] = out.sk.mor_id(m);
  }
  return out;
}

PointedGroupoid::PointedGroupoid(Groupoid g, std::string const& basepoint_id)
    : G(std::move(g)), basepoint(G.object_index(basepoint_id)) {}

std::vector<std::size_t> PointedGroupoid::star() const {
  std::vector<std::size_t> out;
  for (std::size_t m = 0; m < G.n_morphisms(); ++m) {
    if (G.tgt(m) == basepoint) {
      out.push_back(m);
    }
  }
  return out;
}

StrictlyAbelianGroupoid::StrictlyAbelianGroupoid(
    PointedGroupoid p,
    std::map<std::string, std::map<std::string, std::string>> const&
        psi_by_id)
    : P(std::move(p)) {
  psi.resize(P.G.n_objects());
  for (auto const& [x, table] : psi_by_id) {
    std::size_t xi = P.G.object_index(x);
    for (auto const& [a, b] : table) {
      psi[xi][P.G.mor_index(a)] = P.G.mor_index(b);
    }
  }
}

std::size_t StrictlyAbelianGroupoid::apply_psi(std::size_t x,
                                               std::size_t a) const {
  auto it = psi[x].find(a);
  if (it == psi[x].end()) {
    throw_error(Err::MissingTableEntry,
                "psi at " + P.G.object_id(x) + " undefined on "
                    + P.G.mor_id(a));
  }
  return it->second;
}

std::size_t StrictlyAbelianGroupoid::apply_psi_inv(std::size_t x,
                                                   std::size_t a) const {
  for (auto const& [k, v] : psi[x]) {
    if (v == a) {
      return k;
    }
  }
  throw_error(Err::MissingTableEntry,
              "psi at " + P.G.object_id(x) + " does not reach "
                  + P.G.mor_id(a));
}

Report StrictlyAbelianGroupoid::check() const {
  Report rep;
  auto const& G = P.G;
  auto aut0 = P.aut0();
  for (std::size_t x = 0; x < G.n_objects(); ++x) {
    auto autx = G.aut(x);
    // totality and bijectivity onto Aut(0)
    bool shape_ok = psi[x].size() == autx.size();
    std::vector<std::size_t> values;
    for (auto a : autx) {
      auto it = psi[x].find(a);
      if (it == psi[x].end()) {
        shape_ok = false;
        break;
      }
      values.push_back(it->second);
    }
    std::sort(values.begin(), values.end());
    if (!shape_ok || values != aut0) {
      rep.add("abelian.psi_bijective", {G.object_id(x)});
      continue;
    }
    for (auto a : autx) {
      for (auto b : autx) {
        if (psi[x].at(G.compose(a, b))
            != G.compose(psi[x].at(a), psi[x].at(b))) {
          rep.add("abelian.psi_hom",
                  {G.object_id(x), G.mor_id(a), G.mor_id(b)});
        }
      }
    }
  }
  if (!rep.ok()) {
    return rep;
  }
  for (std::size_t f = 0; f < G.n_morphisms(); ++f) {
    std::size_t x = G.src(f), y = G.tgt(f);
    for (auto a : G.aut(y)) {
      std::size_t conj = G.compose(G.compose(G.inverse(f), a), f);
      if (psi[x].at(conj) != psi[y].at(a)) {
        rep.add("abelian.psi_coherence", {G.mor_id(f), G.mor_id(a)});
      }
    }
  }
  return rep;
}

std::string pair_id(std::string const& a, std::string const& b) {
  return "(" + a + "," + b + ")";
}

Groupoid product(Groupoid const& A, Groupoid const& B) {
  GroupoidData d;
  for (std::size_t x = 0; x < A.n_objects(); ++x) {
    for (std::size_t y = 0; y < B.n_objects(); ++y) {
      d.objects.push_back(pair_id(A.object_id(x), B.object_id(y)));
      d.identity.push_back(
          {d.objects.back(),
           pair_id(A.mor_id(A.identity_of(x)), B.mor_id(B.identity_of(y)))});
    }
  }
  for (std::size_t m = 0; m < A.n_morphisms(); ++m) {
    for (std::size_t n = 0; n < B.n_morphisms(); ++n) {
      d.morphisms.push_back(
          {pair_id(A.mor_id(m), B.mor_id(n)),
           pair_id(A.object_id(A.src(m)), B.object_id(B.src(n))),
           pair_id(A.object_id(A.tgt(m)), B.object_id(B.tgt(n)))});
      d.inverse.push_back(
          {pair_id(A.mor_id(m), B.mor_id(n)),
           pair_id(A.mor_id(A.inverse(m)), B.mor_id(B.inverse(n)))});
    }
  }
  for (std::size_t g = 0; g < A.n_morphisms(); ++g) {
    for (std::size_t f = 0; f < A.n_morphisms(); ++f) {
      if (!A.composable(g, f)) {
        continue;
      }
      for (std::size_t p = 0; p < B.n_morphisms(); ++p) {
        for (std::size_t q = 0; q < B.n_morphisms(); ++q) {
          if (!B.composable(p, q)) {
            continue;
          }
          d.compose.push_back({pair_id(A.mor_id(g), B.mor_id(p)),
                               pair_id(A.mor_id(f), B.mor_id(q)),
                               pair_id(A.mor_id(A.compose(g, f)),
                                       B.mor_id(B.compose(p, q)))});
        }
      }
    }
  }
  return Groupoid(std::move(d));
}

}  // namespace gpd
}  // namespace ttk
