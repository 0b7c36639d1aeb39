#include "ttk/ttg.hpp"

#include "ttk/errors.hpp"

#include <set>
#include <utility>

namespace ttk {
namespace ttg {

using gpd::Groupoid;
using gpd::GroupoidData;

TwoTrackGroupoid::TwoTrackGroupoid(
    gpd::PointedGroupoid g1_in, gpd::StrictlyAbelianGroupoid g2_in,
    std::map<std::string, std::string> const& q_by_id)
    : g1(std::move(g1_in)), g2(std::move(g2_in)) {
  for (auto const& [obj, mor] : q_by_id) {
    if (!g2.P.G.has_object(obj)) {
      throw_error(Err::UnknownId, "q defined on unknown object " + obj);
    }
    g1.G.mor_index(mor);  // throws UnknownId
  }
  q.resize(g2.P.G.n_objects());
  for (std::size_t a = 0; a < q.size(); ++a) {
    auto it = q_by_id.find(g2.P.G.object_id(a));
    if (it == q_by_id.end()) {
      throw_error(Err::MissingTableEntry,
                  "q missing for object " + g2.P.G.object_id(a));
    }
    q[a] = g1.G.mor_index(it->second);
  }
}

std::size_t GroupTable::index(std::string const& e) const {
  for (std::size_t i = 0; i < elems.size(); ++i) {
    if (elems[i] == e) {
      return i;
    }
  }
  throw_error(Err::UnknownId, "group element " + e);
}

bool GroupTable::is_abelian() const {
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (std::size_t j = i + 1; j < elems.size(); ++j) {
      if (mul[i][j] != mul[j][i]) {
        return false;
      }
    }
  }
  return true;
}

GroupTable aut_group(Groupoid const& G, std::size_t x) {
  auto mors = G.aut(x);
  std::map<std::size_t, std::size_t> local;
  for (std::size_t i = 0; i < mors.size(); ++i) {
    local[mors[i]] = i;
  }
  GroupTable T;
  for (std::size_t m : mors) {
    T.elems.push_back(G.mor_id(m));
  }
  T.id_elem = local.at(G.identity_of(x));
  T.mul.assign(mors.size(), std::vector<std::size_t>(mors.size()));
  T.inv.resize(mors.size());
  for (std::size_t i = 0; i < mors.size(); ++i) {
    for (std::size_t j = 0; j < mors.size(); ++j) {
      T.mul[i][j] = local.at(G.compose(mors[i], mors[j]));
    }
    T.inv[i] = local.at(G.inverse(mors[i]));
  }
  return T;
}

bool is_group_iso(GroupTable const& A, GroupTable const& B,
                  std::map<std::string, std::string> const& m) {
  if (A.order() != B.order() || m.size() != A.order()) {
    return false;
  }
  std::vector<std::size_t> f(A.order());
  std::set<std::size_t> image;
  for (std::size_t i = 0; i < A.order(); ++i) {
    auto it = m.find(A.elems[i]);
    if (it == m.end()) {
      return false;
    }
    std::size_t j;
    try {
      j = B.index(it->second);
    } catch (Error const&) {
      return false;
    }
    f[i] = j;
    image.insert(j);
  }
  if (image.size() != B.order()) {
    return false;
  }
  for (std::size_t i = 0; i < A.order(); ++i) {
    for (std::size_t j = 0; j < A.order(); ++j) {
      if (f[A.mul[i][j]] != B.mul[f[i]][f[j]]) {
        return false;
      }
    }
  }
  return true;
}

Report validate_ttg(TwoTrackGroupoid const& G) {
  Report rpt;
  rpt.merge(G.g1.G.check(), "g1");
  rpt.merge(G.g2.P.G.check(), "g2");
  rpt.merge(G.g2.check(), "g2");

  auto const& g1 = G.g1.G;
  auto const& g2 = G.g2.P.G;
  std::size_t id0 = g1.identity_of(G.g1.basepoint);

  if (G.q[G.g2.P.basepoint] != id0) {
    rpt.add("ttg.q_pointed", {g2.object_id(G.g2.P.basepoint)},
            "q of the basepoint is " + g1.mor_id(G.q[G.g2.P.basepoint]) +
                ", expected " + g1.mor_id(id0));
  }
  for (std::size_t a = 0; a < g2.n_objects(); ++a) {
    if (g1.tgt(G.q[a]) != G.g1.basepoint) {
      rpt.add("ttg.q_star", {g2.object_id(a)},
              "q value " + g1.mor_id(G.q[a]) + " does not end at the basepoint");
    }
  }
  for (std::size_t m = 0; m < g2.n_morphisms(); ++m) {
    std::size_t a = g2.src(m), b = g2.tgt(m);
    if (G.q[a] != G.q[b]) {
      rpt.add("ttg.q_constant", {g2.mor_id(m)},
              "q differs across " + g2.mor_id(m) + ": " + g1.mor_id(G.q[a]) +
                  " vs " + g1.mor_id(G.q[b]));
    }
  }
  std::set<std::size_t> image(G.q.begin(), G.q.end());
  for (std::size_t f : G.g1.star()) {
    if (!image.count(f)) {
      rpt.add("ttg.q_surjective", {g1.mor_id(f)}, "no null path bounds it");
    }
  }
  std::map<std::size_t, std::size_t> seen;  // q value -> g2 component
  for (std::size_t a = 0; a < g2.n_objects(); ++a) {
    auto [it, fresh] = seen.emplace(G.q[a], g2.component(a));
    if (!fresh && it->second != g2.component(a)) {
      rpt.add("ttg.q_bijective", {g1.mor_id(G.q[a])},
              "bounded by null paths in two different components, e.g. " +
                  g2.object_id(a));
    }
  }
  return rpt;
}

HomotopyGroups homotopy_groups(TwoTrackGroupoid const& G) {
  HomotopyGroups H;
  auto reps = G.g1.G.component_reps();
  std::size_t base_comp = G.g1.G.component(G.g1.basepoint);
  H.pi0_base = 0;
  for (std::size_t i = 0; i < reps.size(); ++i) {
    H.pi0.push_back(G.g1.G.object_id(reps[i]));
    if (G.g1.G.component(reps[i]) == base_comp) {
      H.pi0_base = i;
    }
  }
  H.pi1 = aut_group(G.g1.G, G.g1.basepoint);
  H.pi2 = aut_group(G.g2.P.G, G.g2.P.basepoint);
  if (!H.pi2.is_abelian()) {
    throw_error(Err::NotAbelian, "degree 2 automorphisms do not commute");
  }
  return H;
}

TwoTrackGroupoid product(TwoTrackGroupoid const& A, TwoTrackGroupoid const& B) {
  Groupoid p1 = gpd::product(A.g1.G, B.g1.G);
  Groupoid p2 = gpd::product(A.g2.P.G, B.g2.P.G);
  gpd::PointedGroupoid P1(
      std::move(p1), gpd::pair_id(A.g1.G.object_id(A.g1.basepoint),
                                  B.g1.G.object_id(B.g1.basepoint)));
  gpd::PointedGroupoid P2(
      std::move(p2), gpd::pair_id(A.g2.P.G.object_id(A.g2.P.basepoint),
                                  B.g2.P.G.object_id(B.g2.P.basepoint)));

  std::map<std::string, std::map<std::string, std::string>> psi;
  std::map<std::string, std::string> qmap;
  auto const& ga = A.g2.P.G;
  auto const& gb = B.g2.P.G;
  for (std::size_t x = 0; x < ga.n_objects(); ++x) {
    for (std::size_t y = 0; y < gb.n_objects(); ++y) {
      std::string obj = gpd::pair_id(ga.object_id(x), gb.object_id(y));
      auto& slot = psi[obj];
      for (std::size_t a : ga.aut(x)) {
        for (std::size_t b : gb.aut(y)) {
          slot[gpd::pair_id(ga.mor_id(a), gb.mor_id(b))] =
              gpd::pair_id(ga.mor_id(A.g2.apply_psi(x, a)),
                           gb.mor_id(B.g2.apply_psi(y, b)));
        }
      }
      qmap[obj] = gpd::pair_id(A.g1.G.mor_id(A.q[x]), B.g1.G.mor_id(B.q[y]));
    }
  }
  gpd::StrictlyAbelianGroupoid S2(std::move(P2), psi);
  return TwoTrackGroupoid(std::move(P1), std::move(S2), qmap);
}

Report check_morphism(TtgMorphism const& F, TwoTrackGroupoid const& dom,
                      TwoTrackGroupoid const& cod) {
  Report rpt;
  rpt.merge(gpd::check_functor(F.f1, dom.g1.G, cod.g1.G), "f1");
  rpt.merge(gpd::check_functor(F.f2, dom.g2.P.G, cod.g2.P.G), "f2");

  auto image_object = [&](Groupoid const& cg, std::map<std::string, std::string> const& on,
                          std::string const& id) -> std::size_t {
    auto it = on.find(id);
    if (it == on.end() || !cg.has_object(it->second)) {
      return cg.n_objects();
    }
    return cg.object_index(it->second);
  };
  auto image_mor = [&](Groupoid const& cg, std::map<std::string, std::string> const& on,
                       std::string const& id) -> std::size_t {
    auto it = on.find(id);
    if (it == on.end()) {
      return cg.n_morphisms();
    }
    try {
      return cg.mor_index(it->second);
    } catch (Error const&) {
      return cg.n_morphisms();
    }
  };

  std::size_t b1 = image_object(cod.g1.G, F.f1.on_objects,
                                dom.g1.G.object_id(dom.g1.basepoint));
  if (b1 != cod.g1.basepoint) {
    rpt.add("ttg.morphism_pointed", {"f1"}, "basepoint not preserved");
  }
  std::size_t b2 = image_object(cod.g2.P.G, F.f2.on_objects,
                                dom.g2.P.G.object_id(dom.g2.P.basepoint));
  if (b2 != cod.g2.P.basepoint) {
    rpt.add("ttg.morphism_pointed", {"f2"}, "basepoint not preserved");
  }

  auto const& d2 = dom.g2.P.G;
  auto const& c2 = cod.g2.P.G;
  for (std::size_t a = 0; a < d2.n_objects(); ++a) {
    std::size_t fa = image_object(c2, F.f2.on_objects, d2.object_id(a));
    if (fa >= c2.n_objects()) {
      continue;  // recorded by the functor check
    }
    // q square: the bounding track of the image is the image of the
    // bounding track
    std::size_t qa = image_mor(cod.g1.G, F.f1.on_morphisms,
                               dom.g1.G.mor_id(dom.q[a]));
    if (qa >= cod.g1.G.n_morphisms() || qa != cod.q[fa]) {
      rpt.add("ttg.morphism_q", {d2.object_id(a)},
              "f1(q(a)) disagrees with q(f2(a))");
    }
    for (std::size_t al : d2.aut(a)) {
      std::size_t fal = image_mor(c2, F.f2.on_morphisms, d2.mor_id(al));
      if (fal >= c2.n_morphisms() || c2.src(fal) != fa || c2.tgt(fal) != fa) {
        continue;
      }
      std::size_t lhs, rhs;
      try {
        lhs = image_mor(c2, F.f2.on_morphisms,
                        d2.mor_id(dom.g2.apply_psi(a, al)));
        rhs = cod.g2.apply_psi(fa, fal);
      } catch (Error const&) {
        continue;  // missing psi entries are their own violation
      }
      if (lhs != rhs) {
        rpt.add("ttg.morphism_psi", {d2.mor_id(al)},
                "f2(psi(u)) disagrees with psi(f2(u))");
      }
    }
  }
  return rpt;
}

namespace {

// F restricted to Aut(x) -> Aut(Fx), bijectivity
bool aut_bijective(Groupoid const& dg, std::size_t x, Groupoid const& cg,
                   std::size_t fx,
                   std::map<std::string, std::string> const& on_mor) {
  auto da = dg.aut(x);
  auto ca = cg.aut(fx);
  if (da.size() != ca.size()) {
    return false;
  }
  std::set<std::size_t> image;
  for (std::size_t a : da) {
    image.insert(cg.mor_index(on_mor.at(dg.mor_id(a))));
  }
  return image.size() == ca.size();
}

}  // namespace

bool is_weak_equivalence(TtgMorphism const& F, TwoTrackGroupoid const& dom,
                         TwoTrackGroupoid const& cod) {
  Report rpt = check_morphism(F, dom, cod);
  if (!rpt.ok()) {
    throw_error(Err::InvalidMorphism, rpt.to_string());
  }
  // pi0
  std::set<std::size_t> comps;
  for (std::size_t x = 0; x < dom.g1.G.n_objects(); ++x) {
    comps.insert(cod.g1.G.component(
        cod.g1.G.object_index(F.f1.on_objects.at(dom.g1.G.object_id(x)))));
  }
  if (comps.size() != dom.g1.G.n_components() ||
      comps.size() != cod.g1.G.n_components()) {
    return false;
  }
  // pi1, pi2
  return aut_bijective(dom.g1.G, dom.g1.basepoint, cod.g1.G, cod.g1.basepoint,
                       F.f1.on_morphisms) &&
         aut_bijective(dom.g2.P.G, dom.g2.P.basepoint, cod.g2.P.G,
                       cod.g2.P.basepoint, F.f2.on_morphisms);
}

namespace {

// full subgroupoid on a set of objects, with the inclusion functor
std::pair<GroupoidData, gpd::Functor> restrict_to(
    Groupoid const& G, std::set<std::size_t> const& objs) {
  GroupoidData d;
  gpd::Functor incl;
  std::set<std::size_t> mors;
  for (std::size_t x : objs) {
    d.objects.push_back(G.object_id(x));
    incl.on_objects[G.object_id(x)] = G.object_id(x);
  }
  for (std::size_t m = 0; m < G.n_morphisms(); ++m) {
    if (objs.count(G.src(m)) && objs.count(G.tgt(m))) {
      mors.insert(m);
      d.morphisms.push_back(
          {G.mor_id(m), G.object_id(G.src(m)), G.object_id(G.tgt(m))});
      incl.on_morphisms[G.mor_id(m)] = G.mor_id(m);
    }
  }
  for (std::size_t g : mors) {
    for (std::size_t f : mors) {
      if (G.composable(g, f)) {
        d.compose.push_back(
            {G.mor_id(g), G.mor_id(f), G.mor_id(G.compose(g, f))});
      }
    }
    d.inverse.push_back({G.mor_id(g), G.mor_id(G.inverse(g))});
  }
  for (std::size_t x : objs) {
    d.identity.push_back({G.object_id(x), G.mor_id(G.identity_of(x))});
  }
  return {std::move(d), std::move(incl)};
}

std::map<std::string, std::map<std::string, std::string>> restrict_psi(
    gpd::StrictlyAbelianGroupoid const& S, std::set<std::size_t> const& objs) {
  std::map<std::string, std::map<std::string, std::string>> psi;
  auto const& G = S.P.G;
  for (std::size_t x : objs) {
    auto& slot = psi[G.object_id(x)];
    for (std::size_t a : G.aut(x)) {
      slot[G.mor_id(a)] = G.mor_id(S.apply_psi(x, a));
    }
  }
  return psi;
}

}  // namespace

std::pair<TwoTrackGroupoid, TtgMorphism> sk1(TwoTrackGroupoid const& G) {
  auto skel = gpd::skeleton(G.g1.G, G.g1.basepoint);
  gpd::PointedGroupoid p1(skel.sk, G.g1.G.object_id(G.g1.basepoint));

  // null paths surviving: those bounding a track that still starts in the
  // skeleton (targets are the basepoint, always kept)
  std::set<std::size_t> keep;
  for (std::size_t a = 0; a < G.g2.P.G.n_objects(); ++a) {
    if (p1.G.has_object(G.g1.G.object_id(G.g1.G.src(G.q[a])))) {
      keep.insert(a);
    }
  }
  auto [d2, incl2] = restrict_to(G.g2.P.G, keep);
  gpd::PointedGroupoid p2(Groupoid(std::move(d2)),
                          G.g2.P.G.object_id(G.g2.P.basepoint));
  gpd::StrictlyAbelianGroupoid s2(std::move(p2), restrict_psi(G.g2, keep));

  std::map<std::string, std::string> qmap;
  for (std::size_t a : keep) {
    qmap[G.g2.P.G.object_id(a)] = G.g1.G.mor_id(G.q[a]);
  }
  TwoTrackGroupoid out(std::move(p1), std::move(s2), qmap);
  return {std::move(out), TtgMorphism{skel.inclusion, std::move(incl2)}};
}

std::pair<TwoTrackGroupoid, TtgMorphism> sk2(TwoTrackGroupoid const& G) {
  if (!G.is_connected()) {
    throw_error(Err::PreconditionFailed, "not connected");
  }
  if (G.g1.G.n_objects() != G.g1.G.n_components()) {
    throw_error(Err::PreconditionFailed, "degree 0 part not skeletal");
  }
  auto skel = gpd::skeleton(G.g2.P.G, G.g2.P.basepoint);
  std::set<std::size_t> keep;
  for (std::size_t a = 0; a < G.g2.P.G.n_objects(); ++a) {
    if (skel.sk.has_object(G.g2.P.G.object_id(a))) {
      keep.insert(a);
    }
  }
  gpd::PointedGroupoid p2(skel.sk, G.g2.P.G.object_id(G.g2.P.basepoint));
  gpd::StrictlyAbelianGroupoid s2(std::move(p2), restrict_psi(G.g2, keep));

  std::map<std::string, std::string> qmap;
  for (std::size_t a : keep) {
    qmap[G.g2.P.G.object_id(a)] = G.g1.G.mor_id(G.q[a]);
  }

  gpd::Functor id1;
  for (std::size_t x = 0; x < G.g1.G.n_objects(); ++x) {
    id1.on_objects[G.g1.G.object_id(x)] = G.g1.G.object_id(x);
  }
  for (std::size_t m = 0; m < G.g1.G.n_morphisms(); ++m) {
    id1.on_morphisms[G.g1.G.mor_id(m)] = G.g1.G.mor_id(m);
  }
  TwoTrackGroupoid out(G.g1, std::move(s2), qmap);
  return {std::move(out), TtgMorphism{std::move(id1), skel.inclusion}};
}

TwoTrackGroupoid build_skeletal(GroupTable const& pi1, GroupTable const& pi2) {
  if (!pi2.is_abelian()) {
    throw_error(Err::NotAbelian, "degree 2 group must be abelian");
  }
  GroupoidData d1;
  d1.objects = {"pt"};
  auto t1 = [&](std::size_t i) { return "t1_" + pi1.elems[i]; };
  for (std::size_t i = 0; i < pi1.order(); ++i) {
    d1.morphisms.push_back({t1(i), "pt", "pt"});
    d1.inverse.push_back({t1(i), t1(pi1.inv[i])});
    for (std::size_t j = 0; j < pi1.order(); ++j) {
      d1.compose.push_back({t1(i), t1(j), t1(pi1.mul[i][j])});
    }
  }
  d1.identity.push_back({"pt", t1(pi1.id_elem)});
  gpd::PointedGroupoid p1(Groupoid(std::move(d1)), "pt");

  GroupoidData d2;
  auto obj = [&](std::size_t g) { return "o_" + pi1.elems[g]; };
  auto mor = [&](std::size_t g, std::size_t a) {
    return "m_" + pi1.elems[g] + "_" + pi2.elems[a];
  };
  std::map<std::string, std::map<std::string, std::string>> psi;
  std::map<std::string, std::string> qmap;
  for (std::size_t g = 0; g < pi1.order(); ++g) {
    d2.objects.push_back(obj(g));
    d2.identity.push_back({obj(g), mor(g, pi2.id_elem)});
    auto& slot = psi[obj(g)];
    for (std::size_t a = 0; a < pi2.order(); ++a) {
      d2.morphisms.push_back({mor(g, a), obj(g), obj(g)});
      d2.inverse.push_back({mor(g, a), mor(g, pi2.inv[a])});
      for (std::size_t b = 0; b < pi2.order(); ++b) {
        d2.compose.push_back({mor(g, a), mor(g, b), mor(g, pi2.mul[a][b])});
      }
      slot[mor(g, a)] = mor(pi1.id_elem, a);
    }
    qmap[obj(g)] = t1(g);
  }
  gpd::PointedGroupoid p2(Groupoid(std::move(d2)), obj(pi1.id_elem));
  gpd::StrictlyAbelianGroupoid s2(std::move(p2), psi);
  return TwoTrackGroupoid(std::move(p1), std::move(s2), qmap);
}

TtgMorphism connect_weak_equivalence(
    TwoTrackGroupoid const& G, TwoTrackGroupoid const& H,
    std::map<std::string, std::string> const& phi1,
    std::map<std::string, std::string> const& phi2) {
  for (auto const* T : {&G, &H}) {
    if (!T->is_connected()) {
      throw_error(Err::PreconditionFailed, "not connected");
    }
    if (T->g1.G.n_objects() != 1) {
      throw_error(Err::PreconditionFailed, "degree 0 part not skeletal");
    }
    if (T->g2.P.G.n_objects() != T->g2.P.G.n_components()) {
      throw_error(Err::PreconditionFailed, "degree 1 part not skeletal");
    }
  }
  GroupTable pa1 = aut_group(G.g1.G, G.g1.basepoint);
  GroupTable pb1 = aut_group(H.g1.G, H.g1.basepoint);
  GroupTable pa2 = aut_group(G.g2.P.G, G.g2.P.basepoint);
  GroupTable pb2 = aut_group(H.g2.P.G, H.g2.P.basepoint);
  if (!is_group_iso(pa1, pb1, phi1)) {
    throw_error(Err::NotIsomorphism, "phi1 is not an isomorphism");
  }
  if (!is_group_iso(pa2, pb2, phi2)) {
    throw_error(Err::NotIsomorphism, "phi2 is not an isomorphism");
  }

  TtgMorphism F;
  F.f1.on_objects[G.g1.G.object_id(0)] = H.g1.G.object_id(0);
  for (std::size_t m = 0; m < G.g1.G.n_morphisms(); ++m) {
    F.f1.on_morphisms[G.g1.G.mor_id(m)] = phi1.at(G.g1.G.mor_id(m));
  }

  std::map<std::size_t, std::size_t> h_obj_by_q;
  for (std::size_t b = 0; b < H.g2.P.G.n_objects(); ++b) {
    h_obj_by_q[H.q[b]] = b;
  }
  auto const& dg = G.g2.P.G;
  auto const& cg = H.g2.P.G;
  for (std::size_t a = 0; a < dg.n_objects(); ++a) {
    std::size_t f = H.g1.G.mor_index(phi1.at(G.g1.G.mor_id(G.q[a])));
    auto it = h_obj_by_q.find(f);
    if (it == h_obj_by_q.end()) {
      throw_error(Err::PreconditionFailed,
                  "no null path over " + H.g1.G.mor_id(f));
    }
    std::size_t fa = it->second;
    F.f2.on_objects[dg.object_id(a)] = cg.object_id(fa);
    for (std::size_t al : dg.aut(a)) {
      std::size_t u = G.g2.apply_psi(a, al);
      std::size_t v = cg.mor_index(phi2.at(dg.mor_id(u)));
      F.f2.on_morphisms[dg.mor_id(al)] =
          cg.mor_id(H.g2.apply_psi_inv(fa, v));
    }
  }
  return F;
}

}  // namespace ttg
}  // namespace ttk
