#include "ttk/adams.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "ttk/errors.hpp"

namespace ttk {
namespace adams {

namespace {

int pivot_bit(std::uint32_t v) {
  return std::bit_width(v) - 1;
}

// echelon span over coordinate masks; rows keep distinct pivots and stay
// mutually reduced, so reduce() yields the pivot-minimal coset member
struct Span {
  std::vector<std::uint32_t> rows;

  std::uint32_t reduce(std::uint32_t v) const {
    for (auto r : rows)
      if (v >> pivot_bit(r) & 1u) v ^= r;
    return v;
  }
  bool insert(std::uint32_t v) {
    v = reduce(v);
    if (!v) return false;
    for (auto& r : rows)
      if (r >> pivot_bit(v) & 1u) r ^= v;
    rows.push_back(v);
    return true;
  }
  std::size_t dim() const {
    return rows.size();
  }
};

// masks x with xor of rows[i] over set bits of x equal to zero
std::vector<std::uint32_t> kernel_masks(std::vector<std::uint32_t> const& rows) {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> ech;
  std::vector<std::uint32_t> ker;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    std::uint32_t v = rows[i], c = 1u << i;
    for (auto const& [rv, rc] : ech)
      if (v >> pivot_bit(rv) & 1u) {
        v ^= rv;
        c ^= rc;
      }
    if (v)
      ech.emplace_back(v, c);
    else
      ker.push_back(c);
  }
  return ker;
}

// F2 coordinates on one pi0 hom group read off its add table
struct HomGroup {
  std::vector<std::string> const* elems = nullptr;
  std::size_t zero = 0;
  std::vector<std::size_t> basis;
  std::vector<std::size_t> by_mask;       // mask -> element index
  std::vector<std::uint32_t> coord;       // element index -> mask
  std::map<std::string, std::size_t> pos;

  std::size_t dim() const {
    return basis.size();
  }
  std::string const& id_of(std::uint32_t mask) const {
    return (*elems)[by_mask[mask]];
  }
};

HomGroup hom_group(chains::AddCategory const& C, std::string const& a,
                   std::string const& b) {
  auto key = std::make_pair(a, b);
  auto ith = C.hom.find(key);
  if (ith == C.hom.end())
    throw_error(Err::UnknownId, "no hom " + a + " -> " + b);
  auto ita = C.add.find(key);
  if (ita == C.add.end())
    throw_error(Err::NotAdditive, "hom " + a + " -> " + b + " has no addition");
  auto const& add = ita->second;
  HomGroup G;
  G.elems = &ith->second;
  G.zero = C.zero.at(key);
  std::size_t n = G.elems->size();
  G.coord.assign(n, 0);
  std::vector<char> seen(n, 0);
  G.by_mask = {G.zero};
  seen[G.zero] = 1;
  for (std::size_t e = 0; e < n; ++e) {
    if (seen[e]) continue;
    if (add[e][e] != G.zero)
      throw_error(Err::NotAdditive,
                  "hom " + a + " -> " + b + " is not elementary abelian");
    if (G.basis.size() >= 20)
      throw_error(Err::PreconditionFailed,
                  "hom " + a + " -> " + b + " exceeds the supported rank");
    std::uint32_t bit = 1u << G.basis.size();
    G.basis.push_back(e);
    std::size_t half = G.by_mask.size();
    for (std::size_t m = 0; m < half; ++m) {
      std::size_t s = add[G.by_mask[m]][e];
      if (seen[s])
        throw_error(Err::NotAdditive,
                    "hom " + a + " -> " + b + " addition is not free");
      seen[s] = 1;
      G.coord[s] = static_cast<std::uint32_t>(m) | bit;
      G.by_mask.push_back(s);
    }
  }
  for (std::size_t i = 0; i < n; ++i) G.pos[(*G.elems)[i]] = i;
  return G;
}

std::string const& cls_of(chains::AddCategory const& C, std::string const& a,
                          std::string const& b, std::string const& cell) {
  auto it = C.class_of.find(std::make_tuple(a, b, cell));
  if (it == C.class_of.end())
    throw_error(Err::UnknownId,
                "no cell " + cell + " in hom " + a + " -> " + b);
  return it->second;
}

std::size_t compose_index(chains::AddCategory const& C, std::string const& a,
                          std::string const& b, std::string const& c,
                          std::size_t g, std::size_t f) {
  auto it = C.compose.find({a, b, c});
  if (it == C.compose.end())
    throw_error(Err::MissingTableEntry,
                "no composition table " + a + " -> " + b + " -> " + c);
  return it->second[g][f];
}

// image coordinates of "compose with the cell fcell of hom(a,b)" from
// hom(b,x) to hom(a,x), one entry per basis element of S
std::vector<std::uint32_t> post_matrix(chains::AddCategory const& C,
                                       HomGroup const& S, HomGroup const& U,
                                       std::string const& a,
                                       std::string const& b,
                                       std::string const& x,
                                       std::string const& fcell) {
  std::size_t f = C.index(a, b, cls_of(C, a, b, fcell));
  std::vector<std::uint32_t> out(S.dim());
  for (std::size_t i = 0; i < S.dim(); ++i)
    out[i] = U.coord[compose_index(C, a, b, x, S.basis[i], f)];
  return out;
}

std::string const& res_object(AdamsSetup const& setup, int s) {
  auto it = setup.res.sec.objects.find(s);
  if (it == setup.res.sec.objects.end())
    throw_error(Err::IndexOutOfWindow,
                "no resolution object at s = " + std::to_string(s));
  return it->second;
}

std::string const& target_of(AdamsSetup const& setup, int t) {
  auto it = setup.targets.find(t);
  if (it == setup.targets.end())
    throw_error(Err::MissingTableEntry,
                "no target object for degree " + std::to_string(t));
  return it->second;
}

// null paths for the degree 0 cell comp, carrier order
std::vector<std::string> null_paths(tta::TwoTrackAlgebra const& A,
                                    tta::Element const& comp) {
  auto const& H = A.hom_at(comp.src, comp.tgt);
  std::string z = A.zero(comp.src, comp.tgt, 0).id;
  std::vector<std::string> out;
  for (std::size_t i = 0; i < H.g2.P.G.n_objects(); ++i) {
    tta::Element cand{comp.src, comp.tgt, 1, H.g2.P.G.object_id(i)};
    tta::Track bq = tta::bounding_track(A, cand);
    if (tta::track_src(A, bq).id == comp.id && tta::track_tgt(A, bq).id == z)
      out.push_back(cand.id);
  }
  return out;
}

// first 2-track from the degree 1 cell u to v, carrier order; "" if none
std::string find_filler(tta::TwoTrackAlgebra const& A, tta::Element const& u,
                        tta::Element const& v) {
  auto const& H = A.hom_at(u.src, u.tgt);
  for (std::size_t i = 0; i < H.g2.P.G.n_morphisms(); ++i) {
    tta::Element cand{u.src, u.tgt, 2, H.g2.P.G.mor_id(i)};
    if (tta::boundary0(A, cand).id == u.id && tta::boundary1(A, cand).id == v.id)
      return cand.id;
  }
  return "";
}

void check_source_window(AdamsSetup const& setup, int s, int t) {
  if (s < setup.res.sec.n_min || s > setup.res.sec.n_max || t < setup.t_min ||
      t > setup.t_max)
    throw_error(Err::IndexOutOfWindow,
                "(" + std::to_string(s) + ", " + std::to_string(t) +
                    ") is outside the window");
}

// class index of x, after checking that its class kills the next
// differential whenever the window still holds one
std::size_t checked_cocycle(chains::AddCategory const& C,
                            AdamsSetup const& setup, int s,
                            std::string const& As, std::string const& Tt,
                            std::string const& x) {
  std::size_t xi = C.index(As, Tt, cls_of(C, As, Tt, x));
  if (s + 1 <= setup.res.sec.n_max) {
    std::string const& Ab = res_object(setup, s + 1);
    std::size_t di = C.index(Ab, As, cls_of(C, Ab, As, setup.res.sec.d.at(s).id));
    if (compose_index(C, Ab, As, Tt, xi, di) != C.zero.at({Ab, Tt}))
      throw_error(Err::NotACocycle,
                  x + " does not kill d" + std::to_string(s));
  }
  return xi;
}

std::map<std::string, std::string> const& sigma_table(
    std::map<std::pair<std::string, int>,
             std::map<std::string, std::string>> const& tabs,
    std::string const& X, int t, char const* kind) {
  auto it = tabs.find({X, t});
  if (it == tabs.end())
    throw_error(Err::MissingTableEntry, std::string(kind) + " table for (" +
                                            X + ", " + std::to_string(t) +
                                            ") is missing");
  return it->second;
}

std::string const& sigma_value(std::map<std::string, std::string> const& tab,
                               std::string const& id, char const* kind) {
  auto it = tab.find(id);
  if (it == tab.end())
    throw_error(Err::MissingTableEntry,
                std::string(kind) + " table has no entry for " + id);
  return it->second;
}

}  // namespace

std::string d2_element(tta::TwoTrackAlgebra const& A,
                       chains::AddCategory const& C, AdamsSetup const& setup,
                       int s, int t, std::string const& x) {
  auto const& S = setup.res.sec;
  check_source_window(setup, s, t);
  std::string const& As = res_object(setup, s);
  std::string const& Tt = target_of(setup, t);
  std::size_t xi = checked_cocycle(C, setup, s, As, Tt, x);
  if (s + 2 > S.n_max || t + 1 > setup.t_max)
    throw_error(Err::WindowExceeded,
                "d2 lands at (" + std::to_string(s + 2) + ", " +
                    std::to_string(t + 1) + "), outside the window");
  std::string const& As1 = res_object(setup, s + 1);
  std::string const& As2 = res_object(setup, s + 2);
  std::string const& Tt1 = target_of(setup, t + 1);

  HomGroup U = hom_group(C, As2, Tt1);
  Span denom;
  {
    HomGroup M = hom_group(C, As1, Tt1);
    for (auto v : post_matrix(C, M, U, As2, As1, Tt1, S.d.at(s + 1).id))
      denom.insert(v);
  }
  if (xi == C.zero.at({As, Tt})) return U.id_of(0);

  tta::Element xe{As, Tt, 0, x};
  tta::Element comp = tta::tensor(A, xe, S.d.at(s));
  auto gammas = null_paths(A, comp);
  if (gammas.empty())
    throw_error(Err::NoCorrectionFound,
                "no null path for " + x + " d" + std::to_string(s));
  chains::SecondaryComplex W;
  W.n_min = 0;
  W.n_max = 3;
  W.objects = {{0, Tt}, {1, As}, {2, As1}, {3, As2}};
  W.d = {{0, xe}, {1, S.d.at(s)}, {2, S.d.at(s + 1)}};
  W.gamma = {{0, tta::Element{As1, Tt, 1, gammas.front()}}, {1, S.gamma.at(s)}};
  tta::Track O = chains::secondary_obstruction(A, W, 1);

  auto const& tab = sigma_table(setup.sigma1, As2, t, "suspension");
  std::string const& cell = sigma_value(tab, O.id, "suspension");
  std::uint32_t v = U.coord[C.index(As2, Tt1, cls_of(C, As2, Tt1, cell))];
  return U.id_of(denom.reduce(v));
}

std::string d3_element(tta::TwoTrackAlgebra const& A,
                       chains::AddCategory const& C, AdamsSetup const& setup,
                       int s, int t, std::string const& x) {
  auto const& S = setup.res.sec;
  check_source_window(setup, s, t);
  std::string const& As = res_object(setup, s);
  std::string const& Tt = target_of(setup, t);
  std::size_t xi = checked_cocycle(C, setup, s, As, Tt, x);
  if (s + 3 > S.n_max || t + 2 > setup.t_max)
    throw_error(Err::WindowExceeded,
                "d3 lands at (" + std::to_string(s + 3) + ", " +
                    std::to_string(t + 2) + "), outside the window");
  {
    std::string v2 = d2_element(A, C, setup, s, t, x);
    auto key = std::make_pair(res_object(setup, s + 2), target_of(setup, t + 1));
    if (C.index(key.first, key.second, v2) != C.zero.at(key))
      throw_error(Err::D2Nonzero, "d2 class of " + x + " is " + v2);
  }
  std::string const& As1 = res_object(setup, s + 1);
  std::string const& As2 = res_object(setup, s + 2);
  std::string const& As3 = res_object(setup, s + 3);
  std::string const& Tt1 = target_of(setup, t + 1);
  std::string const& Tt2 = target_of(setup, t + 2);

  HomGroup U = hom_group(C, As3, Tt2);
  Span denom;
  {
    HomGroup M = hom_group(C, As2, Tt2);
    for (auto v : post_matrix(C, M, U, As3, As2, Tt2, S.d.at(s + 2).id))
      denom.insert(v);
    // second page values landing here, from one column to the left
    HomGroup P = hom_group(C, As1, Tt1);
    HomGroup Q = hom_group(C, As2, Tt1);
    auto rows = post_matrix(C, P, Q, As2, As1, Tt1, S.d.at(s + 1).id);
    for (std::uint32_t km : kernel_masks(rows)) {
      std::string val = d2_element(A, C, setup, s + 1, t + 1, P.id_of(km));
      denom.insert(U.coord[C.index(As3, Tt2, cls_of(C, As3, Tt2, val))]);
    }
  }
  if (xi == C.zero.at({As, Tt})) return U.id_of(0);

  tta::Element xe{As, Tt, 0, x};
  tta::Element comp = tta::tensor(A, xe, S.d.at(s));
  tta::Element xg = tta::tensor(A, xe, S.gamma.at(s));
  std::string gamma_id, xi_id;
  for (auto const& gid : null_paths(A, comp)) {
    tta::Element ge{As1, Tt, 1, gid};
    tta::Element lhs = tta::tensor(A, ge, S.d.at(s + 1));
    std::string fid = find_filler(A, lhs, xg);
    if (!fid.empty()) {
      gamma_id = gid;
      xi_id = fid;
      break;
    }
  }
  if (xi_id.empty())
    throw_error(Err::NoXiExists, "no filler from a null path of " + x + " d" +
                                     std::to_string(s) + " to " + x +
                                     " gamma" + std::to_string(s));
  chains::TertiaryComplex W;
  W.sec.n_min = 0;
  W.sec.n_max = 4;
  W.sec.objects = {{0, Tt}, {1, As}, {2, As1}, {3, As2}, {4, As3}};
  W.sec.d = {{0, xe}, {1, S.d.at(s)}, {2, S.d.at(s + 1)}, {3, S.d.at(s + 2)}};
  W.sec.gamma = {{0, tta::Element{As1, Tt, 1, gamma_id}},
                 {1, S.gamma.at(s)},
                 {2, S.gamma.at(s + 1)}};
  W.xi = {{0, tta::Element{As2, Tt, 2, xi_id}}, {1, setup.res.xi.at(s)}};
  tta::Element O = chains::tertiary_obstruction(A, W, 1);

  auto const& tab = sigma_table(setup.sigma2, As3, t, "double suspension");
  std::string const& cell = sigma_value(tab, O.id, "double suspension");
  std::uint32_t v = U.coord[C.index(As3, Tt2, cls_of(C, As3, Tt2, cell))];
  return U.id_of(denom.reduce(v));
}

namespace {

// subquotient of one pi0 group, with tracked coordinates on its basis
struct Quotient {
  HomGroup const* G = nullptr;
  bool known = false;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> rows;  // (vec, combo)
  std::vector<std::uint32_t> qbasis;

  std::pair<std::uint32_t, std::uint32_t> red(std::uint32_t v) const {
    std::uint32_t c = 0;
    for (auto const& [rv, rc] : rows)
      if (v >> pivot_bit(rv) & 1u) {
        v ^= rv;
        c ^= rc;
      }
    return {v, c};
  }
  void add_denominator(std::uint32_t v) {
    auto [rv, rc] = red(v);
    if (rv) rows.emplace_back(rv, rc);
  }
  void add_numerator(std::uint32_t v) {
    auto [rv, rc] = red(v);
    if (!rv) return;
    rows.emplace_back(rv, rc | (1u << qbasis.size()));
    qbasis.push_back(rv);
  }
  // coordinates of v over qbasis; v must lie in the spanned subspace
  std::uint32_t express(std::uint32_t v) const {
    auto [rv, rc] = red(v);
    if (rv)
      throw_error(Err::PreconditionFailed,
                  "page element escapes its subquotient");
    return rc;
  }
  std::size_t dim() const {
    return qbasis.size();
  }
};

}  // namespace

std::map<std::pair<int, int>, PageEntry> e_page(tta::TwoTrackAlgebra const& A,
                                                chains::AddCategory const& C,
                                                AdamsSetup const& setup,
                                                int page) {
  if (page < 2 || page > 4)
    throw_error(Err::PreconditionFailed, "page must be 2, 3 or 4");
  auto const& S = setup.res.sec;
  int s0 = S.n_min, s1 = S.n_max;
  int t0 = setup.t_min, t1 = setup.t_max;

  std::map<std::pair<int, int>, HomGroup> groups;
  for (int s = s0; s <= s1; ++s)
    for (int t = t0; t <= t1; ++t)
      groups.emplace(std::make_pair(s, t),
                     hom_group(C, res_object(setup, s), target_of(setup, t)));

  auto delta_rows = [&](int s, int t) {
    // compose with d_s, from column s to column s+1
    return post_matrix(C, groups.at({s, t}), groups.at({s + 1, t}),
                       res_object(setup, s + 1), res_object(setup, s),
                       target_of(setup, t), S.d.at(s).id);
  };

  std::map<std::pair<int, int>, Quotient> page2;
  for (int s = s0; s <= s1; ++s)
    for (int t = t0; t <= t1; ++t) {
      Quotient Q;
      Q.G = &groups.at({s, t});
      if (s - 1 >= s0)
        for (auto v : delta_rows(s - 1, t)) Q.add_denominator(v);
      if (s + 1 <= s1) {
        Q.known = true;
        for (auto km : kernel_masks(delta_rows(s, t))) Q.add_numerator(km);
      } else {
        for (std::size_t i = 0; i < Q.G->dim(); ++i)
          Q.add_numerator(1u << i);
      }
      page2.emplace(std::make_pair(s, t), std::move(Q));
    }

  std::map<std::pair<int, int>, PageEntry> out;
  if (page == 2) {
    for (auto const& [st, Q] : page2) out[st] = {Q.dim(), Q.known};
    return out;
  }

  // one page up: differential matrices on the previous page's bases,
  // then kernels modulo images. diff(src, tgt, rep) gives ambient target
  // coordinates of the differential on one basis representative.
  auto advance = [&](std::map<std::pair<int, int>, Quotient> const& prev,
                     int ds, int dt, auto&& diff) {
    std::map<std::pair<int, int>, std::vector<std::uint32_t>> images;
    for (auto const& [st, Q] : prev) {
      auto [s, t] = st;
      if (s + ds > s1 || t + dt > t1 || !Q.known) continue;
      auto& img = images[{s + ds, t + dt}];
      for (auto mask : Q.qbasis)
        img.push_back(diff(st, std::make_pair(s + ds, t + dt),
                           Q.G->id_of(mask)));
    }
    std::map<std::pair<int, int>, Quotient> next;
    for (auto const& [st, Q] : prev) {
      auto [s, t] = st;
      Quotient N;
      N.G = Q.G;
      N.known = Q.known && s + ds <= s1 && t + dt <= t1;
      // denominator: previous denominator plus incoming images
      for (auto const& [rv, rc] : Q.rows)
        if (rc == 0) N.add_denominator(rv);
      auto imit = images.find(st);
      if (imit != images.end())
        for (auto v : imit->second) N.add_denominator(v);
      // numerator: kernel of the outgoing matrix when it exists
      if (s + ds <= s1 && t + dt <= t1) {
        auto const& T = prev.at({s + ds, t + dt});
        std::vector<std::uint32_t> rows;
        for (auto mask : Q.qbasis)
          rows.push_back(
              T.express(diff(st, std::make_pair(s + ds, t + dt),
                             Q.G->id_of(mask))));
        // incoming images must die under the outgoing differential
        if (imit != images.end())
          for (auto v : imit->second) {
            std::uint32_t c = Q.express(v), acc = 0;
            for (std::size_t i = 0; i < Q.dim(); ++i)
              if (c >> i & 1u) acc ^= rows[i];
            if (acc)
              throw_error(Err::PreconditionFailed,
                          "page differential does not square to zero");
          }
        for (auto km : kernel_masks(rows)) {
          std::uint32_t v = 0;
          for (std::size_t i = 0; i < Q.dim(); ++i)
            if (km >> i & 1u) v ^= Q.qbasis[i];
          N.add_numerator(v);
        }
      } else {
        for (auto mask : Q.qbasis) N.add_numerator(mask);
      }
      next.emplace(st, std::move(N));
    }
    return next;
  };

  auto d2 = [&](std::pair<int, int> src, std::pair<int, int> tgt,
                std::string const& rep) {
    std::string val = d2_element(A, C, setup, src.first, src.second, rep);
    auto const& U = groups.at(tgt);
    return U.coord[C.index(res_object(setup, tgt.first),
                           target_of(setup, tgt.second),
                           cls_of(C, res_object(setup, tgt.first),
                                  target_of(setup, tgt.second), val))];
  };
  auto page3 = advance(page2, 2, 1, d2);
  if (page == 3) {
    for (auto const& [st, Q] : page3) out[st] = {Q.dim(), Q.known};
    return out;
  }

  auto d3 = [&](std::pair<int, int> src, std::pair<int, int> tgt,
                std::string const& rep) {
    std::string val = d3_element(A, C, setup, src.first, src.second, rep);
    auto const& U = groups.at(tgt);
    return U.coord[C.index(res_object(setup, tgt.first),
                           target_of(setup, tgt.second),
                           cls_of(C, res_object(setup, tgt.first),
                                  target_of(setup, tgt.second), val))];
  };
  auto page4 = advance(page3, 3, 2, d3);
  for (auto const& [st, Q] : page4) out[st] = {Q.dim(), Q.known};
  return out;
}

namespace {

std::vector<std::size_t> loops_at(gpd::Groupoid const& G, std::size_t obj) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < G.n_morphisms(); ++i)
    if (G.src(i) == obj && G.tgt(i) == obj) out.push_back(i);
  return out;
}

// carrier ids must coincide with the table keys, the values must hit
// every class of hom(X, Tup) exactly once, additively over composition
void sigma_iso_checks(Report& rep, chains::AddCategory const& C,
                      std::string const& clause, std::string const& X, int t,
                      gpd::Groupoid const& G,
                      std::vector<std::size_t> const& loops,
                      std::map<std::string, std::string> const& tab,
                      std::string const& Tup) {
  std::string ts = std::to_string(t);
  std::set<std::string> carrier;
  for (auto i : loops) carrier.insert(G.mor_id(i));
  bool shape_ok = true;
  for (auto const& id : carrier)
    if (!tab.count(id)) {
      rep.add(clause, {X, ts, id}, "missing key");
      shape_ok = false;
    }
  for (auto const& [k, v] : tab)
    if (!carrier.count(k)) {
      rep.add(clause, {X, ts, k}, "key is not a basepoint loop");
      shape_ok = false;
    }
  if (!shape_ok) return;

  auto key = std::make_pair(X, Tup);
  auto homit = C.hom.find(key);
  auto addit = C.add.find(key);
  if (homit == C.hom.end() || addit == C.add.end()) {
    rep.add(clause, {X, ts}, "hom " + X + " -> " + Tup + " has no addition");
    return;
  }
  std::map<std::string, std::size_t> img;
  for (auto const& [k, v] : tab) {
    auto cit = C.class_of.find(std::make_tuple(X, Tup, v));
    if (cit == C.class_of.end()) {
      rep.add(clause, {X, ts, k}, v + " is not a cell of hom " + X + " -> " + Tup);
      return;
    }
    img[k] = C.index(X, Tup, cit->second);
  }
  std::set<std::size_t> hit;
  for (auto const& [k, v] : img) hit.insert(v);
  if (hit.size() != img.size())
    rep.add(clause, {X, ts}, "not injective on classes");
  if (hit.size() != homit->second.size())
    rep.add(clause, {X, ts}, "not onto the classes of hom " + X + " -> " + Tup);
  auto const& add = addit->second;
  for (auto a : loops)
    for (auto b : loops) {
      std::size_t ab = G.compose(a, b);
      std::size_t want = add[img[G.mor_id(a)]][img[G.mor_id(b)]];
      if (img[G.mor_id(ab)] != want) {
        rep.add(clause, {X, ts, G.mor_id(a), G.mor_id(b)}, "not additive");
        return;
      }
    }
}

}  // namespace

Report validate_setup(tta::TwoTrackAlgebra const& A,
                      chains::AddCategory const& C, AdamsSetup const& setup) {
  Report rep;
  auto const& S = setup.res.sec;
  if (S.n_min > S.n_max) rep.add("adams.window", {}, "empty resolution window");
  if (setup.t_min > setup.t_max)
    rep.add("adams.window", {}, "empty target range");
  for (int t = setup.t_min; t <= setup.t_max; ++t) {
    auto it = setup.targets.find(t);
    if (it == setup.targets.end()) {
      rep.add("adams.targets", {std::to_string(t)}, "no target object");
      continue;
    }
    if (std::find(A.objects.begin(), A.objects.end(), it->second) ==
        A.objects.end())
      rep.add("adams.targets", {std::to_string(t)},
              it->second + " is not an object of the algebra");
  }
  for (auto const& v : chains::check_tertiary(A, setup.res).violations) {
    std::vector<std::string> where = {"res", v.clause};
    where.insert(where.end(), v.where.begin(), v.where.end());
    rep.add("adams.resolution", where, v.detail);
  }
  if (!rep.ok()) return rep;

  // suspension tables: one per object two columns up, each an additive
  // bijection from basepoint loops onto the classes one target higher
  for (int k = S.n_min + 2; k <= S.n_max; ++k)
    for (int t = setup.t_min; t + 1 <= setup.t_max; ++t) {
      std::string const& X = res_object(setup, k);
      auto it = setup.sigma1.find({X, t});
      if (it == setup.sigma1.end()) {
        rep.add("adams.sigma_iso", {X, std::to_string(t)}, "missing table");
        continue;
      }
      auto const& H = A.hom_at(X, target_of(setup, t));
      sigma_iso_checks(rep, C, "adams.sigma_iso", X, t, H.g1.G,
                       loops_at(H.g1.G, H.g1.basepoint), it->second,
                       target_of(setup, t + 1));
    }
  for (int k = S.n_min + 3; k <= S.n_max; ++k)
    for (int t = setup.t_min; t + 2 <= setup.t_max; ++t) {
      std::string const& X = res_object(setup, k);
      auto it = setup.sigma2.find({X, t});
      if (it == setup.sigma2.end()) {
        rep.add("adams.sigma2_iso", {X, std::to_string(t)}, "missing table");
        continue;
      }
      auto const& H = A.hom_at(X, target_of(setup, t));
      sigma_iso_checks(rep, C, "adams.sigma2_iso", X, t, H.g2.P.G,
                       loops_at(H.g2.P.G, H.g2.P.basepoint), it->second,
                       target_of(setup, t + 2));
    }
  if (!rep.ok()) return rep;

  // naturality: suspending then pulling back along the next differential
  // agrees with pulling back the suspended cell, at class level
  for (int k = S.n_min + 2; k + 1 <= S.n_max; ++k)
    for (int t = setup.t_min; t + 1 <= setup.t_max; ++t) {
      std::string const& X = res_object(setup, k);
      std::string const& Xn = res_object(setup, k + 1);
      std::string const& Tt = target_of(setup, t);
      std::string const& Tu = target_of(setup, t + 1);
      auto const& tab = setup.sigma1.at({X, t});
      auto const& tabn = setup.sigma1.at({Xn, t});
      auto const& H = A.hom_at(X, Tt);
      tta::Element dk = S.d.at(k);
      std::size_t dcls = C.index(Xn, X, cls_of(C, Xn, X, dk.id));
      for (auto i : loops_at(H.g1.G, H.g1.basepoint)) {
        tta::Track l{X, Tt, H.g1.G.mor_id(i)};
        tta::Track w = tta::whisker(A, l, dk);
        auto wit = tabn.find(w.id);
        if (wit == tabn.end()) {
          rep.add("adams.sigma_natural", {X, std::to_string(t), l.id},
                  "whiskered loop " + w.id + " is not in the next table");
          continue;
        }
        std::size_t lhs = C.index(Xn, Tu, cls_of(C, Xn, Tu, wit->second));
        std::size_t g = C.index(X, Tu, cls_of(C, X, Tu, tab.at(l.id)));
        if (lhs != compose_index(C, Xn, X, Tu, g, dcls))
          rep.add("adams.sigma_natural", {X, std::to_string(t), l.id},
                  "suspension does not commute with d" + std::to_string(k));
      }
    }
  for (int k = S.n_min + 3; k + 1 <= S.n_max; ++k)
    for (int t = setup.t_min; t + 2 <= setup.t_max; ++t) {
      std::string const& X = res_object(setup, k);
      std::string const& Xn = res_object(setup, k + 1);
      std::string const& Tt = target_of(setup, t);
      std::string const& Tu = target_of(setup, t + 2);
      auto const& tab = setup.sigma2.at({X, t});
      auto const& tabn = setup.sigma2.at({Xn, t});
      auto const& H = A.hom_at(X, Tt);
      tta::Element dk = S.d.at(k);
      std::size_t dcls = C.index(Xn, X, cls_of(C, Xn, X, dk.id));
      for (auto i : loops_at(H.g2.P.G, H.g2.P.basepoint)) {
        tta::Element l{X, Tt, 2, H.g2.P.G.mor_id(i)};
        tta::Element w = tta::tensor(A, l, dk);
        auto wit = tabn.find(w.id);
        if (wit == tabn.end()) {
          rep.add("adams.sigma2_natural", {X, std::to_string(t), l.id},
                  "pulled back 2-track " + w.id + " is not in the next table");
          continue;
        }
        std::size_t lhs = C.index(Xn, Tu, cls_of(C, Xn, Tu, wit->second));
        std::size_t g = C.index(X, Tu, cls_of(C, X, Tu, tab.at(l.id)));
        if (lhs != compose_index(C, Xn, X, Tu, g, dcls))
          rep.add("adams.sigma2_natural", {X, std::to_string(t), l.id},
                  "double suspension does not commute with d" +
                      std::to_string(k));
      }
    }
  return rep;
}

}  // namespace adams
}  // namespace ttk
