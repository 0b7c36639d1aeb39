#include "ttk/chains.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <utility>

#include "ttk/errors.hpp"

namespace ttk {
namespace chains {

namespace {

std::string pos_name(char const* what, int n) {
  std::ostringstream s;
  s << what << " " << n;
  return s.str();
}

// objects and differentials only, shared by the secondary checker and the
// correction entry points
Report check_base(tta::TwoTrackAlgebra const& A, SecondaryComplex const& S) {
  Report rep;
  if (S.n_max < S.n_min) {
    rep.add("chain.shape", {}, "empty window");
    return rep;
  }
  std::set<std::string> known(A.objects.begin(), A.objects.end());
  for (auto const& [n, obj] : S.objects) {
    if (n < S.n_min || n > S.n_max)
      rep.add("chain.shape", {pos_name("object", n)}, "outside the window");
    else if (!known.count(obj))
      rep.add("chain.shape", {pos_name("object", n)}, "unknown object " + obj);
  }
  for (int n = S.n_min; n <= S.n_max; ++n)
    if (!S.objects.count(n))
      rep.add("chain.shape", {pos_name("object", n)}, "missing");
  for (auto const& [n, e] : S.d)
    if (n < S.n_min || n >= S.n_max)
      rep.add("chain.shape", {pos_name("d", n)}, "outside the window");
  if (!rep.ok()) return rep;
  for (int n = S.n_min; n < S.n_max; ++n) {
    auto it = S.d.find(n);
    if (it == S.d.end()) {
      rep.add("chain.shape", {pos_name("d", n)}, "missing");
      continue;
    }
    tta::Element const& e = it->second;
    if (e.degree != 0) {
      rep.add("chain.shape", {pos_name("d", n)}, "cell of degree != 0");
      continue;
    }
    if (e.src != S.objects.at(n + 1) || e.tgt != S.objects.at(n)) {
      rep.add("chain.shape", {pos_name("d", n)},
              "lives in " + e.src + "->" + e.tgt);
      continue;
    }
    try {
      if (!A.hom_at(e.src, e.tgt).g1.G.has_object(e.id))
        rep.add("chain.shape", {pos_name("d", n)}, "unknown cell " + e.id);
    } catch (Error const& err) {
      rep.add("chain.shape", {pos_name("d", n)}, err.what());
    }
  }
  return rep;
}

SecondaryComplex window_slice(SecondaryComplex const& S, int lo, int hi) {
  SecondaryComplex out;
  out.n_min = lo;
  out.n_max = hi;
  for (int k = lo; k <= hi; ++k)
    if (auto it = S.objects.find(k); it != S.objects.end())
      out.objects.emplace(k, it->second);
  for (int k = lo; k < hi; ++k)
    if (auto it = S.d.find(k); it != S.d.end()) out.d.emplace(k, it->second);
  for (int k = lo; k + 2 <= hi; ++k)
    if (auto it = S.gamma.find(k); it != S.gamma.end())
      out.gamma.emplace(k, it->second);
  return out;
}

// null paths whose boundary is the given cell, in carrier order
std::vector<std::string> paths_bounding(tta::TwoTrackAlgebra const& A,
                                        tta::Element const& cell) {
  ttg::TwoTrackGroupoid const& H = A.hom_at(cell.src, cell.tgt);
  std::size_t want = H.g1.G.object_index(cell.id);
  std::vector<std::string> out;
  for (std::size_t p = 0; p < H.g2.P.G.n_objects(); ++p)
    if (H.g1.G.src(H.q[p]) == want) out.push_back(H.g2.P.G.object_id(p));
  return out;
}

// tracks between the given null paths, in carrier order
std::vector<std::string> tracks_between(tta::TwoTrackAlgebra const& A,
                                        tta::Element const& from,
                                        tta::Element const& to) {
  gpd::Groupoid const& G = A.hom_at(from.src, from.tgt).g2.P.G;
  std::size_t s = G.object_index(from.id);
  std::size_t t = G.object_index(to.id);
  std::vector<std::string> out;
  for (std::size_t m = 0; m < G.n_morphisms(); ++m)
    if (G.src(m) == s && G.tgt(m) == t) out.push_back(G.mor_id(m));
  return out;
}

void prefer(std::vector<std::string>& v, std::string const& id) {
  auto it = std::find(v.begin(), v.end(), id);
  if (it != v.end()) std::rotate(v.begin(), it, it + 1);
}

void require_resolution(tta::TwoTrackAlgebra const& A, AddCategory const& C,
                        SecondaryComplex const& S,
                        std::vector<std::string> const& a_objects) {
  Report shape = check_base(A, S);
  if (!shape.ok()) throw_error(Err::NotAResolution, shape.to_string());
  ChainComplex X = induced_complex(C, S);
  Report cls = check_chain(C, X);
  if (!cls.ok()) throw_error(Err::NotAResolution, cls.to_string());
  if (!is_a_exact(C, X, a_objects))
    throw_error(Err::NotAResolution, "hom from a carrier is not exact");
}

}  // namespace

Report check_secondary(tta::TwoTrackAlgebra const& A,
                       SecondaryComplex const& S) {
  Report rep = check_base(A, S);
  if (!rep.ok()) return rep;
  for (auto const& [n, e] : S.gamma)
    if (n < S.n_min || n + 2 > S.n_max)
      rep.add("chain.gamma", {pos_name("n", n)}, "outside the window");
  for (int n = S.n_min; n + 2 <= S.n_max; ++n) {
    auto it = S.gamma.find(n);
    if (it == S.gamma.end()) {
      rep.add("chain.gamma", {pos_name("n", n)}, "missing");
      continue;
    }
    tta::Element const& g = it->second;
    if (g.degree != 1) {
      rep.add("chain.gamma", {pos_name("n", n)}, "cell of degree != 1");
      continue;
    }
    if (g.src != S.objects.at(n + 2) || g.tgt != S.objects.at(n)) {
      rep.add("chain.gamma", {pos_name("n", n)},
              "lives in " + g.src + "->" + g.tgt);
      continue;
    }
    try {
      if (!A.hom_at(g.src, g.tgt).g2.P.G.has_object(g.id)) {
        rep.add("chain.gamma", {pos_name("n", n)}, "unknown path " + g.id);
        continue;
      }
      tta::Element want = tta::tensor(A, S.d.at(n), S.d.at(n + 1));
      tta::Element got = tta::boundary(A, g);
      if (got.id != want.id)
        rep.add("chain.gamma", {pos_name("n", n)},
                "bounds " + got.id + ", the differentials compose to " +
                    want.id);
    } catch (Error const& err) {
      rep.add("chain.gamma", {pos_name("n", n)}, err.what());
    }
  }
  return rep;
}

Report check_tertiary(tta::TwoTrackAlgebra const& A, TertiaryComplex const& T) {
  SecondaryComplex const& S = T.sec;
  Report rep = check_secondary(A, S);
  if (!rep.ok()) return rep;
  for (auto const& [n, c] : T.xi)
    if (n < S.n_min || n + 3 > S.n_max)
      rep.add("chain.xi", {pos_name("n", n)}, "outside the window");
  for (int n = S.n_min; n + 3 <= S.n_max; ++n) {
    auto it = T.xi.find(n);
    if (it == T.xi.end()) {
      rep.add("chain.xi", {pos_name("n", n)}, "missing");
      continue;
    }
    tta::Element const& c = it->second;
    if (c.degree != 2) {
      rep.add("chain.xi", {pos_name("n", n)}, "cell of degree != 2");
      continue;
    }
    if (c.src != S.objects.at(n + 3) || c.tgt != S.objects.at(n)) {
      rep.add("chain.xi", {pos_name("n", n)},
              "lives in " + c.src + "->" + c.tgt);
      continue;
    }
    try {
      if (!A.hom_at(c.src, c.tgt).g2.P.G.has_morphism(c.id)) {
        rep.add("chain.xi", {pos_name("n", n)}, "unknown track " + c.id);
        continue;
      }
      tta::Element d0 = tta::boundary0(A, c);
      tta::Element d1 = tta::boundary1(A, c);
      tta::Element from = tta::tensor(A, S.gamma.at(n), S.d.at(n + 2));
      tta::Element to = tta::tensor(A, S.d.at(n), S.gamma.at(n + 1));
      if (d0.id != from.id)
        rep.add("chain.xi", {pos_name("n", n)},
                "starts at " + d0.id + ", wanted " + from.id);
      if (d1.id != to.id)
        rep.add("chain.xi", {pos_name("n", n)},
                "ends at " + d1.id + ", wanted " + to.id);
    } catch (Error const& err) {
      rep.add("chain.xi", {pos_name("n", n)}, err.what());
    }
  }
  return rep;
}

ChainComplex induced_complex(AddCategory const& C, SecondaryComplex const& S) {
  ChainComplex X;
  X.n_min = S.n_min;
  X.n_max = S.n_max;
  X.objects = S.objects;
  for (auto const& [n, e] : S.d) {
    auto it = C.class_of.find({e.src, e.tgt, e.id});
    if (it == C.class_of.end())
      throw_error(Err::UnknownId,
                  "cell " + e.id + " has no class in " + e.src + "->" + e.tgt);
    X.d.emplace(n, it->second);
  }
  return X;
}

bool vanishes(tta::TwoTrackAlgebra const& A, tta::Track const& t) {
  gpd::PointedGroupoid const& P = A.hom_at(t.src, t.tgt).g1;
  return P.G.mor_index(t.id) == P.G.identity_of(P.basepoint);
}

bool vanishes(tta::TwoTrackAlgebra const& A, tta::Element const& c) {
  if (c.degree != 2)
    throw_error(Err::PreconditionFailed,
                "vanishing is asked of a degree 2 cell, got degree " +
                    std::to_string(c.degree));
  gpd::PointedGroupoid const& P = A.hom_at(c.src, c.tgt).g2.P;
  return P.G.mor_index(c.id) == P.G.identity_of(P.basepoint);
}

tta::Track secondary_obstruction(tta::TwoTrackAlgebra const& A,
                                 SecondaryComplex const& S, int n) {
  if (n - 1 < S.n_min || n + 2 > S.n_max)
    throw_error(Err::IndexOutOfWindow,
                "obstruction at " + std::to_string(n) + " needs positions " +
                    std::to_string(n - 1) + ".." + std::to_string(n + 2));
  for (int k : {n - 1, n})
    if (!S.gamma.count(k))
      throw_error(Err::IndexOutOfWindow,
                  "no bounding track at " + std::to_string(k));
  Report local = check_secondary(A, window_slice(S, n - 1, n + 2));
  if (!local.ok()) throw_error(Err::SecondaryInvalid, local.to_string());

  tta::Track left =
      tta::bounding_track(A, tta::tensor(A, S.gamma.at(n - 1), S.d.at(n + 1)));
  tta::Track right =
      tta::bounding_track(A, tta::tensor(A, S.d.at(n - 1), S.gamma.at(n)));
  gpd::Groupoid const& G = A.hom_at(left.src, left.tgt).g1.G;
  std::size_t loop = G.compose(G.mor_index(left.id),
                               G.inverse(G.mor_index(right.id)));
  return tta::Track{left.src, left.tgt, G.mor_id(loop)};
}

bool is_secondary_chain_complex(tta::TwoTrackAlgebra const& A,
                                SecondaryComplex const& S) {
  if (!check_secondary(A, S).ok()) return false;
  for (int n = S.n_min + 1; n + 2 <= S.n_max; ++n)
    if (!vanishes(A, secondary_obstruction(A, S, n))) return false;
  return true;
}

tta::Element tertiary_obstruction(tta::TwoTrackAlgebra const& A,
                                  TertiaryComplex const& T, int n) {
  SecondaryComplex const& S = T.sec;
  if (n - 1 < S.n_min || n + 3 > S.n_max)
    throw_error(Err::IndexOutOfWindow,
                "obstruction at " + std::to_string(n) + " needs positions " +
                    std::to_string(n - 1) + ".." + std::to_string(n + 3));
  for (int k : {n - 1, n})
    if (!T.xi.count(k))
      throw_error(Err::IndexOutOfWindow, "no track at " + std::to_string(k));
  TertiaryComplex local{window_slice(S, n - 1, n + 3), {}};
  for (int k : {n - 1, n}) local.xi.emplace(k, T.xi.at(k));
  Report ok = check_tertiary(A, local);
  if (!ok.ok()) throw_error(Err::SecondaryInvalid, ok.to_string());

  try {
    tta::Element close = tta::tensor(A, S.d.at(n - 1), T.xi.at(n));
    tta::Element mid = tta::tensor(A, S.gamma.at(n - 1), S.gamma.at(n + 1));
    tta::Element open = tta::tensor(A, T.xi.at(n - 1), S.d.at(n + 2));
    ttg::TwoTrackGroupoid const& H = A.hom_at(close.src, close.tgt);
    gpd::Groupoid const& G = H.g2.P.G;
    std::size_t whole = G.compose(
        G.mor_index(open.id),
        G.compose(G.mor_index(mid.id), G.mor_index(close.id)));
    std::size_t at_zero = H.g2.apply_psi(G.src(whole), whole);
    return tta::Element{close.src, close.tgt, 2, G.mor_id(at_zero)};
  } catch (Error const& e) {
    if (e.code() == Err::SecondaryInvalid) throw;
    throw_error(Err::SecondaryInvalid, e.what());
  }
}

bool is_tertiary_chain_complex(tta::TwoTrackAlgebra const& A,
                               TertiaryComplex const& T) {
  if (!check_tertiary(A, T).ok()) return false;
  if (!is_secondary_chain_complex(A, T.sec)) return false;
  for (int n = T.sec.n_min + 1; n + 3 <= T.sec.n_max; ++n)
    if (!vanishes(A, tertiary_obstruction(A, T, n))) return false;
  return true;
}

SecondaryComplex correct_1tracks(tta::TwoTrackAlgebra const& A,
                                 SecondaryComplex const& S,
                                 AddCategory const& C,
                                 std::vector<std::string> const& a_objects) {
  require_resolution(A, C, S, a_objects);
  std::vector<int> ns;
  for (int n = S.n_min; n + 2 <= S.n_max; ++n) ns.push_back(n);
  std::vector<std::vector<std::string>> cand;
  for (int n : ns) {
    tta::Element bound = tta::tensor(A, S.d.at(n), S.d.at(n + 1));
    auto v = paths_bounding(A, bound);
    if (auto it = S.gamma.find(n); it != S.gamma.end())
      prefer(v, it->second.id);
    cand.push_back(std::move(v));
  }
  SecondaryComplex out = S;
  out.gamma.clear();
  std::function<bool(std::size_t)> assign = [&](std::size_t i) -> bool {
    if (i == ns.size()) return true;
    int n = ns[i];
    for (auto const& id : cand[i]) {
      out.gamma[n] =
          tta::Element{S.objects.at(n + 2), S.objects.at(n), 1, id};
      if (i > 0 && !vanishes(A, secondary_obstruction(A, out, n))) continue;
      if (assign(i + 1)) return true;
    }
    out.gamma.erase(n);
    return false;
  };
  if (!assign(0))
    throw_error(Err::NoCorrectionFound,
                "no assignment of bounding tracks closes the window");
  return out;
}

TertiaryComplex correct_2tracks(tta::TwoTrackAlgebra const& A,
                                TertiaryComplex const& T,
                                AddCategory const& C,
                                std::vector<std::string> const& a_objects) {
  SecondaryComplex const& S = T.sec;
  require_resolution(A, C, S, a_objects);
  Report sec = check_secondary(A, S);
  if (!sec.ok()) throw_error(Err::SecondaryInvalid, sec.to_string());
  std::vector<int> ns;
  for (int n = S.n_min; n + 3 <= S.n_max; ++n) ns.push_back(n);
  std::vector<std::vector<std::string>> cand;
  for (int n : ns) {
    tta::Element from = tta::tensor(A, S.gamma.at(n), S.d.at(n + 2));
    tta::Element to = tta::tensor(A, S.d.at(n), S.gamma.at(n + 1));
    auto v = tracks_between(A, from, to);
    if (auto it = T.xi.find(n); it != T.xi.end()) prefer(v, it->second.id);
    cand.push_back(std::move(v));
  }
  TertiaryComplex out{S, {}};
  std::function<bool(std::size_t)> assign = [&](std::size_t i) -> bool {
    if (i == ns.size()) return true;
    int n = ns[i];
    for (auto const& id : cand[i]) {
      out.xi[n] = tta::Element{S.objects.at(n + 3), S.objects.at(n), 2, id};
      if (i > 0 && !vanishes(A, tertiary_obstruction(A, out, n))) continue;
      if (assign(i + 1)) return true;
    }
    out.xi.erase(n);
    return false;
  };
  if (!assign(0))
    throw_error(Err::NoCorrectionFound,
                "no assignment of tracks closes the window");
  return out;
}

TertiaryComplex build_resolution(tta::TwoTrackAlgebra const& A,
                                 AddCategory const& C,
                                 std::vector<std::string> const& a_objects,
                                 ChainComplex const& X) {
  Report cls = check_chain(C, X);
  if (!cls.ok()) throw_error(Err::NotAResolution, cls.to_string());
  if (!is_a_exact(C, X, a_objects))
    throw_error(Err::NotAResolution, "hom from a carrier is not exact");
  for (int n = X.n_min + 1; n <= X.n_max; ++n)
    if (std::find(a_objects.begin(), a_objects.end(), X.objects.at(n)) ==
        a_objects.end())
      throw_error(Err::NotAResolution,
                  "object at " + std::to_string(n) + " is not a carrier");
  SecondaryComplex S;
  S.n_min = X.n_min;
  S.n_max = X.n_max;
  S.objects = X.objects;
  for (auto const& [n, id] : X.d) {
    std::string const& src = X.objects.at(n + 1);
    std::string const& tgt = X.objects.at(n);
    if (!A.hom_at(src, tgt).g1.G.has_object(id))
      throw_error(Err::NotAResolution,
                  "class " + id + " does not name a cell of " + src + "->" +
                      tgt);
    S.d.emplace(n, tta::Element{src, tgt, 0, id});
  }
  S = correct_1tracks(A, S, C, a_objects);
  return correct_2tracks(A, TertiaryComplex{std::move(S), {}}, C, a_objects);
}

}  // namespace chains
}  // namespace ttk
