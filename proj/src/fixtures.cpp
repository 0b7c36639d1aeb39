#include "ttk/fixtures.hpp"

namespace ttk {
namespace fixtures {

gpd::Groupoid gf1() {
  gpd::GroupoidData d;
  d.objects = {"x", "y"};
  d.morphisms = {{"idx", "x", "x"},
                 {"idy", "y", "y"},
                 {"f", "x", "y"},
                 {"g", "y", "x"}};
  d.identity = {{"x", "idx"}, {"y", "idy"}};
  d.inverse = {{"idx", "idx"}, {"idy", "idy"}, {"f", "g"}, {"g", "f"}};
  d.compose = {{"idx", "idx", "idx"}, {"idx", "g", "g"},
               {"f", "idx", "f"},     {"f", "g", "idy"},
               {"idy", "idy", "idy"}, {"idy", "f", "f"},
               {"g", "idy", "g"},     {"g", "f", "idx"}};
  return gpd::Groupoid(std::move(d));
}

gpd::Groupoid cyclic_groupoid(unsigned n, std::string const& prefix) {
  gpd::GroupoidData d;
  std::string o = prefix + "o";
  d.objects = {o};
  auto m = [&](unsigned k) { return prefix + std::to_string(k % n); };
  for (unsigned k = 0; k < n; ++k) {
    d.morphisms.push_back({m(k), o, o});
    d.inverse.push_back({m(k), m(n - k)});
    for (unsigned l = 0; l < n; ++l) {
      d.compose.push_back({m(k), m(l), m(k + l)});
    }
  }
  d.identity = {{o, m(0)}};
  return gpd::Groupoid(std::move(d));
}

gpd::Groupoid connected_cyclic(unsigned n) {
  gpd::GroupoidData d;
  d.objects = {"u", "v"};
  auto lab = [&](char c, unsigned k) {
    return std::string(1, c) + std::to_string(k % n);
  };
  // u_g: u->u, v_g: v->v, a_g: u->v, b_g: v->u; labels add under
  // composition, inverses negate and swap a/b
  for (unsigned k = 0; k < n; ++k) {
    d.morphisms.push_back({lab('u', k), "u", "u"});
    d.morphisms.push_back({lab('v', k), "v", "v"});
    d.morphisms.push_back({lab('a', k), "u", "v"});
    d.morphisms.push_back({lab('b', k), "v", "u"});
    d.inverse.push_back({lab('u', k), lab('u', n - k)});
    d.inverse.push_back({lab('v', k), lab('v', n - k)});
    d.inverse.push_back({lab('a', k), lab('b', n - k)});
    d.inverse.push_back({lab('b', k), lab('a', n - k)});
    for (unsigned l = 0; l < n; ++l) {
      d.compose.push_back({lab('u', k), lab('u', l), lab('u', k + l)});
      d.compose.push_back({lab('v', k), lab('v', l), lab('v', k + l)});
      d.compose.push_back({lab('a', k), lab('u', l), lab('a', k + l)});
      d.compose.push_back({lab('v', k), lab('a', l), lab('a', k + l)});
      d.compose.push_back({lab('b', k), lab('v', l), lab('b', k + l)});
      d.compose.push_back({lab('u', k), lab('b', l), lab('b', k + l)});
      d.compose.push_back({lab('b', k), lab('a', l), lab('u', k + l)});
      d.compose.push_back({lab('a', k), lab('b', l), lab('v', k + l)});
    }
  }
  d.identity = {{"u", lab('u', 0)}, {"v", lab('v', 0)}};
  return gpd::Groupoid(std::move(d));
}

gpd::GroupoidData renamed(gpd::GroupoidData d, std::string const& prefix) {
  for (auto& o : d.objects) {
    o = prefix + o;
  }
  for (auto& m : d.morphisms) {
    m.id = prefix + m.id;
    m.src = prefix + m.src;
    m.tgt = prefix + m.tgt;
  }
  for (auto& row : d.compose) {
    for (auto& s : row) {
      s = prefix + s;
    }
  }
  for (auto& row : d.inverse) {
    for (auto& s : row) {
      s = prefix + s;
    }
  }
  for (auto& row : d.identity) {
    for (auto& s : row) {
      s = prefix + s;
    }
  }
  return d;
}

ttg::TwoTrackGroupoid fat_ttg(std::string const& prefix) {
  gpd::GroupoidData g1d = renamed(connected_cyclic(2).data(), prefix);

  gpd::GroupoidData g2d;
  std::map<std::string, std::map<std::string, std::string>> psi;
  std::map<std::string, std::string> q;
  std::string bp2 = prefix + "nu0_u";
  for (std::string f : {"u0", "u1", "b0", "b1"}) {
    auto copy = renamed(connected_cyclic(2).data(), prefix + "n" + f + "_");
    g2d.objects.insert(g2d.objects.end(), copy.objects.begin(),
                       copy.objects.end());
    g2d.morphisms.insert(g2d.morphisms.end(), copy.morphisms.begin(),
                         copy.morphisms.end());
    g2d.compose.insert(g2d.compose.end(), copy.compose.begin(),
                       copy.compose.end());
    g2d.inverse.insert(g2d.inverse.end(), copy.inverse.begin(),
                       copy.inverse.end());
    g2d.identity.insert(g2d.identity.end(), copy.identity.begin(),
                        copy.identity.end());
    for (char c : {'u', 'v'}) {
      std::string obj = prefix + "n" + f + "_" + c;
      q[obj] = prefix + f;
      auto& slot = psi[obj];
      for (int k = 0; k < 2; ++k) {
        slot[obj + std::to_string(k)] = bp2 + std::to_string(k);
      }
    }
  }
  gpd::PointedGroupoid p1(gpd::Groupoid(std::move(g1d)), prefix + "u");
  gpd::PointedGroupoid p2(gpd::Groupoid(std::move(g2d)), bp2);
  gpd::StrictlyAbelianGroupoid s2(std::move(p2), psi);
  return ttg::TwoTrackGroupoid(std::move(p1), std::move(s2), q);
}

em::AlgebraData t1_data(std::string const& prefix, bool with_za,
                        bool with_mpp) {
  auto P = [&](char const* s) { return prefix + s; };
  em::AlgebraData d;
  d.objects = {P("Y0"), P("Y1"), P("Y2"), P("Y3")};
  auto add = [&](int a, int b, em::HomComplex cx) {
    d.homs[{d.objects[a], d.objects[b]}] = std::move(cx);
  };
  add(1, 0, {{P("x1")}, {}, {}, {}, {}});
  add(2, 1, {{P("x2")}, {}, {}, {}, {}});
  add(3, 2, {{P("x3")}, {}, {}, {}, {}});
  add(0, 3, {{P("x4")}, {}, {}, {}, {}});
  if (with_za)
    add(2, 0, {{P("u")}, {P("a0"), P("za")}, {}, {1, 0}, {}});
  else
    add(2, 0, {{P("u")}, {P("a0")}, {}, {1}, {}});
  add(3, 1, {{P("v")}, {P("b0")}, {}, {1}, {}});
  add(0, 2, {{P("vp")}, {P("c0")}, {}, {1}, {}});
  add(3, 0, {{P("w")}, {P("p"), P("r")}, {}, {1, 1}, {}});
  if (with_mpp)
    add(0, 1, {{P("wp")}, {P("pp"), P("rp")}, {P("mp"), P("mpp")},
               {1, 1}, {3, 0}});
  else
    add(0, 1, {{P("wp")}, {P("pp"), P("rp")}, {P("mp")}, {1, 1}, {3}});
  add(0, 0, {{P("one0"), P("zs")}, {P("e")}, {P("om")}, {2}, {0}});
  add(1, 1, {{P("one1")}, {}, {}, {}, {}});
  add(2, 2, {{P("one2")}, {}, {}, {}, {}});
  add(3, 3, {{P("one3")}, {}, {}, {}, {}});
  d.units = {{P("Y0"), P("one0")},
             {P("Y1"), P("one1")},
             {P("Y2"), P("one2")},
             {P("Y3"), P("one3")}};

  auto mu = [&](int a, int b, int c, int i, int j, char const* l,
                char const* r, std::vector<char const*> const& out) {
    em::PairingEntry e;
    e.a = d.objects[a];
    e.b = d.objects[b];
    e.c = d.objects[c];
    e.i = i;
    e.j = j;
    e.left = P(l);
    e.right = P(r);
    for (auto* s : out) e.out.push_back(P(s));
    d.mu.push_back(std::move(e));
  };
  mu(2, 1, 0, 0, 0, "x1", "x2", {"u"});
  mu(3, 2, 1, 0, 0, "x2", "x3", {"v"});
  mu(0, 3, 2, 0, 0, "x3", "x4", {"vp"});
  mu(3, 2, 0, 0, 0, "u", "x3", {"w"});
  mu(3, 2, 0, 1, 0, "a0", "x3", {"p"});
  if (with_za) mu(3, 2, 0, 1, 0, "za", "x3", {"p", "r"});
  mu(3, 1, 0, 0, 0, "x1", "v", {"w"});
  mu(3, 1, 0, 0, 1, "x1", "b0", {"r"});
  mu(0, 3, 1, 0, 0, "v", "x4", {"wp"});
  mu(0, 3, 1, 1, 0, "b0", "x4", {"pp"});
  mu(0, 2, 1, 0, 0, "x2", "vp", {"wp"});
  mu(0, 2, 1, 0, 1, "x2", "c0", {"rp"});
  mu(0, 2, 0, 0, 0, "u", "vp", {"zs"});
  mu(0, 2, 0, 0, 1, "u", "c0", {"e"});
  mu(0, 2, 0, 1, 0, "a0", "vp", {"e"});
  mu(0, 2, 0, 1, 1, "a0", "c0", {"om"});
  mu(0, 1, 0, 0, 0, "x1", "wp", {"zs"});
  mu(0, 1, 0, 0, 1, "x1", "pp", {"e"});
  mu(0, 1, 0, 0, 1, "x1", "rp", {"e"});
  if (with_mpp) mu(0, 1, 0, 0, 2, "x1", "mpp", {"om"});
  mu(0, 3, 0, 0, 0, "w", "x4", {"zs"});
  mu(0, 3, 0, 1, 0, "p", "x4", {"e"});
  mu(0, 3, 0, 1, 0, "r", "x4", {"e"});
  return d;
}

tta::TwoTrackAlgebra t1_algebra(std::string const& prefix, bool with_za,
                                bool with_mpp) {
  return em::realize(t1_data(prefix, with_za, with_mpp));
}

tta::TwoTrackAlgebra terminal_algebra() {
  em::AlgebraData d;
  d.objects = {"Z"};
  d.units = {{"Z", ""}};
  return em::realize(d);
}

std::string prefix_cell_id(std::string const& id, std::string const& prefix) {
  std::string out, tok;
  auto flush = [&] {
    if (tok.empty()) return;
    if (tok != "0") out += prefix;
    out += tok;
    tok.clear();
  };
  for (char c : id) {
    if (c == '(' || c == ')' || c == '|' || c == '+') {
      flush();
      out += c;
    } else {
      tok += c;
    }
  }
  flush();
  return out;
}

tta::TtaMorphism t1_relabel(std::string const& prefix) {
  tta::TwoTrackAlgebra A = t1_algebra();
  tta::TtaMorphism F;
  for (auto const& obj : A.objects) F.on_objects[obj] = prefix + obj;
  for (auto const& [key, H] : A.hom) {
    ttg::TtgMorphism m;
    auto fill = [&](gpd::Groupoid const& G, gpd::Functor& f) {
      for (std::size_t i = 0; i < G.n_objects(); ++i)
        f.on_objects[G.object_id(i)] = prefix_cell_id(G.object_id(i), prefix);
      for (std::size_t i = 0; i < G.n_morphisms(); ++i)
        f.on_morphisms[G.mor_id(i)] = prefix_cell_id(G.mor_id(i), prefix);
    };
    fill(H.g1.G, m.f1);
    fill(H.g2.P.G, m.f2);
    F.on_homs[key] = std::move(m);
  }
  return F;
}

balls::BallChain b1_chain() {
  balls::BallChain ch;
  ch.from = "Y0";
  ch.to = "Y1";
  ch.entries = {{tta::Element{"Y0", "Y1", 2, "(pp|mp)"}, 1},
                {tta::Element{"Y0", "Y1", 2, "(rp|mpp)"}, 1},
                {tta::Element{"Y0", "Y1", 2, "(pp|mp)"}, -1}};
  return ch;
}

chains::SecondaryComplex s1_secondary(std::string const& prefix) {
  auto cell = [&](std::string const& a, std::string const& b, int deg,
                  std::string const& id) {
    return tta::Element{prefix + a, prefix + b, deg,
                        prefix_cell_id(id, prefix)};
  };
  chains::SecondaryComplex S;
  S.n_min = 0;
  S.n_max = 4;
  S.objects = {{0, prefix + "Y0"},
               {1, prefix + "Y1"},
               {2, prefix + "Y2"},
               {3, prefix + "Y3"},
               {4, prefix + "Y0"}};
  S.d = {{0, cell("Y1", "Y0", 0, "x1")},
         {1, cell("Y2", "Y1", 0, "x2")},
         {2, cell("Y3", "Y2", 0, "x3")},
         {3, cell("Y0", "Y3", 0, "x4")}};
  S.gamma = {{0, cell("Y2", "Y0", 1, "a0")},
             {1, cell("Y3", "Y1", 1, "b0")},
             {2, cell("Y0", "Y2", 1, "c0")}};
  return S;
}

chains::TertiaryComplex t1c_tertiary(std::string const& prefix) {
  auto cell = [&](std::string const& a, std::string const& b, int deg,
                  std::string const& id) {
    return tta::Element{prefix + a, prefix + b, deg,
                        prefix_cell_id(id, prefix)};
  };
  chains::TertiaryComplex T{s1_secondary(prefix), {}};
  T.sec.gamma[0] = cell("Y2", "Y0", 1, "a0+za");
  T.xi = {{0, cell("Y3", "Y0", 2, "(r|0)")},
          {1, cell("Y0", "Y1", 2, "(pp|mp)")}};
  return T;
}

DiscreteResolution discrete_resolution(steenrod::ModulePresentation const& pres,
                                       unsigned s_max, unsigned t_max) {
  resolution::MinimalResolution res =
      resolution::minimal_resolution(pres, s_max, t_max);
  DiscreteResolution out;
  auto obj = [](unsigned s) { return "F" + std::to_string(s); };

  struct Arrow {
    std::size_t gs, gt;
    steenrod::Monomial m;
  };
  std::map<std::pair<unsigned, unsigned>, std::vector<Arrow>> basis;
  auto name_of = [&](unsigned a, unsigned b, Arrow const& ar) {
    return res.F[a].gens[ar.gs].id + ":" + steenrod::to_string(ar.m) + ":" +
           res.F[b].gens[ar.gt].id;
  };
  for (unsigned a = 0; a <= s_max; ++a)
    for (unsigned b = 0; b <= s_max; ++b) {
      auto& v = basis[{a, b}];
      for (std::size_t gs = 0; gs < res.F[a].gens.size(); ++gs)
        for (std::size_t gt = 0; gt < res.F[b].gens.size(); ++gt) {
          unsigned ds = res.F[a].gens[gs].degree;
          unsigned dt = res.F[b].gens[gt].degree;
          if (ds < dt) continue;
          for (auto const& m : steenrod::admissible_basis(ds - dt))
            v.push_back({gs, gt, m});
        }
      if (!v.empty()) {
        em::HomComplex cx;
        for (auto const& ar : v) cx.b0.push_back(name_of(a, b, ar));
        out.data.homs[{obj(a), obj(b)}] = cx;
      }
    }
  for (unsigned s = 0; s <= s_max; ++s) out.data.objects.push_back(obj(s));

  for (unsigned s = 0; s <= s_max; ++s) {
    std::string u;
    for (auto const& ar : basis.at({s, s}))
      if (ar.gs == ar.gt && ar.m.empty())
        u += (u.empty() ? "" : "+") + name_of(s, s, ar);
    out.data.units[obj(s)] = u;
  }

  for (unsigned a = 0; a <= s_max; ++a)
    for (unsigned b = 0; b <= s_max; ++b)
      for (unsigned c = 0; c <= s_max; ++c)
        for (auto const& left : basis.at({b, c}))
          for (auto const& right : basis.at({a, b})) {
            if (right.gt != left.gs) continue;
            steenrod::Element prod = steenrod::multiply(
                steenrod::Element{{right.m}}, steenrod::Element{{left.m}});
            if (prod.is_zero()) continue;
            em::PairingEntry e{obj(a),
                               obj(b),
                               obj(c),
                               0,
                               0,
                               name_of(b, c, left),
                               name_of(a, b, right),
                               {}};
            for (auto const& mono : prod.support)
              e.out.push_back(name_of(a, c, Arrow{right.gs, left.gt, mono}));
            out.data.mu.push_back(std::move(e));
          }

  out.lift.n_min = 0;
  out.lift.n_max = static_cast<int>(s_max);
  for (unsigned s = 0; s <= s_max; ++s) {
    out.lift.objects[static_cast<int>(s)] = obj(s);
    out.carriers.push_back(obj(s));
  }
  for (unsigned s = 0; s + 1 <= s_max; ++s) {
    auto const& v = basis.at({s + 1, s});
    std::map<std::string, std::size_t> order;
    for (std::size_t i = 0; i < v.size(); ++i)
      order[name_of(s + 1, s, v[i])] = i;
    std::map<std::size_t, std::string> terms;
    for (std::size_t k = 0; k < res.F[s + 1].gens.size(); ++k) {
      auto const& img = res.gen_images[s + 1][k];
      auto const& db = res.bases[s][res.F[s + 1].gens[k].degree];
      for (std::size_t i = 0; i < img.size(); ++i)
        if (img[i]) {
          Arrow ar{k, db.elems[i].first, db.elems[i].second};
          std::string nm = name_of(s + 1, s, ar);
          terms[order.at(nm)] = nm;
        }
    }
    std::string id;
    for (auto const& [pos, nm] : terms) id += (id.empty() ? "" : "+") + nm;
    out.lift.d[static_cast<int>(s)] = id.empty() ? "0" : id;
  }
  return out;
}

}  // namespace fixtures
}  // namespace ttk
