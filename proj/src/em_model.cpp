#include "ttk/em_model.hpp"

#include "ttk/errors.hpp"

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace ttk {
namespace em {

namespace {

std::string mask_id(std::uint32_t m, std::vector<std::string> const& basis) {
  if (m == 0) return "0";
  std::string s;
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (m >> i & 1u) {
      if (!s.empty()) s += "+";
      s += basis[i];
    }
  return s;
}

int index_of(std::string const& name, std::vector<std::string> const& basis,
             std::string const& what) {
  auto it = std::find(basis.begin(), basis.end(), name);
  if (it == basis.end())
    throw_error(Err::UnknownId, what + ": no basis element " + name);
  return static_cast<int>(it - basis.begin());
}

struct Realized {
  HomComplex cx;
  std::size_t n0 = 0, n1 = 0, n2 = 0;
  std::vector<std::pair<int, std::uint32_t>> ech;  // pivot bit, image row
  std::vector<std::uint32_t> reps;                 // coset reps of C1

  std::uint32_t bnd(std::vector<std::uint32_t> const& rows,
                    std::uint32_t m) const {
    std::uint32_t out = 0;
    for (std::size_t i = 0; i < rows.size(); ++i)
      if (m >> i & 1u) out ^= rows[i];
    return out;
  }
  std::uint32_t d1v(std::uint32_t m) const {
    return bnd(cx.d1, m);
  }
  std::uint32_t d2v(std::uint32_t m) const {
    return bnd(cx.d2, m);
  }
  std::uint32_t rep(std::uint32_t m) const {
    for (auto const& [piv, row] : ech)
      if (m >> piv & 1u) m ^= row;
    return m;
  }
  std::string id0(std::uint32_t m) const {
    return mask_id(m, cx.b0);
  }
  std::string id1(std::uint32_t m) const {
    return mask_id(m, cx.b1);
  }
  std::string id2(std::uint32_t m) const {
    return mask_id(m, cx.b2);
  }
  std::string track_id(std::uint32_t x, std::uint32_t t) const {
    return "(" + id0(x) + "|" + id1(t) + ")";
  }
  std::string two_id(std::uint32_t p, std::uint32_t m) const {
    return "(" + id1(p) + "|" + id2(m) + ")";
  }
};

Realized realize_complex(HomComplex const& cx, std::string const& where) {
  Realized r;
  r.cx = cx;
  r.n0 = cx.b0.size();
  r.n1 = cx.b1.size();
  r.n2 = cx.b2.size();
  if (r.n0 > 6 || r.n1 > 6 || r.n2 > 6)
    throw_error(Err::PreconditionFailed, where + ": basis larger than 6");
  if (cx.d1.size() != r.n1 || cx.d2.size() != r.n2)
    throw_error(Err::PreconditionFailed,
                where + ": boundary rows do not match basis");
  for (auto m : cx.d1)
    if (m >> r.n0)
      throw_error(Err::PreconditionFailed, where + ": d1 mask out of range");
  for (auto m : cx.d2) {
    if (m >> r.n1)
      throw_error(Err::PreconditionFailed, where + ": d2 mask out of range");
    if (r.d1v(m) != 0)
      throw_error(Err::PreconditionFailed, where + ": d1 d2 != 0");
  }
  for (auto const& name : cx.b0)
    if (name.empty() || name == "0")
      throw_error(Err::PreconditionFailed, where + ": reserved basis name");
  for (auto const& name : cx.b1)
    if (name.empty() || name == "0")
      throw_error(Err::PreconditionFailed, where + ": reserved basis name");
  for (auto const& name : cx.b2)
    if (name.empty() || name == "0")
      throw_error(Err::PreconditionFailed, where + ": reserved basis name");
  for (auto row : cx.d2) {
    std::uint32_t m = row;
    for (auto const& [piv, r2] : r.ech)
      if (m >> piv & 1u) m ^= r2;
    if (m != 0) {
      int piv = 31;
      while (!(m >> piv & 1u)) --piv;
      r.ech.emplace_back(piv, m);
    }
  }
  for (std::uint32_t m = 0; m < (1u << r.n1); ++m)
    if (r.rep(m) == m) r.reps.push_back(m);
  return r;
}

struct MuKey {
  std::string a, b, c;
  int i, j;
  auto operator<=>(MuKey const&) const = default;
};

using MuTables = std::map<MuKey, std::map<std::pair<int, int>, std::uint32_t>>;

void put_mu(MuTables& mu, MuKey const& k, int li, int ri, std::uint32_t out) {
  auto& t = mu[k];
  auto it = t.find({li, ri});
  if (it != t.end()) {
    if (it->second != out)
      throw_error(Err::DuplicateId,
                  "conflicting pairing for " + k.a + "," + k.b + "," + k.c +
                      " degrees " + std::to_string(k.i) + "," +
                      std::to_string(k.j));
    return;
  }
  t.emplace(std::make_pair(li, ri), out);
}

std::uint32_t eval_mu(MuTables const& mu, MuKey const& k, std::uint32_t l,
                      std::uint32_t r) {
  auto t = mu.find(k);
  if (t == mu.end()) return 0;
  std::uint32_t out = 0;
  for (int li = 0; l >> li; ++li) {
    if (!(l >> li & 1u)) continue;
    for (int ri = 0; r >> ri; ++ri) {
      if (!(r >> ri & 1u)) continue;
      auto e = t->second.find({li, ri});
      if (e != t->second.end()) out ^= e->second;
    }
  }
  return out;
}

}  // namespace

tta::TwoTrackAlgebra realize(AlgebraData const& data) {
  auto is_object = [&](std::string const& x) {
    return std::find(data.objects.begin(), data.objects.end(), x) !=
           data.objects.end();
  };
  for (auto const& [key, cx] : data.homs) {
    (void)cx;
    if (!is_object(key.first) || !is_object(key.second))
      throw_error(Err::UnknownId,
                  "hom at unknown object " + key.first + "," + key.second);
  }

  std::map<std::pair<std::string, std::string>, Realized> rz;
  for (auto const& a : data.objects)
    for (auto const& b : data.objects) {
      auto it = data.homs.find({a, b});
      rz.emplace(std::make_pair(a, b),
                 realize_complex(it == data.homs.end() ? HomComplex{}
                                                       : it->second,
                                 "hom " + a + "->" + b));
    }

  // unit products act as the identity; everything else defaults to zero
  MuTables mu;
  auto basis_of = [&](Realized const& r, int deg)
      -> std::vector<std::string> const& {
    return deg == 0 ? r.cx.b0 : deg == 1 ? r.cx.b1 : r.cx.b2;
  };
  for (auto const& bobj : data.objects) {
    auto uit = data.units.find(bobj);
    if (uit == data.units.end())
      throw_error(Err::UnknownId, "no unit named for object " + bobj);
    if (uit->second.empty()) continue;
    // a composite unit (a '+' joined sum) must come with explicit products
    if (uit->second.find('+') != std::string::npos) continue;
    Realized const& end = rz.at({bobj, bobj});
    int u = index_of(uit->second, end.cx.b0, "unit of " + bobj);
    for (auto const& aobj : data.objects) {
      Realized const& h = rz.at({aobj, bobj});
      for (int j = 0; j <= 2; ++j) {
        std::size_t n = basis_of(h, j).size();
        for (int y = 0; y < static_cast<int>(n); ++y)
          put_mu(mu, {aobj, bobj, bobj, 0, j}, u, y, 1u << y);
      }
      Realized const& g = rz.at({bobj, aobj});
      for (int j = 0; j <= 2; ++j) {
        std::size_t n = basis_of(g, j).size();
        for (int y = 0; y < static_cast<int>(n); ++y)
          put_mu(mu, {bobj, bobj, aobj, j, 0}, y, u, 1u << y);
      }
    }
  }
  for (auto const& e : data.mu) {
    if (!is_object(e.a) || !is_object(e.b) || !is_object(e.c))
      throw_error(Err::UnknownId, "pairing at unknown object");
    if (e.i < 0 || e.j < 0 || e.i + e.j > 2)
      throw_error(Err::PreconditionFailed, "pairing degrees " +
                                               std::to_string(e.i) + "," +
                                               std::to_string(e.j));
    Realized const& L = rz.at({e.b, e.c});
    Realized const& R = rz.at({e.a, e.b});
    Realized const& O = rz.at({e.a, e.c});
    int li = index_of(e.left, basis_of(L, e.i), "pairing left");
    int ri = index_of(e.right, basis_of(R, e.j), "pairing right");
    std::uint32_t out = 0;
    for (auto const& name : e.out)
      out |= 1u << index_of(name, basis_of(O, e.i + e.j), "pairing value");
    put_mu(mu, {e.a, e.b, e.c, e.i, e.j}, li, ri, out);
  }

  tta::TwoTrackAlgebra A;
  A.objects = data.objects;
  for (auto const& [key, r] : rz) {
    gpd::GroupoidData g1d;
    for (std::uint32_t x = 0; x < (1u << r.n0); ++x)
      g1d.objects.push_back(r.id0(x));
    for (std::uint32_t x = 0; x < (1u << r.n0); ++x)
      for (auto t : r.reps)
        g1d.morphisms.push_back(
            {r.track_id(x, t), r.id0(x), r.id0(x ^ r.d1v(t))});
    for (std::uint32_t x = 0; x < (1u << r.n0); ++x)
      for (auto t : r.reps) {
        for (auto s : r.reps)
          g1d.compose.push_back({r.track_id(x ^ r.d1v(t), s),
                                 r.track_id(x, t),
                                 r.track_id(x, r.rep(t ^ s))});
        g1d.inverse.push_back({r.track_id(x, t), r.track_id(x ^ r.d1v(t), t)});
      }
    for (std::uint32_t x = 0; x < (1u << r.n0); ++x)
      g1d.identity.push_back({r.id0(x), r.track_id(x, 0)});

    gpd::GroupoidData g2d;
    std::map<std::string, std::map<std::string, std::string>> psi;
    std::map<std::string, std::string> q;
    for (std::uint32_t p = 0; p < (1u << r.n1); ++p)
      g2d.objects.push_back(r.id1(p));
    for (std::uint32_t p = 0; p < (1u << r.n1); ++p)
      for (std::uint32_t m = 0; m < (1u << r.n2); ++m)
        g2d.morphisms.push_back(
            {r.two_id(p, m), r.id1(p), r.id1(p ^ r.d2v(m))});
    for (std::uint32_t p = 0; p < (1u << r.n1); ++p)
      for (std::uint32_t m = 0; m < (1u << r.n2); ++m) {
        for (std::uint32_t m2 = 0; m2 < (1u << r.n2); ++m2)
          g2d.compose.push_back({r.two_id(p ^ r.d2v(m), m2), r.two_id(p, m),
                                 r.two_id(p, m ^ m2)});
        g2d.inverse.push_back({r.two_id(p, m), r.two_id(p ^ r.d2v(m), m)});
      }
    for (std::uint32_t p = 0; p < (1u << r.n1); ++p) {
      g2d.identity.push_back({r.id1(p), r.two_id(p, 0)});
      for (std::uint32_t m = 0; m < (1u << r.n2); ++m)
        if (r.d2v(m) == 0) psi[r.id1(p)][r.two_id(p, m)] = r.two_id(0, m);
      q[r.id1(p)] = "(" + r.id0(r.d1v(p)) + "|" + r.id1(r.rep(p)) + ")";
    }

    A.hom.emplace(
        key,
        ttg::TwoTrackGroupoid(
            gpd::PointedGroupoid(gpd::Groupoid(std::move(g1d)), "0"),
            gpd::StrictlyAbelianGroupoid(
                gpd::PointedGroupoid(gpd::Groupoid(std::move(g2d)), "0"), psi),
            q));
  }
  for (auto const& obj : data.objects) {
    std::string const& name = data.units.at(obj);
    A.units[obj] = name.empty() ? "0" : name;
  }

  using tta::Element;
  using tta::Track;
  for (auto const& c : data.objects)
    for (auto const& b : data.objects)
      for (auto const& a : data.objects) {
        Realized const& L = rz.at({b, c});
        Realized const& R = rz.at({a, b});
        Realized const& O = rz.at({a, c});
        auto ev = [&](int i, int j, std::uint32_t l, std::uint32_t rr) {
          return eval_mu(mu, {a, b, c, i, j}, l, rr);
        };
        for (std::uint32_t x = 0; x < (1u << L.n0); ++x) {
          Element ex{b, c, 0, L.id0(x)};
          for (std::uint32_t y = 0; y < (1u << R.n0); ++y)
            A.tensor_table[{ex, Element{a, b, 0, R.id0(y)}}] =
                Element{a, c, 0, O.id0(ev(0, 0, x, y))};
          for (std::uint32_t p = 0; p < (1u << R.n1); ++p)
            A.tensor_table[{ex, Element{a, b, 1, R.id1(p)}}] =
                Element{a, c, 1, O.id1(ev(0, 1, x, p))};
          for (std::uint32_t p = 0; p < (1u << R.n1); ++p)
            for (std::uint32_t m = 0; m < (1u << R.n2); ++m)
              A.tensor_table[{ex, Element{a, b, 2, R.two_id(p, m)}}] =
                  Element{a, c, 2,
                          O.two_id(ev(0, 1, x, p), ev(0, 2, x, m))};
          for (std::uint32_t y = 0; y < (1u << R.n0); ++y)
            for (auto t : R.reps)
              A.whisker_left[{ex, Track{a, b, R.track_id(y, t)}}] =
                  Track{a, c,
                        O.track_id(ev(0, 0, x, y), O.rep(ev(0, 1, x, t)))};
        }
        for (std::uint32_t p = 0; p < (1u << L.n1); ++p) {
          Element ep{b, c, 1, L.id1(p)};
          for (std::uint32_t y = 0; y < (1u << R.n0); ++y)
            A.tensor_table[{ep, Element{a, b, 0, R.id0(y)}}] =
                Element{a, c, 1, O.id1(ev(1, 0, p, y))};
          for (std::uint32_t q1 = 0; q1 < (1u << R.n1); ++q1)
            A.tensor_table[{ep, Element{a, b, 1, R.id1(q1)}}] =
                Element{a, c, 2,
                        O.two_id(ev(0, 1, L.d1v(p), q1), ev(1, 1, p, q1))};
        }
        for (std::uint32_t p = 0; p < (1u << L.n1); ++p)
          for (std::uint32_t m = 0; m < (1u << L.n2); ++m) {
            Element e2{b, c, 2, L.two_id(p, m)};
            for (std::uint32_t y = 0; y < (1u << R.n0); ++y)
              A.tensor_table[{e2, Element{a, b, 0, R.id0(y)}}] =
                  Element{a, c, 2,
                          O.two_id(ev(1, 0, p, y), ev(2, 0, m, y))};
          }
        for (std::uint32_t y = 0; y < (1u << L.n0); ++y)
          for (auto t : L.reps) {
            Track tl{b, c, L.track_id(y, t)};
            for (std::uint32_t x = 0; x < (1u << R.n0); ++x)
              A.whisker_right[{tl, Element{a, b, 0, R.id0(x)}}] =
                  Track{a, c,
                        O.track_id(ev(0, 0, y, x), O.rep(ev(1, 0, t, x)))};
          }
      }
  return A;
}

}  // namespace em
}  // namespace ttk
