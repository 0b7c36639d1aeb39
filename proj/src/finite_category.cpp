#include "ttk/chains.hpp"

#include <algorithm>
#include <cstddef>
#include <functional>
#include <set>
#include <sstream>
#include <string>

#include "ttk/errors.hpp"
#include "ttk/resolution.hpp"

namespace ttk {
namespace chains {

namespace {

std::string hom_name(std::string const& a, std::string const& b) {
  return a + "->" + b;
}

std::string pos_name(char const* what, int n) {
  std::ostringstream s;
  s << what << " " << n;
  return s.str();
}

// cell labels are '+' joined sums of basis names, "0" the empty sum
std::set<std::string> label_terms(std::string const& id) {
  std::set<std::string> out;
  std::string cur;
  auto flush = [&] {
    if (!cur.empty() && cur != "0") out.insert(cur);
    cur.clear();
  };
  for (char c : id) {
    if (c == '+') {
      flush();
    } else {
      cur.push_back(c);
    }
  }
  flush();
  return out;
}

std::size_t log2_exact(std::size_t n, char const* what) {
  std::size_t d = 0;
  while (n > 1 && n % 2 == 0) {
    n /= 2;
    ++d;
  }
  if (n != 1)
    throw_error(Err::NotAdditive,
                std::string(what) + " has size not a power of 2");
  return d;
}

}  // namespace

std::size_t AddCategory::index(std::string const& a, std::string const& b,
                               std::string const& id) const {
  auto it = hom.find({a, b});
  if (it == hom.end())
    throw_error(Err::UnknownId, "no hom " + hom_name(a, b));
  auto p = std::find(it->second.begin(), it->second.end(), id);
  if (p == it->second.end())
    throw_error(Err::UnknownId, id + " is not a class in " + hom_name(a, b));
  return static_cast<std::size_t>(p - it->second.begin());
}

AddCategory pi0_additive(tta::TwoTrackAlgebra const& A) {
  tta::HomotopyCategory pi0 = tta::homotopy_category(A);
  AddCategory C;
  C.objects = pi0.objects;
  for (auto const& [key, reps] : pi0.hom_classes) {
    C.hom[key] = reps;
    C.zero[key] = static_cast<std::size_t>(
        std::find(reps.begin(), reps.end(), pi0.zero_class.at(key)) -
        reps.begin());
  }
  for (auto const& obj : C.objects)
    C.unit[obj] = C.index(obj, obj, pi0.unit_class.at(obj));

  for (auto const& c : C.objects)
    for (auto const& b : C.objects)
      for (auto const& a : C.objects) {
        auto g = C.hom.find({b, c});
        auto f = C.hom.find({a, b});
        if (g == C.hom.end() || f == C.hom.end()) continue;
        std::vector<std::vector<std::size_t>> t(
            g->second.size(), std::vector<std::size_t>(f->second.size()));
        for (std::size_t i = 0; i < g->second.size(); ++i)
          for (std::size_t j = 0; j < f->second.size(); ++j)
            t[i][j] = C.index(
                a, c, pi0.compose.at({a, b, c, g->second[i], f->second[j]}));
        C.compose[{a, b, c}] = t;
      }

  // [x] + [y] as the class of the label sum, when the labels resolve and
  // the result is independent of representatives
  for (auto const& [key, hom] : A.hom) {
    gpd::Groupoid const& g1 = hom.g1.G;
    std::map<std::set<std::string>, std::string> by_terms;
    bool usable = true;
    for (std::size_t i = 0; i < g1.n_objects() && usable; ++i)
      usable = by_terms.emplace(label_terms(g1.object_id(i)), g1.object_id(i))
                   .second;
    if (!usable) continue;
    auto const& reps = C.hom.at(key);
    std::size_t const nc = reps.size();
    std::vector<std::size_t> cls(g1.n_objects());
    std::vector<std::size_t> rep_of(nc);
    for (std::size_t i = 0; i < g1.n_objects(); ++i) {
      std::string const& r =
          pi0.class_of.at({key.first, key.second, g1.object_id(i)});
      cls[i] = static_cast<std::size_t>(
          std::find(reps.begin(), reps.end(), r) - reps.begin());
    }
    std::vector<std::vector<std::size_t>> t(nc,
                                            std::vector<std::size_t>(nc, nc));
    for (std::size_t i = 0; i < g1.n_objects() && usable; ++i)
      for (std::size_t j = 0; j < g1.n_objects() && usable; ++j) {
        std::set<std::string> sum = label_terms(g1.object_id(i));
        for (auto const& term : label_terms(g1.object_id(j))) {
          auto [it, fresh] = sum.insert(term);
          if (!fresh) sum.erase(it);
        }
        auto hit = by_terms.find(sum);
        if (hit == by_terms.end()) {
          usable = false;
          break;
        }
        std::size_t s = cls[g1.object_index(hit->second)];
        std::size_t& slot = t[cls[i]][cls[j]];
        if (slot == nc)
          slot = s;
        else if (slot != s)
          usable = false;  // sum not constant on classes
      }
    if (usable) {
      std::size_t z = C.zero.at(key);
      for (std::size_t j = 0; j < nc && usable; ++j)
        usable = t[z][j] == j;
    }
    if (usable) C.add[key] = t;
  }
  C.class_of = std::move(pi0.class_of);
  return C;
}

Report check_chain(AddCategory const& C, ChainComplex const& X) {
  Report rep;
  if (X.n_max < X.n_min) {
    rep.add("chain.shape", {}, "empty window");
    return rep;
  }
  std::set<std::string> known(C.objects.begin(), C.objects.end());
  for (auto const& [n, obj] : X.objects) {
    if (n < X.n_min || n > X.n_max)
      rep.add("chain.shape", {pos_name("object", n)}, "outside the window");
    else if (!known.count(obj))
      rep.add("chain.shape", {pos_name("object", n)}, "unknown object " + obj);
  }
  for (int n = X.n_min; n <= X.n_max; ++n)
    if (!X.objects.count(n))
      rep.add("chain.shape", {pos_name("object", n)}, "missing");
  for (auto const& [n, id] : X.d)
    if (n < X.n_min || n >= X.n_max)
      rep.add("chain.shape", {pos_name("d", n)}, "outside the window");
  for (int n = X.n_min; n < X.n_max; ++n) {
    auto it = X.d.find(n);
    if (it == X.d.end()) {
      rep.add("chain.shape", {pos_name("d", n)}, "missing");
      continue;
    }
    if (!X.objects.count(n) || !X.objects.count(n + 1)) continue;
    try {
      C.index(X.objects.at(n + 1), X.objects.at(n), it->second);
    } catch (Error const& e) {
      rep.add("chain.shape", {pos_name("d", n)}, e.what());
    }
  }
  if (!rep.ok()) return rep;

  for (int n = X.n_min + 1; n < X.n_max; ++n) {
    std::string const& a = X.objects.at(n + 1);
    std::string const& b = X.objects.at(n);
    std::string const& c = X.objects.at(n - 1);
    std::size_t gi = C.index(b, c, X.d.at(n - 1));
    std::size_t fi = C.index(a, b, X.d.at(n));
    std::size_t v = C.compose.at({a, b, c})[gi][fi];
    if (v != C.zero.at({a, c}))
      rep.add("chain.dd", {pos_name("n", n)},
              "composite is " + C.hom.at({a, c})[v]);
  }
  return rep;
}

bool is_a_exact(AddCategory const& C, ChainComplex const& X,
                std::vector<std::string> const& a_objects) {
  Report shape = check_chain(C, X);
  if (!shape.ok())
    throw_error(Err::PreconditionFailed,
                "not a chain complex: " + shape.to_string());
  for (auto const& W : a_objects) {
    if (std::find(C.objects.begin(), C.objects.end(), W) == C.objects.end())
      throw_error(Err::UnknownId, "unknown object " + W);
    for (int n = X.n_min + 1; n < X.n_max; ++n) {
      std::string const& up = X.objects.at(n + 1);
      std::string const& mid = X.objects.at(n);
      std::string const& dn = X.objects.at(n - 1);
      for (auto const& tgt : {up, mid, dn})
        if (!C.add.count({W, tgt}))
          throw_error(Err::NotAdditive,
                      "hom " + hom_name(W, tgt) + " has no addition");
      std::size_t di = C.index(up, mid, X.d.at(n));
      std::size_t ei = C.index(mid, dn, X.d.at(n - 1));
      auto const& push = C.compose.at({W, up, mid});
      auto const& pull = C.compose.at({W, mid, dn});
      std::set<std::size_t> image;
      for (std::size_t f = 0; f < C.hom.at({W, up}).size(); ++f)
        image.insert(push[di][f]);
      std::set<std::size_t> kernel;
      for (std::size_t f = 0; f < C.hom.at({W, mid}).size(); ++f)
        if (pull[ei][f] == C.zero.at({W, dn})) kernel.insert(f);
      if (image != kernel) return false;
    }
  }
  return true;
}

std::size_t ext_group_dim(AddCategory const& C, ChainComplex const& X,
                          std::string const& B, int s) {
  Report shape = check_chain(C, X);
  if (!shape.ok())
    throw_error(Err::PreconditionFailed,
                "not a chain complex: " + shape.to_string());
  if (s < X.n_min || s >= X.n_max)
    throw_error(Err::WindowExceeded,
                "position " + std::to_string(s) + " needs objects beyond [" +
                    std::to_string(X.n_min) + "," + std::to_string(X.n_max) +
                    "]");
  auto require_f2 = [&](std::string const& src) {
    auto it = C.add.find({src, B});
    if (it == C.add.end())
      throw_error(Err::NotAdditive,
                  "hom " + hom_name(src, B) + " has no addition");
    std::size_t z = C.zero.at({src, B});
    for (std::size_t i = 0; i < it->second.size(); ++i)
      if (it->second[i][i] != z)
        throw_error(Err::NotAdditive,
                    "hom " + hom_name(src, B) + " is not 2 torsion");
  };
  std::string const& As = X.objects.at(s);
  std::string const& Aup = X.objects.at(s + 1);
  require_f2(As);
  require_f2(Aup);

  // ker of precomposition with d[s]
  std::set<std::size_t> kernel;
  {
    std::size_t di = C.index(Aup, As, X.d.at(s));
    auto const& tab = C.compose.at({Aup, As, B});
    for (std::size_t f = 0; f < C.hom.at({As, B}).size(); ++f)
      if (tab[f][di] == C.zero.at({Aup, B})) kernel.insert(f);
  }
  std::set<std::size_t> image{C.zero.at({As, B})};
  if (s > X.n_min) {
    std::string const& Adn = X.objects.at(s - 1);
    require_f2(Adn);
    std::size_t ei = C.index(As, Adn, X.d.at(s - 1));
    auto const& tab = C.compose.at({As, Adn, B});
    for (std::size_t h = 0; h < C.hom.at({Adn, B}).size(); ++h)
      image.insert(tab[h][ei]);
  }
  for (std::size_t f : image)
    if (!kernel.count(f))
      throw_error(Err::PreconditionFailed,
                  "boundaries are not cycles at position " +
                      std::to_string(s));
  return log2_exact(kernel.size(), "kernel") -
         log2_exact(image.size(), "image");
}

std::size_t ext_group_dim(resolution::MinimalResolution const& res, unsigned s,
                          unsigned t) {
  if (s + 1 > res.s_max || t > res.t_max)
    throw_error(Err::WindowExceeded,
                "need the resolution through s " + std::to_string(s + 1) +
                    ", t " + std::to_string(t));
  // hom(F_s, sphere shifted by t) has one dual basis vector per degree t
  // generator; precomposition with d picks out unit coefficients
  auto gens_at = [&](unsigned deg_s) {
    std::vector<std::size_t> out;
    for (std::size_t k = 0; k < res.F[deg_s].gens.size(); ++k)
      if (res.F[deg_s].gens[k].degree == t) out.push_back(k);
    return out;
  };
  auto delta = [&](unsigned deg_s) {
    std::vector<std::size_t> rows = gens_at(deg_s);
    std::vector<std::size_t> cols = gens_at(deg_s + 1);
    gf2::BitMatrix m(rows.size(), cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
      auto const& img = res.gen_images[deg_s + 1][cols[j]];
      auto const& basis = res.bases[deg_s][t];
      for (std::size_t i = 0; i < rows.size(); ++i) {
        auto it = basis.index.find({rows[i], steenrod::Monomial{}});
        if (it != basis.index.end() && img[it->second]) m.set(i, j, true);
      }
    }
    return m;
  };
  std::size_t ker = gens_at(s).size() - gf2::rank(delta(s));
  std::size_t im = s == 0 ? 0 : gf2::rank(delta(s - 1));
  return ker - im;
}

}  // namespace chains
}  // namespace ttk
