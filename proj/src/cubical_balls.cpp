#include "ttk/balls.hpp"

#include "ttk/errors.hpp"

#include <random>
#include <string>
#include <utility>
#include <vector>

namespace ttk {
namespace balls {

namespace {

std::string hom_name(std::string const& a, std::string const& b) {
  return "hom " + a + "->" + b;
}

// morphism index of entry i with its sign applied
std::size_t effective(gpd::Groupoid const& G, BallChain const& ch,
                      std::size_t i) {
  std::size_t m = G.mor_index(ch.entries[i].first.id);
  return ch.entries[i].second == 1 ? m : G.inverse(m);
}

}  // namespace

CkDescriptor normalize_ball(std::size_t k) {
  if (k < 2) throw_error(Err::InvalidK, "need at least 2 cells");
  CkDescriptor d;
  d.k = k;
  for (std::size_t i = 0; i < k; ++i)
    d.cell_edges.push_back({(i + k - 1) % k, i});
  return d;
}

Report validate_chain(tta::TwoTrackAlgebra const& A, BallChain const& ch) {
  Report rpt;
  if (ch.entries.size() < 2)
    rpt.add("ball.k", {hom_name(ch.from, ch.to)},
            std::to_string(ch.entries.size()) + " cells");
  ttg::TwoTrackGroupoid const* H = nullptr;
  try {
    H = &A.hom_at(ch.from, ch.to);
  } catch (Error const&) {
    rpt.add("ball.cell", {hom_name(ch.from, ch.to)}, "unknown hom");
    return rpt;
  }
  gpd::Groupoid const& G = H->g2.P.G;
  bool resolved = true;
  for (std::size_t i = 0; i < ch.entries.size(); ++i) {
    auto const& [cell, sign] = ch.entries[i];
    std::string at = "entry " + std::to_string(i);
    if (cell.degree != 2 || cell.src != ch.from || cell.tgt != ch.to ||
        (sign != 1 && sign != -1)) {
      rpt.add("ball.cell", {hom_name(ch.from, ch.to), at}, "not a signed cell");
      resolved = false;
      continue;
    }
    if (!G.has_morphism(cell.id)) {
      rpt.add("ball.cell", {hom_name(ch.from, ch.to), at},
              cell.id + " not in the track groupoid");
      resolved = false;
    }
  }
  if (!resolved || ch.entries.size() < 2) return rpt;
  for (std::size_t i = 0; i < ch.entries.size(); ++i) {
    std::size_t j = (i + 1) % ch.entries.size();
    if (G.tgt(effective(G, ch, i)) != G.src(effective(G, ch, j)))
      rpt.add("ball.composable",
              {hom_name(ch.from, ch.to), "edge " + std::to_string(i)},
              ch.entries[i].first.id + " into " + ch.entries[j].first.id);
  }
  return rpt;
}

tta::Element obstruction(tta::TwoTrackAlgebra const& A, BallChain const& ch) {
  Report rpt = validate_chain(A, ch);
  if (!rpt.ok()) throw_error(Err::InvalidChain, rpt.to_string());
  ttg::TwoTrackGroupoid const& H = A.hom_at(ch.from, ch.to);
  gpd::Groupoid const& G = H.g2.P.G;
  std::size_t cur = effective(G, ch, 0);
  std::size_t a0 = G.src(cur);
  for (std::size_t i = 1; i < ch.entries.size(); ++i)
    cur = G.compose(effective(G, ch, i), cur);
  return tta::Element{ch.from, ch.to, 2, G.mor_id(H.g2.apply_psi(a0, cur))};
}

AlgCubView alg_cub(tta::TwoTrackAlgebra const& A) {
  AlgCubView V;
  V.pi0 = tta::homotopy_category(A);
  for (auto const& [key, H] : A.hom)
    V.D.emplace(key, ttg::aut_group(H.g2.P.G, H.g2.P.basepoint));
  return V;
}

namespace {

void require_pi2(tta::TwoTrackAlgebra const& A, tta::Element const& m) {
  if (m.degree != 2 || !(tta::boundary0(A, m) == A.zero(m.src, m.tgt, 1)) ||
      !(tta::boundary1(A, m) == A.zero(m.src, m.tgt, 1)))
    throw_error(Err::PreconditionFailed,
                m.id + " is not an automorphism of the trivial null path");
}

}  // namespace

tta::Element d_act_right(tta::TwoTrackAlgebra const& A, tta::Element const& m,
                         tta::Element const& f) {
  require_pi2(A, m);
  if (f.degree != 0)
    throw_error(Err::PreconditionFailed, f.id + " is not a degree 0 cell");
  return tensor(A, m, f);
}

tta::Element d_act_left(tta::TwoTrackAlgebra const& A, tta::Element const& g,
                        tta::Element const& m) {
  require_pi2(A, m);
  if (g.degree != 0)
    throw_error(Err::PreconditionFailed, g.id + " is not a degree 0 cell");
  return tensor(A, g, m);
}

BallChain random_chain(tta::TwoTrackAlgebra const& A, std::string const& from,
                       std::string const& to, std::size_t k,
                       std::uint64_t seed) {
  if (k < 2) throw_error(Err::InvalidK, "need at least 2 cells");
  ttg::TwoTrackGroupoid const& H = A.hom_at(from, to);
  gpd::Groupoid const& G = H.g2.P.G;
  std::mt19937_64 rng(seed);

  // options out of each null path, inverted cells included
  std::vector<std::vector<std::pair<std::size_t, int>>> out(G.n_objects());
  for (std::size_t m = 0; m < G.n_morphisms(); ++m) {
    out[G.src(m)].push_back({m, 1});
    out[G.tgt(m)].push_back({m, -1});
  }

  BallChain ch;
  ch.from = from;
  ch.to = to;
  std::size_t a0 = rng() % G.n_objects();
  std::size_t cur = a0;
  auto push = [&](std::pair<std::size_t, int> step) {
    ch.entries.push_back({tta::Element{from, to, 2, G.mor_id(step.first)},
                          step.second});
    cur = step.second == 1 ? G.tgt(step.first) : G.src(step.first);
  };
  for (std::size_t i = 0; i + 1 < k; ++i)
    push(out[cur][rng() % out[cur].size()]);
  std::vector<std::pair<std::size_t, int>> closing;
  for (auto const& [m, sign] : out[cur])
    if ((sign == 1 ? G.tgt(m) : G.src(m)) == a0) closing.push_back({m, sign});
  if (closing.empty())
    throw_error(Err::InvalidChain, "walk cannot close up");
  push(closing[rng() % closing.size()]);
  return ch;
}

BallChain rotated(BallChain const& ch, std::size_t by) {
  BallChain out = ch;
  if (ch.entries.empty()) return out;
  by %= ch.entries.size();
  out.entries.assign(ch.entries.begin() + by, ch.entries.end());
  out.entries.insert(out.entries.end(), ch.entries.begin(),
                     ch.entries.begin() + by);
  return out;
}

}  // namespace balls
}  // namespace ttk
