#include "ttk/resolution.hpp"

#include "ttk/errors.hpp"
#include "ttk/gf2_dense.hpp"

#include <algorithm>
#include <sstream>

namespace ttk {
namespace resolution {

using gf2::BitMatrix;
using steenrod::DegreeBasis;
using steenrod::Monomial;
using steenrod::TruncatedModule;

namespace {

// rows with pairwise distinct leading columns; the order of map iteration
// (ascending pivot) makes reduction deterministic
struct EchelonSet {
  std::size_t width;
  std::map<std::size_t, std::vector<bool>> rows;

  explicit EchelonSet(std::size_t w) : width(w) {}

  // true if v was independent of the stored rows
  bool add(std::vector<bool> v) {
    for (auto const& [p, r] : rows) {
      if (v[p]) {
        for (std::size_t c = p; c < width; ++c) {
          if (r[c]) {
            v[c] = !v[c];
          }
        }
      }
    }
    for (std::size_t c = 0; c < width; ++c) {
      if (v[c]) {
        rows.emplace(c, std::move(v));
        return true;
      }
    }
    return false;
  }
};

struct Builder {
  unsigned s_max, t_max;
  TruncatedModule module;
  std::vector<steenrod::FreeModule> F;
  std::vector<std::vector<std::vector<bool>>> gen_images;
  std::vector<std::vector<BitMatrix>> d;
  std::vector<std::vector<DegreeBasis>> bases;
  // row basis of the image of d_s in each degree, for spanning the
  // decomposable part of later degrees
  std::vector<std::vector<std::vector<std::vector<bool>>>> im;

  Builder(steenrod::ModulePresentation const& pres, unsigned s_max_,
          unsigned t_max_)
      : s_max(s_max_), t_max(t_max_), module(pres, t_max_) {
    F.resize(s_max + 1);
    gen_images.resize(s_max + 1);
    d.assign(s_max + 1, std::vector<BitMatrix>(t_max + 1));
    bases.assign(s_max + 1, std::vector<DegreeBasis>(t_max + 1));
    im.assign(s_max + 1,
              std::vector<std::vector<std::vector<bool>>>(t_max + 1));
  }

  std::size_t width(unsigned s, unsigned t) const {
    return s == 0 ? module.dim(t) : bases[s - 1][t].elems.size();
  }

  // applies Sq^j to a vector in the target coordinates of stage s at
  // degree t_src (module coordinates for s = 0)
  std::vector<bool> sq_apply(unsigned s, unsigned j, unsigned t_src,
                             std::vector<bool> const& v) const {
    if (s == 0) {
      BitMatrix A = module.sq_action(j, t_src);
      std::vector<bool> out(module.dim(t_src + j), false);
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i]) {
          for (std::size_t c = 0; c < out.size(); ++c) {
            if (A.get(i, c)) {
              out[c] = !out[c];
            }
          }
        }
      }
      return out;
    }
    DegreeBasis const& src = bases[s - 1][t_src];
    DegreeBasis const& dst = bases[s - 1][t_src + j];
    std::vector<bool> out(dst.elems.size(), false);
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (!v[i]) {
        continue;
      }
      auto const& [g, m] = src.elems[i];
      Monomial w{j};
      w.insert(w.end(), m.begin(), m.end());
      for (auto const& mono : steenrod::adem_reduce(w).support) {
        std::size_t idx = dst.index.at({g, mono});
        out[idx] = !out[idx];
      }
    }
    return out;
  }

  void run_cell(unsigned s, unsigned t) {
    DegreeBasis b = steenrod::free_basis(F[s], t);
    std::size_t w_out = width(s, t);

    // rows for the monomial multiples of existing generators; every
    // existing generator has degree < t so each monomial splits
    std::vector<std::vector<bool>> rows;
    rows.reserve(b.elems.size());
    for (auto const& [g, m] : b.elems) {
      unsigned i1 = m.front();
      Monomial rest(m.begin() + 1, m.end());
      unsigned t_low = t - i1;
      std::size_t r = bases[s][t_low].index.at({g, rest});
      rows.push_back(sq_apply(s, i1, t_low, d[s][t_low].row(r)));
    }

    // the part of the target already hit by decomposable elements
    EchelonSet span(w_out);
    for (unsigned j = 1; j <= t; ++j) {
      for (auto const& v : im[s][t - j]) {
        span.add(sq_apply(s, j, t - j, v));
      }
    }

    // candidates for new generator images: kernel of the previous
    // differential (the whole target for s = 0)
    std::vector<std::vector<bool>> cands;
    if (s == 0) {
      for (std::size_t i = 0; i < w_out; ++i) {
        std::vector<bool> e(w_out, false);
        e[i] = true;
        cands.push_back(std::move(e));
      }
    } else {
      BitMatrix K = gf2::kernel(gf2::transpose(d[s - 1][t]));
      for (std::size_t r = 0; r < K.rows(); ++r) {
        cands.push_back(K.row(r));
      }
    }

    unsigned fresh = 0;
    for (auto const& k : cands) {
      if (!span.add(k)) {
        continue;
      }
      std::ostringstream id;
      id << "g" << s << "_" << t << "_" << fresh++;
      F[s].gens.push_back({id.str(), t});
      gen_images[s].push_back(k);
      b.elems.emplace_back(F[s].gens.size() - 1, Monomial{});
      rows.push_back(k);
    }

    b.index.clear();
    for (std::size_t i = 0; i < b.elems.size(); ++i) {
      b.index[b.elems[i]] = i;
    }
    BitMatrix D(rows.size(), w_out);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      D.set_row(r, rows[r]);
    }
    d[s][t] = std::move(D);
    bases[s][t] = std::move(b);
    auto& image_rows = im[s][t];
    for (auto const& [p, v] : span.rows) {
      (void) p;
      image_rows.push_back(v);
    }
  }
};

}  // namespace

MinimalResolution minimal_resolution(steenrod::ModulePresentation const& pres,
                                     unsigned s_max, unsigned t_max) {
  if (s_max > 64 || t_max > 64) {
    throw_error(Err::WindowExceeded, "resolution window beyond hard cap");
  }
  Builder bld(pres, s_max, t_max);
  for (unsigned a = 0; a <= s_max + t_max; ++a) {
    std::vector<std::pair<unsigned, unsigned>> cells;
    for (unsigned s = 0; s <= std::min(s_max, a); ++s) {
      unsigned t = a - s;
      if (t <= t_max) {
        cells.emplace_back(s, t);
      }
    }
    // cells on one anti-diagonal touch disjoint state
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (long long i = 0; i < (long long) cells.size(); ++i) {
      bld.run_cell(cells[i].first, cells[i].second);
    }
  }
  return MinimalResolution{s_max,
                           t_max,
                           std::move(bld.module),
                           std::move(bld.F),
                           std::move(bld.gen_images),
                           std::move(bld.d),
                           std::move(bld.bases)};
}

Report validate(MinimalResolution const& res) {
  Report rep;
  for (unsigned t = 0; t <= res.t_max; ++t) {
    for (unsigned s = 1; s <= res.s_max; ++s) {
      auto prod = gf2::mul(res.d[s][t], res.d[s - 1][t]);
      if (gf2::rank(prod) != 0) {
        rep.add("resolution.d_squared",
                {"s=" + std::to_string(s), "t=" + std::to_string(t)});
      }
      std::size_t nullity =
          res.d[s - 1][t].rows() - gf2::rank(res.d[s - 1][t]);
      if (gf2::rank(res.d[s][t]) != nullity) {
        rep.add("resolution.exact",
                {"s=" + std::to_string(s), "t=" + std::to_string(t)});
      }
    }
    if (gf2::rank(res.d[0][t]) != res.module.dim(t)) {
      rep.add("resolution.exact", {"s=0", "t=" + std::to_string(t)});
    }
  }
  for (unsigned s = 1; s <= res.s_max; ++s) {
    for (std::size_t g = 0; g < res.F[s].gens.size(); ++g) {
      unsigned t = res.F[s].gens[g].degree;
      auto const& img = res.gen_images[s][g];
      for (std::size_t i = 0; i < img.size(); ++i) {
        if (img[i] && res.bases[s - 1][t].elems[i].second.empty()) {
          rep.add("resolution.minimal",
                  {res.F[s].gens[g].id,
                   res.F[s - 1].gens[res.bases[s - 1][t].elems[i].first].id});
        }
      }
    }
  }
  return rep;
}

ExtChart ext_chart(MinimalResolution const& res) {
  ExtChart chart{res.s_max, res.t_max, {}};
  for (unsigned s = 0; s <= res.s_max; ++s) {
    for (auto const& g : res.F[s].gens) {
      ++chart.dims[{s, g.degree}];
    }
  }
  return chart;
}

Cocycle cocycle_rep(MinimalResolution const& res, unsigned s, unsigned t,
                    std::size_t index) {
  if (s > res.s_max || t > res.t_max) {
    throw_error(Err::WindowExceeded, "cocycle outside resolution window");
  }
  std::vector<std::size_t> at_degree;
  for (std::size_t g = 0; g < res.F[s].gens.size(); ++g) {
    if (res.F[s].gens[g].degree == t) {
      at_degree.push_back(g);
    }
  }
  if (index >= at_degree.size()) {
    throw_error(Err::IndexOutOfRange,
                "no generator with that index at (s,t)");
  }
  Cocycle x{s, t, at_degree[index],
            std::vector<bool>(res.F[s].gens.size(), false)};
  x.on_gens[x.gen] = true;
  if (s < res.s_max) {
    std::size_t col = res.bases[s][t].index.at({x.gen, Monomial{}});
    for (std::size_t h = 0; h < res.F[s + 1].gens.size(); ++h) {
      if (res.F[s + 1].gens[h].degree == t
          && res.gen_images[s + 1][h][col]) {
        throw_error(Err::NotACocycle,
                    "dual basis map does not kill the differential");
      }
    }
  }
  return x;
}

// --- independent serial reference ---------------------------------------
// Byte matrices, direct monomial expansion against stored generator
// images, chart counts from rank differences. No code shared with the
// packed builder beyond the algebra itself.

namespace {

struct RefGen {
  unsigned degree;
  std::vector<uint8_t> image;  // coords in the previous stage at `degree`
};

std::vector<std::pair<std::size_t, Monomial>> ref_basis(
    std::vector<RefGen> const& gens, unsigned t) {
  std::vector<std::pair<std::size_t, Monomial>> b;
  for (std::size_t g = 0; g < gens.size(); ++g) {
    if (gens[g].degree > t) {
      continue;
    }
    for (auto const& m : steenrod::admissible_basis(t - gens[g].degree)) {
      b.emplace_back(g, m);
    }
  }
  std::sort(b.begin(), b.end());
  return b;
}

}  // namespace

ExtChart ref_ext_chart(steenrod::ModulePresentation const& pres,
                       unsigned s_max, unsigned t_max) {
  TruncatedModule module(pres, t_max);
  ExtChart chart{s_max, t_max, {}};

  std::vector<std::vector<RefGen>> stages(s_max + 1);

  // dimension of the target of stage `level` at degree t
  auto tdim = [&](unsigned level, unsigned t) {
    return level == 0 ? module.dim(t)
                      : ref_basis(stages[level - 1], t).size();
  };
  // image of Sq^m * (generator g of stage `level`) in target coordinates
  auto expand = [&](unsigned level, std::size_t g, Monomial const& m,
                    unsigned t) {
    auto const& gen = stages[level][g];
    if (level == 0) {
      // walk the word one operation at a time through the module
      std::vector<uint8_t> cur = gen.image;
      unsigned deg = gen.degree;
      for (auto it = m.rbegin(); it != m.rend(); ++it) {
        BitMatrix A = module.sq_action(*it, deg);
        std::vector<uint8_t> nxt(module.dim(deg + *it), 0);
        for (std::size_t i = 0; i < cur.size(); ++i) {
          if (cur[i]) {
            for (std::size_t c = 0; c < nxt.size(); ++c) {
              nxt[c] ^= A.get(i, c) ? 1 : 0;
            }
          }
        }
        cur = std::move(nxt);
        deg += *it;
      }
      return cur;
    }
    auto tb = ref_basis(stages[level - 1], t);
    std::map<std::pair<std::size_t, Monomial>, std::size_t> idx;
    for (std::size_t i = 0; i < tb.size(); ++i) {
      idx[tb[i]] = i;
    }
    std::vector<uint8_t> out(tb.size(), 0);
    auto src = ref_basis(stages[level - 1], gen.degree);
    for (std::size_t i = 0; i < gen.image.size(); ++i) {
      if (!gen.image[i]) {
        continue;
      }
      Monomial w = m;
      w.insert(w.end(), src[i].second.begin(), src[i].second.end());
      for (auto const& mono : steenrod::adem_reduce(w).support) {
        out[idx.at({src[i].first, mono})] ^= 1;
      }
    }
    return out;
  };

  for (unsigned s = 0; s <= s_max; ++s) {
    for (unsigned t = 0; t <= t_max; ++t) {
      std::size_t n = tdim(s, t);
      // candidate space: kernel of the previous differential
      gf2::DenseMat K(0, 0);
      if (s == 0) {
        K = gf2::DenseMat(n, n);
        for (std::size_t i = 0; i < n; ++i) {
          K.at(i, i) = 1;
        }
      } else {
        auto sb = ref_basis(stages[s - 1], t);
        std::size_t w_lower = tdim(s - 1, t);
        gf2::DenseMat A(sb.size(), w_lower);
        for (std::size_t r = 0; r < sb.size(); ++r) {
          auto row = expand(s - 1, sb[r].first, sb[r].second, t);
          for (std::size_t c = 0; c < w_lower; ++c) {
            A.at(r, c) = row[c];
          }
        }
        // left kernel via transpose
        gf2::DenseMat At(A.cols(), A.rows());
        for (std::size_t i = 0; i < A.rows(); ++i) {
          for (std::size_t j = 0; j < A.cols(); ++j) {
            At.at(j, i) = A.at(i, j);
          }
        }
        K = dense_kernel(At);
      }

      // span of monomial multiples (positive degree) of existing stage-s
      // generators, expanded directly
      std::vector<std::vector<uint8_t>> span_rows;
      for (std::size_t g = 0; g < stages[s].size(); ++g) {
        unsigned dg = stages[s][g].degree;
        if (dg >= t) {
          continue;
        }
        for (auto const& m : steenrod::admissible_basis(t - dg)) {
          span_rows.push_back(expand(s, g, m, t));
        }
      }

      // residue list with distinct pivots, bytes
      std::vector<std::vector<uint8_t>> res_rows;
      std::vector<std::size_t> res_piv;
      auto try_add = [&](std::vector<uint8_t> v) -> bool {
        for (std::size_t k = 0; k < res_rows.size(); ++k) {
          if (v[res_piv[k]]) {
            for (std::size_t c = 0; c < n; ++c) {
              v[c] ^= res_rows[k][c];
            }
          }
        }
        for (std::size_t c = 0; c < n; ++c) {
          if (v[c]) {
            res_piv.push_back(c);
            res_rows.push_back(std::move(v));
            return true;
          }
        }
        return false;
      };
      for (auto& r : span_rows) {
        try_add(r);
      }
      for (std::size_t r = 0; r < (s == 0 ? n : K.rows()); ++r) {
        std::vector<uint8_t> cand(n);
        for (std::size_t c = 0; c < n; ++c) {
          cand[c] = K.at(r, c);
        }
        auto orig = cand;
        if (try_add(std::move(cand))) {
          stages[s].push_back({t, orig});
          ++chart.dims[{s, t}];
        }
      }
    }
  }
  return chart;
}

}  // namespace resolution
}  // namespace ttk
