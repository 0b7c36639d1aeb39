#ifndef TTK_RESOLUTION_HPP_
#define TTK_RESOLUTION_HPP_

#include "ttk/gf2.hpp"
#include "ttk/report.hpp"
#include "ttk/steenrod.hpp"

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

namespace ttk {
namespace resolution {

struct ExtChart {
  unsigned s_max, t_max;
  // only nonzero cells are stored
  std::map<std::pair<unsigned, unsigned>, std::size_t> dims;

  std::size_t dim(unsigned s, unsigned t) const {
    auto it = dims.find({s, t});
    return it == dims.end() ? 0 : it->second;
  }
};

// Minimal free resolution of a presented module through (s_max, t_max).
// Conventions: elements of the degree-t part of F_s are row vectors over
// bases[s][t]; row r of d[s][t] is the image of basis vector r. d[0] is the
// augmentation onto the module, whose degree-t coordinates are the
// TruncatedModule ones.
struct MinimalResolution {
  unsigned s_max, t_max;
  steenrod::TruncatedModule module;
  std::vector<steenrod::FreeModule> F;                     // [s]
  // image of each generator under the differential, in the coordinates of
  // bases[s-1][deg g] (module coordinates for s = 0)
  std::vector<std::vector<std::vector<bool>>> gen_images;  // [s][gen]
  std::vector<std::vector<gf2::BitMatrix>> d;              // [s][t]
  std::vector<std::vector<steenrod::DegreeBasis>> bases;   // [s][t]
};

MinimalResolution minimal_resolution(steenrod::ModulePresentation const& pres,
                                     unsigned s_max, unsigned t_max);

// d*d = 0, minimality (no unit entries in differentials), exactness within
// the window, surjectivity of the augmentation.
Report validate(MinimalResolution const& res);

ExtChart ext_chart(MinimalResolution const& res);

// Dual-basis cocycle F_s -> suspension^t of the ground field: kills every
// generator except the index-th degree-t generator of F_s. The composite
// with the incoming differential is checked to vanish.
struct Cocycle {
  unsigned s, t;
  std::size_t gen;             // index into F[s].gens
  std::vector<bool> on_gens;   // indicator over F[s].gens
};

Cocycle cocycle_rep(MinimalResolution const& res, unsigned s, unsigned t,
                    std::size_t index);

// Independent serial implementation used to produce and check golden
// charts: byte matrices, direct monomial expansion, no incremental reuse.
ExtChart ref_ext_chart(steenrod::ModulePresentation const& pres,
                       unsigned s_max, unsigned t_max);

}  // namespace resolution
}  // namespace ttk
#endif  // TTK_RESOLUTION_HPP_
