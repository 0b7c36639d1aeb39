#ifndef TTK_ADAMS_HPP_
#define TTK_ADAMS_HPP_

#include <cstddef>
#include <map>
#include <string>
#include <utility>

#include "ttk/chains.hpp"
#include "ttk/report.hpp"
#include "ttk/tta.hpp"

namespace ttk {
namespace adams {

// Window data for reading differentials off a corrected resolution inside
// a two-track algebra. res carries the resolution objects A_s with their
// null tracks and fillers, targets names the column object T_t per degree
// t in [t_min, t_max]. sigma1[{X,t}] identifies loops at the zero map of
// hom(X, T_t) with degree 0 cells of hom(X, T_{t+1}); sigma2[{X,t}] does
// the same two columns up for normalized 2-tracks. Keys are the loop ids,
// values the matching cell ids.
struct AdamsSetup {
  chains::TertiaryComplex res;
  std::map<int, std::string> targets;
  int t_min = 0;
  int t_max = 0;
  std::map<std::pair<std::string, int>, std::map<std::string, std::string>>
      sigma1;
  std::map<std::pair<std::string, int>, std::map<std::string, std::string>>
      sigma2;
};

// clauses adams.window, adams.targets, adams.resolution (res report
// merged under "res"), adams.sigma_iso, adams.sigma_natural,
// adams.sigma2_iso, adams.sigma2_natural. C must be pi0_additive(A).
Report validate_setup(tta::TwoTrackAlgebra const& A,
                      chains::AddCategory const& C, AdamsSetup const& setup);

// Differential on the second page, E2^{s,t} -> E2^{s+2,t+1}. x names a
// degree 0 cell of hom(A_s, T_t) whose class kills d_s; the value is the
// class of the suspended obstruction loop, reduced modulo coboundaries.
// Returns the pivot-minimal representative cell, "0" for the zero class.
// Throws NotACocycle when x does not kill d_s, WindowExceeded when
// (s+2, t+1) leaves the window, MissingTableEntry on sigma gaps.
std::string d2_element(tta::TwoTrackAlgebra const& A,
                       chains::AddCategory const& C, AdamsSetup const& setup,
                       int s, int t, std::string const& x);

// Differential on the third page, E3^{s,t} -> E3^{s+3,t+2}, reduced
// modulo coboundaries and d2 values. Requires the d2 class of x to
// vanish (D2Nonzero otherwise). Scans null tracks gamma for x d_s and
// fillers xi in carrier order and takes the first pair; NoXiExists when
// no pair bounds the comparison square.
std::string d3_element(tta::TwoTrackAlgebra const& A,
                       chains::AddCategory const& C, AdamsSetup const& setup,
                       int s, int t, std::string const& x);

struct PageEntry {
  std::size_t dim = 0;
  bool known = false;
};

// Page dims over the window grid s in [n_min, n_max], t in [t_min,
// t_max]. page is 2, 3 or 4 (PreconditionFailed otherwise). An entry is
// known when every differential into and out of it stays inside the
// window; entries near the edge report the partial quotient computed
// from the differentials that do exist, with known = false.
std::map<std::pair<int, int>, PageEntry> e_page(tta::TwoTrackAlgebra const& A,
                                                chains::AddCategory const& C,
                                                AdamsSetup const& setup,
                                                int page);

}  // namespace adams
}  // namespace ttk

#endif
