#ifndef TTK_CHART_HPP_
#define TTK_CHART_HPP_

#include "ttk/resolution.hpp"

#include <string>

namespace ttk {
namespace chart {

// TSV with header "s\tt-s\tdim"; nonzero cells only, ascending (s, t).
std::string to_tsv(resolution::ExtChart const& chart);

// Dot chart, one circle per dimension unit, stem on the x axis.
std::string to_svg(resolution::ExtChart const& chart);

// format is "tsv" or "svg"
std::string emit_chart(resolution::ExtChart const& chart,
                       std::string const& format);

}  // namespace chart
}  // namespace ttk
#endif  // TTK_CHART_HPP_
