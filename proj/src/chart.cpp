#include "ttk/chart.hpp"

#include "ttk/errors.hpp"

#include <sstream>

namespace ttk {
namespace chart {

std::string to_tsv(resolution::ExtChart const& chart) {
  std::ostringstream os;
  os << "s\tt-s\tdim\n";
  for (auto const& [st, dim] : chart.dims) {
    os << st.first << "\t" << (st.second - st.first) << "\t" << dim << "\n";
  }
  return os.str();
}

std::string to_svg(resolution::ExtChart const& chart) {
  int const cell = 16, margin = 24, r = 3;
  unsigned stem_max = chart.t_max;  // stems can reach t_max when s = 0
  int w = margin * 2 + cell * (int) (stem_max + 1);
  int h = margin * 2 + cell * (int) (chart.s_max + 1);
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w
     << "\" height=\"" << h << "\">\n";
  for (auto const& [st, dim] : chart.dims) {
    unsigned s = st.first, t = st.second;
    int cx = margin + cell * (int) (t - s);
    int cy = margin + cell * (int) (chart.s_max - s);
    // several classes in one bidegree sit side by side
    for (std::size_t k = 0; k < dim; ++k) {
      os << "<circle cx=\"" << cx + (int) k * (2 * r + 1) << "\" cy=\""
         << cy << "\" r=\"" << r << "\"/>\n";
    }
  }
  os << "</svg>\n";
  return os.str();
}

std::string emit_chart(resolution::ExtChart const& chart,
                       std::string const& format) {
  if (format == "tsv") {
    return to_tsv(chart);
  }
  if (format == "svg") {
    return to_svg(chart);
  }
  throw_error(Err::UnknownFormat, "chart format must be tsv or svg");
}

}  // namespace chart
}  // namespace ttk
