#ifndef TTK_REPORT_HPP_
#define TTK_REPORT_HPP_

#include <string>
#include <vector>

namespace ttk {

// One violated law. |clause| is a stable dotted identifier (e.g.
// "groupoid.assoc"), |where| names the offending cells.
struct Violation {
  std::string clause;
  std::vector<std::string> where;
  std::string detail;
};

struct Report {
  std::vector<Violation> violations;

  bool ok() const noexcept {
    return violations.empty();
  }

  void add(std::string clause, std::vector<std::string> where,
           std::string detail = "") {
    violations.push_back(
        {std::move(clause), std::move(where), std::move(detail)});
  }

  void merge(Report const& other, std::string const& prefix = "") {
    for (auto const& v : other.violations) {
      Violation w = v;
      if (!prefix.empty()) {
        w.where.insert(w.where.begin(), prefix);
      }
      violations.push_back(std::move(w));
    }
  }

  bool has_clause(std::string const& clause) const {
    for (auto const& v : violations) {
      if (v.clause == clause) {
        return true;
      }
    }
    return false;
  }

  std::string to_string() const;
};

}  // namespace ttk
#endif  // TTK_REPORT_HPP_
