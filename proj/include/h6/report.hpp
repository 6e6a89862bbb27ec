#ifndef H6_REPORT_HPP
#define H6_REPORT_HPP

#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"

namespace h6 {

struct Clause {
  std::string id;
  std::string claim;
  std::string expected;
  std::string computed;
  bool pass = false;
};

/// Outcome of one verification suite; passes iff every clause passes.
struct Report {
  std::string suite;
  std::vector<Clause> clauses;

  bool pass() const;
  const Clause* find(const std::string& id) const;

  /// Records computed == expected.
  void check(std::string id, std::string claim, const std::string& expected, const std::string& computed);
  /// Records a boolean fact.
  void check(std::string id, std::string claim, bool holds);

  nlohmann::json to_json() const;
  void print_text(std::ostream& os) const;
};

/// {"pass": bool, "suites": [...]}
nlohmann::json reports_to_json(const std::vector<Report>& reports);

}  // namespace h6

#endif  // H6_REPORT_HPP
