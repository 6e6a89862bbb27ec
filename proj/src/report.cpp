#include "h6/report.hpp"

#include <algorithm>

namespace h6 {

bool Report::pass() const {
  return std::all_of(clauses.begin(), clauses.end(), [](const Clause& c) { return c.pass; });
}

const Clause* Report::find(const std::string& id) const {
  for (const Clause& c : clauses)
    if (c.id == id) return &c;
  return nullptr;
}

void Report::check(std::string id, std::string claim, const std::string& expected, const std::string& computed) {
  clauses.push_back({std::move(id), std::move(claim), expected, computed, expected == computed});
}

void Report::check(std::string id, std::string claim, bool holds) {
  check(std::move(id), std::move(claim), "true", holds ? "true" : "false");
}

nlohmann::json Report::to_json() const {
  nlohmann::json out;
  out["suite"] = suite;
  out["pass"] = pass();
  out["clauses"] = nlohmann::json::array();
  for (const Clause& c : clauses) {
    out["clauses"].push_back(
        {{"id", c.id}, {"claim", c.claim}, {"expected", c.expected}, {"computed", c.computed}, {"pass", c.pass}});
  }
  return out;
}

void Report::print_text(std::ostream& os) const {
  os << "== " << suite << (pass() ? " [PASS]" : " [FAIL]") << '\n';
  for (const Clause& c : clauses) {
    os << (c.pass ? "  ok   " : "  FAIL ") << c.id << ": " << c.claim;
    if (c.pass)
      os << " (" << c.computed << ")\n";
    else
      os << " expected " << c.expected << ", computed " << c.computed << '\n';
  }
}

nlohmann::json reports_to_json(const std::vector<Report>& reports) {
  nlohmann::json out;
  bool all = true;
  out["suites"] = nlohmann::json::array();
  for (const Report& r : reports) {
    all = all && r.pass();
    out["suites"].push_back(r.to_json());
  }
  out["pass"] = all;
  return out;
}

}  // namespace h6
