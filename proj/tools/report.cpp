#include "report.hpp"

#include <algorithm>
#include <sstream>

namespace daggerhom::cli {

bool Report::any_fail() const {
  return std::any_of(checks.begin(), checks.end(),
                     [](const CheckResult& c) { return c.status == "fail"; });
}

std::string render_json(const Report& r) {
  nlohmann::json j;
  j["command"] = r.command;
  j["params"] = r.params;
  nlohmann::json checks = nlohmann::json::array();
  std::vector<CheckResult> sorted = r.checks;
  std::sort(sorted.begin(), sorted.end(),
            [](const CheckResult& a, const CheckResult& b) { return a.name < b.name; });
  for (const auto& c : sorted) {
    nlohmann::json cj;
    cj["name"] = c.name;
    cj["status"] = c.status;
    cj["details"] = c.details;
    checks.push_back(cj);
  }
  j["checks"] = checks;
  j["results"] = r.results;
  j["seed"] = r.seed;
  j["version"] = r.version;
  return j.dump();
}

std::string render_pretty(const Report& r) {
  std::ostringstream out;
  out << r.command << " (seed " << r.seed << ")\n";
  for (const auto& [k, v] : r.params) out << "  " << k << " = " << v << "\n";
  if (!r.checks.empty()) {
    out << "checks:\n";
    std::vector<CheckResult> sorted = r.checks;
    std::sort(sorted.begin(), sorted.end(),
              [](const CheckResult& a, const CheckResult& b) { return a.name < b.name; });
    for (const auto& c : sorted) {
      out << "  [" << c.status << "] " << c.name;
      if (!c.details.empty()) out << "  (" << c.details << ")";
      out << "\n";
    }
  }
  if (!r.results.empty()) out << "results: " << r.results.dump(2) << "\n";
  out << (r.any_fail() ? "FAIL" : "OK") << "\n";
  return out.str();
}

int exit_code(const Report& r) { return r.any_fail() ? 1 : 0; }

}  // namespace daggerhom::cli
