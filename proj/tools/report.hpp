#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "daggerhom/verify.hpp"
#include "json.hpp"

namespace daggerhom::cli {

// Machine-readable command report.  JSON rendering is canonical: keys are
// sorted, there are no timestamps, and reruns with identical inputs and seed
// produce byte-identical output.
struct Report {
  std::string command;
  std::map<std::string, std::string> params;
  std::vector<CheckResult> checks;
  nlohmann::json results = nlohmann::json::object();
  std::uint64_t seed = 0;
  std::string version = "0.1.0";

  void add_check(CheckResult c) { checks.push_back(std::move(c)); }
  bool any_fail() const;
};

std::string render_json(const Report& r);
std::string render_pretty(const Report& r);

// 0: all checks pass, 1: at least one failure.  (Usage errors exit 2.)
int exit_code(const Report& r);

}  // namespace daggerhom::cli
