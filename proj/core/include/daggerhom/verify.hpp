#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "daggerhom/barcomplex.hpp"
#include "daggerhom/group.hpp"
#include "daggerhom/rng.hpp"

namespace daggerhom {

struct CheckResult {
  std::string name;
  std::string status;  // "pass" | "fail" | "skip"
  std::string details;
};

inline CheckResult check_pass(std::string name, std::string details = "") {
  return {std::move(name), "pass", std::move(details)};
}
inline CheckResult check_fail(std::string name, std::string details = "") {
  return {std::move(name), "fail", std::move(details)};
}

struct BarVerifyOptions {
  std::string group_spec = "free:2";
  int max_degree = 3;
  int ball_radius = 3;
  int samples = 50;
  std::uint64_t seed = 20240501;
  Integer prime = 5;
  std::size_t ball_cap = kDefaultBallCap;
  bool corrupt_prism_sign = false;  // negative-control hook
};

// Differential, prism, contraction, summand-count and growth-certificate
// suites over one group; deterministic given the seed.
std::vector<CheckResult> verify_bar_suite(const BarVerifyOptions& opt);

// Shared random generators (deterministic; used by the suites and tests).
BarChain random_chain(Rng& rng, const Group& g, const std::vector<Element>& ball,
                      int degree, bool reduced, int terms);
Tuple random_reduced_tuple(Rng& rng, const std::vector<Element>& ball, int degree);
Rational random_small_rational(Rng& rng);
// p^v * (unit) with v in [vmin, vmax]; unit numerator/denominator coprime to p.
Rational random_scaled_unit(Rng& rng, const Integer& p, long vmin, long vmax);

}  // namespace daggerhom
