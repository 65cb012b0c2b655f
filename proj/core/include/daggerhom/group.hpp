#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "daggerhom/scalar.hpp"

namespace daggerhom {

inline constexpr std::size_t kDefaultBallCap = 1'000'000;

struct BallCapExceeded : std::runtime_error {
  explicit BallCapExceeded(std::size_t cap)
      : std::runtime_error("ball enumeration exceeded configured cap of " +
                           std::to_string(cap)) {}
};

enum class GroupKind { Free, FreeAbelian, Finite };

// Group element payload; interpretation depends on the owning descriptor.
//  Free:        reduced word, letters +-1..+-rank (negative = inverse)
//  FreeAbelian: integer coordinate vector
//  Finite:      single element index
struct Element {
  std::vector<int32_t> v;

  friend bool operator==(const Element&, const Element&) = default;
  friend auto operator<=>(const Element&, const Element&) = default;
};

// Finitely generated group with a fixed symmetric generating set and the
// induced word-length metric.
class Group {
 public:
  static Group free_group(int rank);
  static Group free_abelian(int rank);
  // Multiplication table (indices); generators default to all non-identity
  // elements so that l <= 1.
  static Group finite(std::vector<std::vector<int>> table,
                      std::vector<int> generators = {});
  static Group cyclic(int n);
  static Group symmetric(int n);
  // "free:2" | "zn:2" | "sym:3" | "cyclic:4" | "finite:<path>"
  static Group parse_spec(const std::string& spec);

  GroupKind kind() const { return kind_; }
  int rank() const { return rank_; }
  std::size_t order() const;  // finite groups only
  const std::string& spec() const { return spec_; }

  Element identity() const;
  Element multiply(const Element& a, const Element& b) const;
  Element inverse(const Element& a) const;
  bool is_valid(const Element& a) const;

  long word_length(const Element& g) const;
  long distance(const Element& g, const Element& h) const;

  // Exactly { g : l(g) <= radius }, sorted in the canonical element order.
  std::vector<Element> ball(int radius, std::size_t cap = kDefaultBallCap) const;

  // Free groups: element from letters; FreeAbelian: from coordinates;
  // Finite: from index.
  Element from_letters(const std::vector<int32_t>& letters) const;

  std::string format(const Element& g) const;
  Element parse_element(const std::string& text) const;

  const std::vector<Element>& generators() const { return generators_; }

  friend bool operator==(const Group& a, const Group& b) {
    return a.kind_ == b.kind_ && a.rank_ == b.rank_ && a.table_ == b.table_ &&
           a.generators_ == b.generators_;
  }

 private:
  Group() = default;

  GroupKind kind_ = GroupKind::Free;
  int rank_ = 0;  // rank for free/free_abelian; order for finite
  std::string spec_;
  std::vector<std::vector<int>> table_;  // finite only
  std::vector<Element> generators_;
  std::vector<long> finite_lengths_;  // BFS distances, finite only
};

struct CombingConstants {
  Rational quasi_lipschitz_c;
  Rational step_bound_s;
  int growth_order = 1;
};

// A sequence of self-maps f_k interpolating from the constant map at the
// identity (stage 0) to the identity map, with uniform control constants.
class Combing {
 public:
  using Evaluator = std::function<Element(int stage, const Element&)>;

  Combing(Group group, Evaluator eval,
          std::optional<CombingConstants> declared = std::nullopt)
      : group_(std::move(group)), eval_(std::move(eval)), declared_(declared) {}

  const Group& group() const { return group_; }
  const std::optional<CombingConstants>& declared_constants() const { return declared_; }

  Element evaluate(int stage, const Element& g) const;

  // Built-in combings.  Free groups: word-prefix maps (J(g) = l(g)).
  // Free abelian groups: prefixes of the coordinate-ordered geodesic.
  // Finite groups: the two-stage combing f_0 = e, f_k = id for k >= 1.
  static Combing builtin(const Group& g);

 private:
  Group group_;
  Evaluator eval_;
  std::optional<CombingConstants> declared_;
};

struct CombingProfile {
  bool stabilized = true;
  int max_stage = 0;                   // stages examined before stabilization
  Rational c_est;                      // least C with d(f_k x, f_k y) <= C(d(x,y)+1)
  Rational s_est;                      // least S with d(f_k x, f_{k+1} x) <= S
  Rational d_est;                      // least D with l(f_k g)+1 <= D(l(g)+1)
  std::map<Element, long> j_table;     // J(g) = #{k : f_k g != f_{k+1} g}
  double fitted_growth_order = 0.0;    // least-squares slope of log J vs log(l+1)
};

// Exhaustive profile over ball(radius).  Stabilization is required within
// 4*radius + 4 stages; failure is reported via `stabilized`.
CombingProfile combing_profile(const Combing& c, int radius,
                               std::size_t cap = kDefaultBallCap);

}  // namespace daggerhom
