#pragma once

#include <functional>
#include <map>
#include <vector>

#include "daggerhom/group.hpp"
#include "daggerhom/scalar.hpp"

namespace daggerhom {

using Tuple = std::vector<Element>;

struct StageCapExceeded : std::runtime_error {
  explicit StageCapExceeded(int cap)
      : std::runtime_error("combing failed to stabilize on the chain support within " +
                           std::to_string(cap) + " stages") {}
};

// Degree-n sparse chain: finitely supported map from (n+1)-tuples to scalars.
// Reduced chains carry no tuple with x_i == x_{i+1}.
class BarChain {
 public:
  BarChain(Group group, int degree, bool reduced)
      : group_(std::move(group)), degree_(degree), reduced_(reduced) {
    if (degree < 0) throw std::invalid_argument("bar chain: degree must be >= 0");
  }

  const Group& group() const { return group_; }
  int degree() const { return degree_; }
  bool reduced() const { return reduced_; }
  const std::map<Tuple, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Tuple& t, const Rational& coeff);
  Rational coeff(const Tuple& t) const;

  static BarChain basis(const Group& g, const Tuple& t, bool reduced,
                        const Rational& coeff = Rational(1));

  BarChain operator+(const BarChain& o) const;
  BarChain operator-(const BarChain& o) const;
  BarChain scale(const Rational& c) const;

  friend bool operator==(const BarChain& a, const BarChain& b) {
    return a.group_ == b.group_ && a.degree_ == b.degree_ && a.reduced_ == b.reduced_ &&
           a.terms_ == b.terms_;
  }

  static bool is_degenerate(const Tuple& t);

 private:
  Group group_;
  int degree_;
  bool reduced_;
  std::map<Tuple, Rational> terms_;
};

// Alternating face sum; on reduced chains, faces that produce degenerate
// tuples are dropped.
BarChain bar_differential(const BarChain& ch);

// Sum of coefficients of a degree-0 chain.
Rational augmentation(const BarChain& ch);

using ElementMap = std::function<Element(const Element&)>;

// Chain map induced by a set map (the f_* / f^* of the bar complex).
BarChain pushforward(const ElementMap& f, const BarChain& ch);

// Diagonal translation g . (x_0,...,x_n) = (g x_0, ..., g x_n).
BarChain translate(const Element& g, const BarChain& ch);

// Prism operator H(f,g): degree n -> n+1,
//   (x_0..x_n) -> sum_j (-1)^j (f(x_0)..f(x_j), g(x_j)..g(x_n)).
// In reduced mode summands with any adjacent equal entries are dropped.
// `sign` is a global orientation hook pinned to +1 by the test suite.
BarChain prism_homotopy(const ElementMap& f, const ElementMap& g, const BarChain& ch,
                        int sign = +1);

// H(ch) = sum_{j>=0} H(f_j, f_{j+1})(ch); finite by stabilization.
// Requires a reduced chain; throws StageCapExceeded when the combing fails
// to stabilize on the support within 4*R+4 stages (R = max entry length).
BarChain combing_homotopy(const Combing& c, const BarChain& ch, int sign = +1);

// Free-module coordinates (x_0,...,x_n) = x_0 (x) (e, x_0^{-1}x_1, ..., x_0^{-1}x_n).
std::map<Element, std::map<Tuple, Rational>> free_coordinates(const BarChain& ch);
BarChain reassemble_free_coordinates(const Group& g, int degree, bool reduced,
                                     const std::map<Element, std::map<Tuple, Rational>>& co);

// Largest c with nu(coeff) + 1 >= c * (sum_i l(x_i) + 1) over the support;
// infinite exactly for the zero chain.
GaugeValue chain_gauge(const BarChain& ch, const Integer& p);

struct GrowthCertificate {
  Rational d;             // chain-level constant: (degree + 2) * d_pointwise
  Rational d_pointwise;   // measured sup of (l(f_j g) + 1)/(l(g) + 1)
  Rational gauge_out;     // gauge_in / d
  bool declared_ok = true;   // measured constants within declared ones
  bool coefficients_ok = true;
  bool verified = false;  // declared_ok && coefficients_ok
};

// Certifies that the combing homotopy degrades the chain gauge by at most D.
// The profile may be precomputed (it must cover the support radius); when
// absent it is computed over the ball of radius max entry length.
GrowthCertificate growth_certificate(const Combing& c, const BarChain& ch,
                                     const Rational& gauge_in, const Integer& p,
                                     const CombingProfile* profile = nullptr);

}  // namespace daggerhom
