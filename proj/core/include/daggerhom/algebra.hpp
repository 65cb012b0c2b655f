#pragma once

#include <map>
#include <optional>
#include <utility>

#include "daggerhom/group.hpp"
#include "daggerhom/scalar.hpp"

namespace daggerhom {

// Normalised 2-cocycle on Z^2: c((m1,n1),(m2,n2)) = lambda^(n1*m2).
struct Cocycle {
  Rational lambda;

  Rational value(const Element& x, const Element& y) const;
  // Identity c(x,y)c(x+y,z) = c(y,z)c(x,y+z) plus normalisation, checked on
  // ball(radius) of Z^2.
  bool satisfies_identity(const Group& z2, int radius) const;

  friend bool operator==(const Cocycle&, const Cocycle&) = default;
};

// Finitely supported Scalar-valued function on a group, convolved either
// plainly or under the Z^2 torus twist.  Canonical form: no zero coefficients.
class AlgebraElement {
 public:
  AlgebraElement(Group group, std::optional<Cocycle> twist = std::nullopt)
      : group_(std::move(group)), twist_(twist) {}

  const Group& group() const { return group_; }
  const std::optional<Cocycle>& twist() const { return twist_; }
  const std::map<Element, Rational>& terms() const { return terms_; }

  void add_term(const Element& g, const Rational& coeff);
  Rational coeff(const Element& g) const;
  bool is_zero() const { return terms_.empty(); }

  static AlgebraElement delta(const Group& g, const Element& x,
                              std::optional<Cocycle> twist = std::nullopt,
                              const Rational& coeff = Rational(1));
  static AlgebraElement unit(const Group& g, std::optional<Cocycle> twist = std::nullopt);

  AlgebraElement operator+(const AlgebraElement& o) const;
  AlgebraElement operator-(const AlgebraElement& o) const;
  AlgebraElement scale(const Rational& c) const;

  friend bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
    return a.group_ == b.group_ && a.twist_ == b.twist_ && a.terms_ == b.terms_;
  }

 private:
  Group group_;
  std::optional<Cocycle> twist_;
  std::map<Element, Rational> terms_;
};

// (f*h)(k) = sum_{g g' = k} f(g) h(g') c(g,g'); c == 1 when untwisted.
AlgebraElement convolve(const AlgebraElement& f, const AlgebraElement& h);

// Largest c with nu(x_g) + 1 >= c*l(g) over the support: the minimum of
// (nu+1)/l over supp \ {e}; infinite when the support lies in {e}.
GaugeValue dagger_gauge(const AlgebraElement& f, const Integer& p);

// Membership in the linear-growth submodule M_n: nu(x_g) + 1 >= l(g)/n.
bool in_linear_growth(const AlgebraElement& f, long n, const Integer& p);

// Finitely supported function on G x G (untwisted).
class PairFunction {
 public:
  explicit PairFunction(Group group) : group_(std::move(group)) {}

  const Group& group() const { return group_; }
  const std::map<std::pair<Element, Element>, Rational>& terms() const { return terms_; }
  void add_term(const Element& g, const Element& h, const Rational& coeff);

  friend bool operator==(const PairFunction& a, const PairFunction& b) {
    return a.group_ == b.group_ && a.terms_ == b.terms_;
  }

 private:
  Group group_;
  std::map<std::pair<Element, Element>, Rational> terms_;
};

// U(phi)(g,h) = phi(gh, g); U^{-1}(phi)(g,h) = phi(h, h^{-1}g).
PairFunction symmetry_u(const PairFunction& phi, bool inverse);

// Element of Z acting on Laurent polynomials: sum a_{n,m} t^m delta_n with
// alpha_n(t^m) = lambda^(n m) t^m.  Keys are (n, m).
class CrossedProductElement {
 public:
  explicit CrossedProductElement(Rational lambda) : lambda_(std::move(lambda)) {}

  const Rational& lambda() const { return lambda_; }
  const std::map<std::pair<long, long>, Rational>& terms() const { return terms_; }
  void add_term(long n, long m, const Rational& coeff);

  static CrossedProductElement monomial(const Rational& lambda, long n, long m,
                                        const Rational& coeff = Rational(1));

  CrossedProductElement operator+(const CrossedProductElement& o) const;

  friend bool operator==(const CrossedProductElement& a, const CrossedProductElement& b) {
    return a.lambda_ == b.lambda_ && a.terms_ == b.terms_;
  }

 private:
  Rational lambda_;
  std::map<std::pair<long, long>, Rational> terms_;
};

// (t^m delta_n)(t^m' delta_n') = lambda^(n m') t^(m+m') delta_(n+n').
CrossedProductElement crossed_multiply(const CrossedProductElement& x,
                                       const CrossedProductElement& y);

// Algebra isomorphism onto the twisted Z^2 algebra: t^m delta_n -> U1^m U2^n.
AlgebraElement crossed_to_torus(const CrossedProductElement& x);

}  // namespace daggerhom
