#include "daggerhom/algebra.hpp"

#include <stdexcept>

namespace daggerhom {

Rational Cocycle::value(const Element& x, const Element& y) const {
  if (x.v.size() != 2 || y.v.size() != 2)
    throw std::invalid_argument("cocycle: defined on Z^2 only");
  long e = static_cast<long>(x.v[1]) * static_cast<long>(y.v[0]);
  return pow_rational(lambda, e);
}

bool Cocycle::satisfies_identity(const Group& z2, int radius) const {
  const auto ball = z2.ball(radius);
  const Element zero = z2.identity();
  for (const Element& x : ball) {
    if (value(x, zero) != 1 || value(zero, x) != 1) return false;
    for (const Element& y : ball) {
      for (const Element& z : ball) {
        Rational lhs = value(x, y) * value(z2.multiply(x, y), z);
        Rational rhs = value(y, z) * value(x, z2.multiply(y, z));
        if (lhs != rhs) return false;
      }
    }
  }
  return true;
}

void AlgebraElement::add_term(const Element& g, const Rational& coeff) {
  if (!group_.is_valid(g))
    throw std::invalid_argument("algebra element: support element not in group");
  if (coeff == 0) return;
  auto it = terms_.find(g);
  if (it == terms_.end()) {
    terms_.emplace(g, coeff);
  } else {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

Rational AlgebraElement::coeff(const Element& g) const {
  auto it = terms_.find(g);
  return it == terms_.end() ? Rational(0) : it->second;
}

AlgebraElement AlgebraElement::delta(const Group& g, const Element& x,
                                     std::optional<Cocycle> twist, const Rational& coeff) {
  AlgebraElement e(g, twist);
  e.add_term(x, coeff);
  return e;
}

AlgebraElement AlgebraElement::unit(const Group& g, std::optional<Cocycle> twist) {
  return delta(g, g.identity(), twist);
}

AlgebraElement AlgebraElement::operator+(const AlgebraElement& o) const {
  if (!(group_ == o.group_) || twist_ != o.twist_)
    throw std::invalid_argument("algebra element: group/twist mismatch in sum");
  AlgebraElement r = *this;
  for (const auto& [g, c] : o.terms_) r.add_term(g, c);
  return r;
}

AlgebraElement AlgebraElement::operator-(const AlgebraElement& o) const {
  return *this + o.scale(Rational(-1));
}

AlgebraElement AlgebraElement::scale(const Rational& c) const {
  AlgebraElement r(group_, twist_);
  if (c == 0) return r;
  for (const auto& [g, v] : terms_) r.terms_[g] = v * c;
  return r;
}

AlgebraElement convolve(const AlgebraElement& f, const AlgebraElement& h) {
  if (!(f.group() == h.group()))
    throw std::invalid_argument("convolve: operands over different groups");
  if (f.twist() != h.twist()) throw std::invalid_argument("convolve: twist mismatch");
  const Group& G = f.group();
  AlgebraElement out(G, f.twist());
  for (const auto& [g, a] : f.terms()) {
    for (const auto& [k, b] : h.terms()) {
      Rational c = a * b;
      if (f.twist()) c *= f.twist()->value(g, k);
      out.add_term(G.multiply(g, k), c);
    }
  }
  return out;
}

GaugeValue dagger_gauge(const AlgebraElement& f, const Integer& p) {
  GaugeValue best{true, Rational(0)};
  const Element e = f.group().identity();
  for (const auto& [g, c] : f.terms()) {
    if (g == e) continue;
    long l = f.group().word_length(g);
    auto v = valuation(c, p);
    // coefficients are nonzero in canonical form, so v is finite
    Rational ratio = Rational(*v + 1) / Rational(l);
    if (best.infinite || ratio < best.value) best = {false, ratio};
  }
  return best;
}

bool in_linear_growth(const AlgebraElement& f, long n, const Integer& p) {
  if (n < 1) throw std::invalid_argument("in_linear_growth: n must be positive");
  for (const auto& [g, c] : f.terms()) {
    auto v = valuation(c, p);
    Rational lhs = Rational(*v + 1);
    Rational rhs = Rational(f.group().word_length(g), n);
    if (lhs < rhs) return false;
  }
  return true;
}

void PairFunction::add_term(const Element& g, const Element& h, const Rational& coeff) {
  if (!group_.is_valid(g) || !group_.is_valid(h))
    throw std::invalid_argument("pair function: support element not in group");
  if (coeff == 0) return;
  auto key = std::make_pair(g, h);
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(key, coeff);
  } else {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

PairFunction symmetry_u(const PairFunction& phi, bool inverse) {
  const Group& G = phi.group();
  PairFunction out(G);
  // U moves the basis point (a,b) to (b, b^{-1}a); U^{-1} moves it to (ab, a).
  for (const auto& [gh, c] : phi.terms()) {
    const auto& [a, b] = gh;
    if (!inverse)
      out.add_term(b, G.multiply(G.inverse(b), a), c);
    else
      out.add_term(G.multiply(a, b), a, c);
  }
  return out;
}

void CrossedProductElement::add_term(long n, long m, const Rational& coeff) {
  if (coeff == 0) return;
  auto key = std::make_pair(n, m);
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(key, coeff);
  } else {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

CrossedProductElement CrossedProductElement::monomial(const Rational& lambda, long n,
                                                      long m, const Rational& coeff) {
  CrossedProductElement e(lambda);
  e.add_term(n, m, coeff);
  return e;
}

CrossedProductElement CrossedProductElement::operator+(const CrossedProductElement& o) const {
  if (lambda_ != o.lambda_)
    throw std::invalid_argument("crossed product: lambda mismatch in sum");
  CrossedProductElement r = *this;
  for (const auto& [nm, c] : o.terms_) r.add_term(nm.first, nm.second, c);
  return r;
}

CrossedProductElement crossed_multiply(const CrossedProductElement& x,
                                       const CrossedProductElement& y) {
  if (x.lambda() != y.lambda())
    throw std::invalid_argument("crossed_multiply: lambda mismatch");
  CrossedProductElement out(x.lambda());
  for (const auto& [nm, a] : x.terms()) {
    for (const auto& [nm2, b] : y.terms()) {
      // (t^m delta_n)(t^m' delta_n') = lambda^(n m') t^(m+m') delta_(n+n')
      long n = nm.first, m = nm.second, n2 = nm2.first, m2 = nm2.second;
      Rational c = a * b * pow_rational(x.lambda(), n * m2);
      out.add_term(n + n2, m + m2, c);
    }
  }
  return out;
}

AlgebraElement crossed_to_torus(const CrossedProductElement& x) {
  Group z2 = Group::free_abelian(2);
  AlgebraElement out(z2, Cocycle{x.lambda()});
  for (const auto& [nm, c] : x.terms()) {
    // t^m delta_n -> U1^m U2^n, i.e. the point (m, n) of Z^2
    out.add_term(Element{{static_cast<int32_t>(nm.second), static_cast<int32_t>(nm.first)}}, c);
  }
  return out;
}

}  // namespace daggerhom
