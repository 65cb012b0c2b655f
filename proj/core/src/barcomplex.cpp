#include "daggerhom/barcomplex.hpp"

#include <algorithm>
#include <stdexcept>

namespace daggerhom {

bool BarChain::is_degenerate(const Tuple& t) {
  for (std::size_t i = 0; i + 1 < t.size(); ++i)
    if (t[i] == t[i + 1]) return true;
  return false;
}

void BarChain::add_term(const Tuple& t, const Rational& coeff) {
  if (static_cast<int>(t.size()) != degree_ + 1)
    throw std::invalid_argument("bar chain: tuple arity does not match degree");
  for (const Element& x : t)
    if (!group_.is_valid(x))
      throw std::invalid_argument("bar chain: tuple entry not in group");
  if (reduced_ && is_degenerate(t))
    throw std::invalid_argument("bar chain: degenerate tuple in reduced chain");
  if (coeff == 0) return;
  auto it = terms_.find(t);
  if (it == terms_.end()) {
    terms_.emplace(t, coeff);
  } else {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

Rational BarChain::coeff(const Tuple& t) const {
  auto it = terms_.find(t);
  return it == terms_.end() ? Rational(0) : it->second;
}

BarChain BarChain::basis(const Group& g, const Tuple& t, bool reduced, const Rational& coeff) {
  BarChain ch(g, static_cast<int>(t.size()) - 1, reduced);
  ch.add_term(t, coeff);
  return ch;
}

BarChain BarChain::operator+(const BarChain& o) const {
  if (!(group_ == o.group_) || degree_ != o.degree_ || reduced_ != o.reduced_)
    throw std::invalid_argument("bar chain: shape mismatch in sum");
  BarChain r = *this;
  for (const auto& [t, c] : o.terms_) r.add_term(t, c);
  return r;
}

BarChain BarChain::operator-(const BarChain& o) const { return *this + o.scale(Rational(-1)); }

BarChain BarChain::scale(const Rational& c) const {
  BarChain r(group_, degree_, reduced_);
  if (c == 0) return r;
  for (const auto& [t, v] : terms_) r.terms_[t] = v * c;
  return r;
}

BarChain bar_differential(const BarChain& ch) {
  if (ch.degree() < 1) throw std::invalid_argument("bar_differential: degree must be >= 1");
  BarChain out(ch.group(), ch.degree() - 1, ch.reduced());
  for (const auto& [t, c] : ch.terms()) {
    for (std::size_t j = 0; j < t.size(); ++j) {
      Tuple face;
      face.reserve(t.size() - 1);
      for (std::size_t i = 0; i < t.size(); ++i)
        if (i != j) face.push_back(t[i]);
      if (ch.reduced() && BarChain::is_degenerate(face)) continue;
      out.add_term(face, (j % 2 == 0) ? c : -c);
    }
  }
  return out;
}

Rational augmentation(const BarChain& ch) {
  if (ch.degree() != 0) throw std::invalid_argument("augmentation: degree must be 0");
  Rational s(0);
  for (const auto& [t, c] : ch.terms()) s += c;
  return s;
}

BarChain pushforward(const ElementMap& f, const BarChain& ch) {
  BarChain out(ch.group(), ch.degree(), ch.reduced());
  for (const auto& [t, c] : ch.terms()) {
    Tuple image;
    image.reserve(t.size());
    for (const Element& x : t) image.push_back(f(x));
    if (ch.reduced() && BarChain::is_degenerate(image)) continue;
    out.add_term(image, c);
  }
  return out;
}

BarChain translate(const Element& g, const BarChain& ch) {
  const Group& G = ch.group();
  return pushforward([&](const Element& x) { return G.multiply(g, x); }, ch);
}

BarChain prism_homotopy(const ElementMap& f, const ElementMap& g, const BarChain& ch,
                        int sign) {
  BarChain out(ch.group(), ch.degree() + 1, ch.reduced());
  for (const auto& [t, c] : ch.terms()) {
    for (std::size_t j = 0; j < t.size(); ++j) {
      Tuple prism;
      prism.reserve(t.size() + 1);
      for (std::size_t i = 0; i <= j; ++i) prism.push_back(f(t[i]));
      for (std::size_t i = j; i < t.size(); ++i) prism.push_back(g(t[i]));
      if (ch.reduced() && BarChain::is_degenerate(prism)) continue;
      Rational v = (j % 2 == 0) ? c : -c;
      out.add_term(prism, sign > 0 ? v : -v);
    }
  }
  return out;
}

namespace {

long support_radius(const BarChain& ch) {
  long r = 0;
  for (const auto& [t, c] : ch.terms())
    for (const Element& x : t) r = std::max(r, ch.group().word_length(x));
  return r;
}

}  // namespace

BarChain combing_homotopy(const Combing& c, const BarChain& ch, int sign) {
  if (!ch.reduced())
    throw std::invalid_argument("combing_homotopy: requires a reduced chain");
  BarChain out(ch.group(), ch.degree() + 1, true);
  if (ch.is_zero()) return out;

  const long radius = support_radius(ch);
  const int cap = static_cast<int>(4 * radius) + 4;

  // collect support entries once
  std::vector<Element> entries;
  for (const auto& [t, _] : ch.terms())
    for (const Element& x : t) entries.push_back(x);
  std::sort(entries.begin(), entries.end());
  entries.erase(std::unique(entries.begin(), entries.end()), entries.end());

  for (int j = 0; j <= cap; ++j) {
    auto fj = [&](const Element& x) { return c.evaluate(j, x); };
    auto fj1 = [&](const Element& x) { return c.evaluate(j + 1, x); };
    bool settled = true;
    for (const Element& x : entries) {
      if (!(c.evaluate(j, x) == x) || !(c.evaluate(j + 1, x) == x)) {
        settled = false;
        break;
      }
    }
    if (settled) return out;
    out = out + prism_homotopy(fj, fj1, ch, sign);
  }
  throw StageCapExceeded(cap);
}

std::map<Element, std::map<Tuple, Rational>> free_coordinates(const BarChain& ch) {
  const Group& G = ch.group();
  std::map<Element, std::map<Tuple, Rational>> out;
  for (const auto& [t, c] : ch.terms()) {
    const Element inv = G.inverse(t[0]);
    Tuple normalized;
    normalized.reserve(t.size());
    for (const Element& x : t) normalized.push_back(G.multiply(inv, x));
    out[t[0]][normalized] += c;
  }
  return out;
}

BarChain reassemble_free_coordinates(const Group& g, int degree, bool reduced,
                                     const std::map<Element, std::map<Tuple, Rational>>& co) {
  BarChain out(g, degree, reduced);
  for (const auto& [outer, inner] : co) {
    for (const auto& [t, c] : inner) {
      Tuple full;
      full.reserve(t.size());
      for (const Element& x : t) full.push_back(g.multiply(outer, x));
      out.add_term(full, c);
    }
  }
  return out;
}

GaugeValue chain_gauge(const BarChain& ch, const Integer& p) {
  GaugeValue best{true, Rational(0)};
  for (const auto& [t, c] : ch.terms()) {
    long total = 0;
    for (const Element& x : t) total += ch.group().word_length(x);
    auto v = valuation(c, p);
    Rational ratio = Rational(*v + 1) / Rational(total + 1);
    if (best.infinite || ratio < best.value) best = {false, ratio};
  }
  return best;
}

GrowthCertificate growth_certificate(const Combing& c, const BarChain& ch,
                                     const Rational& gauge_in, const Integer& p,
                                     const CombingProfile* profile) {
  // precondition: the claimed input gauge actually holds
  {
    GaugeValue g = chain_gauge(ch, p);
    if (!g.infinite && g.value < gauge_in)
      throw std::invalid_argument("growth_certificate: chain violates the input gauge");
  }

  CombingProfile local;
  if (!profile) {
    local = combing_profile(c, static_cast<int>(std::max(support_radius(ch), 1l)));
    profile = &local;
  }

  GrowthCertificate cert;
  cert.d_pointwise = profile->d_est;
  // one homotopy summand has degree+2 entries, each stretched by at most
  // d_pointwise relative to the whole input tuple
  cert.d = Rational(ch.degree() + 2) * profile->d_est;
  if (cert.d == 0) cert.d = 1;
  cert.gauge_out = gauge_in / cert.d;

  if (const auto& decl = c.declared_constants()) {
    cert.declared_ok = profile->stabilized && profile->c_est <= decl->quasi_lipschitz_c &&
                       profile->s_est <= decl->step_bound_s;
  } else {
    cert.declared_ok = profile->stabilized;
  }

  BarChain image = combing_homotopy(c, ch);
  for (const auto& [t, coeff] : image.terms()) {
    long total = 0;
    for (const Element& x : t) total += image.group().word_length(x);
    auto v = valuation(coeff, p);
    if (Rational(*v + 1) < cert.gauge_out * Rational(total + 1)) {
      cert.coefficients_ok = false;
      break;
    }
  }
  cert.verified = cert.declared_ok && cert.coefficients_ok;
  return cert;
}

}  // namespace daggerhom
