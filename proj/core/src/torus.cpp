#include "daggerhom/torus.hpp"

#include <stdexcept>

#include "daggerhom/linalg.hpp"

namespace daggerhom {

void TorusElement::add_term(long m, long n, const Rational& coeff) {
  if (coeff == 0) return;
  auto key = std::make_pair(m, n);
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(key, coeff);
  } else {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

TorusElement TorusElement::monomial(const Rational& lambda, long m, long n,
                                    const Rational& coeff) {
  TorusElement e(lambda);
  e.add_term(m, n, coeff);
  return e;
}

TorusElement TorusElement::operator+(const TorusElement& o) const {
  if (lambda_ != o.lambda_) throw std::invalid_argument("torus element: lambda mismatch");
  TorusElement r = *this;
  for (const auto& [k, c] : o.terms_) r.add_term(k.first, k.second, c);
  return r;
}

TorusElement TorusElement::operator-(const TorusElement& o) const {
  return *this + o.scale(Rational(-1));
}

TorusElement TorusElement::scale(const Rational& c) const {
  TorusElement r(lambda_);
  if (c == 0) return r;
  for (const auto& [k, v] : terms_) r.terms_[k] = v * c;
  return r;
}

TorusElement multiply(const TorusElement& a, const TorusElement& b) {
  if (a.lambda() != b.lambda()) throw std::invalid_argument("torus multiply: lambda mismatch");
  TorusElement out(a.lambda());
  for (const auto& [k1, c1] : a.terms()) {
    for (const auto& [k2, c2] : b.terms()) {
      // U2^n U1^m' = lambda^(n m') U1^m' U2^n
      Rational c = c1 * c2 * pow_rational(a.lambda(), k1.second * k2.first);
      out.add_term(k1.first + k2.first, k1.second + k2.second, c);
    }
  }
  return out;
}

TorusElement mul_u1_left(const TorusElement& a) {
  TorusElement out(a.lambda());
  for (const auto& [k, c] : a.terms()) out.add_term(k.first + 1, k.second, c);
  return out;
}

TorusElement mul_u1_right(const TorusElement& a) {
  TorusElement out(a.lambda());
  for (const auto& [k, c] : a.terms())
    out.add_term(k.first + 1, k.second, c * pow_rational(a.lambda(), k.second));
  return out;
}

TorusElement mul_u2_left(const TorusElement& a) {
  TorusElement out(a.lambda());
  for (const auto& [k, c] : a.terms())
    out.add_term(k.first, k.second + 1, c * pow_rational(a.lambda(), k.first));
  return out;
}

TorusElement mul_u2_right(const TorusElement& a) {
  TorusElement out(a.lambda());
  for (const auto& [k, c] : a.terms()) out.add_term(k.first, k.second + 1, c);
  return out;
}

void TorusTensor::add_term(const std::array<long, 4>& key, const Rational& coeff) {
  if (coeff == 0) return;
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(key, coeff);
  } else {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

TorusTensor TorusTensor::monomial(const Rational& lambda, const std::array<long, 4>& key,
                                  const Rational& coeff) {
  TorusTensor t(lambda);
  t.add_term(key, coeff);
  return t;
}

TorusTensor TorusTensor::operator+(const TorusTensor& o) const {
  if (lambda_ != o.lambda_) throw std::invalid_argument("torus tensor: lambda mismatch");
  TorusTensor r = *this;
  for (const auto& [k, c] : o.terms_) r.add_term(k, c);
  return r;
}

TorusTensor TorusTensor::operator-(const TorusTensor& o) const {
  return *this + o.scale(Rational(-1));
}

TorusTensor TorusTensor::scale(const Rational& c) const {
  TorusTensor r(lambda_);
  if (c == 0) return r;
  for (const auto& [k, v] : terms_) r.terms_[k] = v * c;
  return r;
}

namespace {

enum class Slot { First, Second };
enum class Side { Left, Right };

// Multiply one tensor leg by U1 or U2, resolving the normal form.
TorusTensor leg_mul(const TorusTensor& t, Slot slot, Side side, bool u1) {
  TorusTensor out(t.lambda());
  for (const auto& [k, c] : t.terms()) {
    long m = slot == Slot::First ? k[0] : k[2];
    long n = slot == Slot::First ? k[1] : k[3];
    Rational factor(1);
    if (u1) {
      // U1 m-shift; right multiplication walks past U2^n
      if (side == Side::Right) factor = pow_rational(t.lambda(), n);
      ++m;
    } else {
      // U2 n-shift; left multiplication walks past U1^m
      if (side == Side::Left) factor = pow_rational(t.lambda(), m);
      ++n;
    }
    std::array<long, 4> key = k;
    if (slot == Slot::First) {
      key[0] = m;
      key[1] = n;
    } else {
      key[2] = m;
      key[3] = n;
    }
    out.add_term(key, c * factor);
  }
  return out;
}

}  // namespace

std::pair<TorusTensor, TorusTensor> koszul_b2(const TorusTensor& t) {
  TorusTensor first = leg_mul(t, Slot::Second, Side::Left, /*u1=*/false).scale(t.lambda()) -
                      leg_mul(t, Slot::First, Side::Right, /*u1=*/false);
  TorusTensor second = leg_mul(t, Slot::First, Side::Right, /*u1=*/true).scale(t.lambda()) -
                       leg_mul(t, Slot::Second, Side::Left, /*u1=*/true);
  return {first, second};
}

TorusTensor koszul_b1(const std::pair<TorusTensor, TorusTensor>& pr) {
  if (pr.first.lambda() != pr.second.lambda())
    throw std::invalid_argument("koszul_b1: lambda mismatch");
  TorusTensor a = leg_mul(pr.first, Slot::First, Side::Right, /*u1=*/true) -
                  leg_mul(pr.first, Slot::Second, Side::Left, /*u1=*/true);
  TorusTensor b = leg_mul(pr.second, Slot::First, Side::Right, /*u1=*/false) -
                  leg_mul(pr.second, Slot::Second, Side::Left, /*u1=*/false);
  return a + b;
}

TorusElement koszul_b0(const TorusTensor& t) {
  TorusElement out(t.lambda());
  for (const auto& [k, c] : t.terms()) {
    // (U1^m1 U2^n1)(U1^m2 U2^n2) = lambda^(n1 m2) U1^(m1+m2) U2^(n1+n2)
    out.add_term(k[0] + k[2], k[1] + k[3], c * pow_rational(t.lambda(), k[1] * k[2]));
  }
  return out;
}

std::pair<TorusElement, TorusElement> hochschild_d1(const TorusElement& a) {
  TorusElement first = mul_u2_left(a).scale(a.lambda()) - mul_u2_right(a);
  TorusElement second = mul_u1_right(a).scale(a.lambda()) - mul_u1_left(a);
  return {first, second};
}

TorusElement hochschild_d0(const TorusElement& a, const TorusElement& b) {
  if (a.lambda() != b.lambda()) throw std::invalid_argument("hochschild_d0: lambda mismatch");
  return (mul_u1_right(a) - mul_u1_left(a)) + (mul_u2_right(b) - mul_u2_left(b));
}

bool kernel_relation_check(const TorusElement& a, const TorusElement& b) {
  if (a.lambda() != b.lambda())
    throw std::invalid_argument("kernel_relation_check: lambda mismatch");
  const Rational& lambda = a.lambda();
  // candidate index pairs (m, n) where either side could be nonzero
  std::vector<std::pair<long, long>> candidates;
  for (const auto& [k, _] : a.terms()) candidates.push_back({k.first, k.second - 1});
  for (const auto& [k, _] : b.terms()) candidates.push_back({k.first - 1, k.second});
  for (const auto& [m, n] : candidates) {
    Rational lhs = (pow_rational(lambda, n + 1) - 1) * [&] {
      auto it = a.terms().find({m, n + 1});
      return it == a.terms().end() ? Rational(0) : it->second;
    }();
    Rational rhs = (pow_rational(lambda, m + 1) - 1) * [&] {
      auto it = b.terms().find({m + 1, n});
      return it == b.terms().end() ? Rational(0) : it->second;
    }();
    if (lhs != rhs) return false;
  }
  return true;
}

std::array<long, 3> hh_bidegree(const Rational& lambda, long M, long N) {
  // charge-(M,N) slice of the complex A -> A (+) A -> A
  SparseMatrix d1(2, 1), d0(1, 2);
  d1.set(0, 0, pow_rational(lambda, M) - 1);
  d1.set(1, 0, pow_rational(lambda, N) - 1);
  d0.set(0, 0, pow_rational(lambda, N) - 1);
  d0.set(0, 1, Rational(1) - pow_rational(lambda, M));
  long h2 = 1 - static_cast<long>(rank(d1));
  long h0 = 1 - static_cast<long>(rank(d0));
  long h1 = static_cast<long>(homology_dim(d1, d0).dim);
  return {h0, h1, h2};
}

namespace {

struct Box {
  int radius;
  std::size_t index(long m, long n) const {
    const long side = 2l * radius + 1;
    return static_cast<std::size_t>((m + radius) * side + (n + radius));
  }
  bool contains(long m, long n) const {
    return std::abs(m) <= radius && std::abs(n) <= radius;
  }
  std::size_t size() const {
    const std::size_t side = 2ul * radius + 1;
    return side * side;
  }
};

struct WindowedMatrices {
  Box box2, box1, box0;
  SparseMatrix d1;  // deg2 box -> (slot a | slot b) over box1
  SparseMatrix d0;  // (slot a | slot b) over box1 -> box0
  bool charge_audit_ok = true;
};

WindowedMatrices build_windowed(const Rational& lambda, int window) {
  WindowedMatrices w{Box{window + 1}, Box{window + 2}, Box{window + 3}, SparseMatrix(),
                     SparseMatrix(), true};
  const std::size_t n1 = w.box1.size();
  w.d1 = SparseMatrix(2 * n1, w.box2.size());
  w.d0 = SparseMatrix(w.box0.size(), 2 * n1);

  for (long m = -w.box2.radius; m <= w.box2.radius; ++m) {
    for (long n = -w.box2.radius; n <= w.box2.radius; ++n) {
      auto [da, db] = hochschild_d1(TorusElement::monomial(lambda, m, n));
      for (const auto& [k, c] : da.terms()) {
        if (!w.box1.contains(k.first, k.second)) continue;
        w.d1.add(w.box1.index(k.first, k.second), w.box2.index(m, n), c);
        // the image of charge (m+1, n+1) must keep that charge
        if (k.first + 1 != m + 1 || k.second != n + 1) w.charge_audit_ok = false;
      }
      for (const auto& [k, c] : db.terms()) {
        if (!w.box1.contains(k.first, k.second)) continue;
        w.d1.add(n1 + w.box1.index(k.first, k.second), w.box2.index(m, n), c);
        if (k.first != m + 1 || k.second + 1 != n + 1) w.charge_audit_ok = false;
      }
    }
  }
  TorusElement zero(lambda);
  for (long m = -w.box1.radius; m <= w.box1.radius; ++m) {
    for (long n = -w.box1.radius; n <= w.box1.radius; ++n) {
      TorusElement mono = TorusElement::monomial(lambda, m, n);
      TorusElement ia = hochschild_d0(mono, zero);
      TorusElement ib = hochschild_d0(zero, mono);
      for (const auto& [k, c] : ia.terms()) {
        if (!w.box0.contains(k.first, k.second)) continue;
        w.d0.add(w.box0.index(k.first, k.second), w.box1.index(m, n), c);
        if (k.first != m + 1 || k.second != n) w.charge_audit_ok = false;
      }
      for (const auto& [k, c] : ib.terms()) {
        if (!w.box0.contains(k.first, k.second)) continue;
        w.d0.add(w.box0.index(k.first, k.second), n1 + w.box1.index(m, n), c);
        if (k.first != m || k.second != n + 1) w.charge_audit_ok = false;
      }
    }
  }
  return w;
}

// Homology of the charge-(M,N) slice read off the assembled operator
// matrices rather than the closed-form coefficients.
std::array<long, 3> windowed_bidegree(const WindowedMatrices& w, long M, long N) {
  const std::size_t n1 = w.box1.size();
  const std::size_t i2 = w.box2.index(M - 1, N - 1);
  const std::size_t ia = w.box1.index(M - 1, N);
  const std::size_t ib = n1 + w.box1.index(M, N - 1);
  const std::size_t i0 = w.box0.index(M, N);

  SparseMatrix d1(2, 1), d0(1, 2);
  d1.set(0, 0, w.d1.at(ia, i2));
  d1.set(1, 0, w.d1.at(ib, i2));
  d0.set(0, 0, w.d0.at(i0, ia));
  d0.set(0, 1, w.d0.at(i0, ib));
  long h2 = 1 - static_cast<long>(rank(d1));
  long h0 = 1 - static_cast<long>(rank(d0));
  long h1 = static_cast<long>(homology_dim(d1, d0).dim);
  return {h0, h1, h2};
}

std::string format_monomial(long m, long n) {
  if (m == 0 && n == 0) return "1";
  std::string s;
  if (m != 0) s += "U1^" + std::to_string(m);
  if (n != 0) {
    if (!s.empty()) s += "*";
    s += "U2^" + std::to_string(n);
  }
  return s;
}

std::string format_scaled(const Rational& c, const std::string& mono) {
  return c == 1 ? mono : format_rational(c) + "*" + mono;
}

// Homology representatives of the charge-(0,0) slice, read off the exact
// kernels of its differentials.
void slice_generators(const Rational& lambda, HhResult& res) {
  SparseMatrix d1(2, 1), d0(1, 2);
  d1.set(0, 0, pow_rational(lambda, 0) - 1);
  d1.set(1, 0, pow_rational(lambda, 0) - 1);
  d0.set(0, 0, pow_rational(lambda, 0) - 1);
  d0.set(0, 1, Rational(1) - pow_rational(lambda, 0));

  for (const auto& v : kernel_basis(d1))
    res.generators_hh2.push_back(format_scaled(v[0], format_monomial(-1, -1)));
  // im d1 = 0 in this slice, so kernel vectors of d0 are representatives
  for (const auto& v : kernel_basis(d0)) {
    std::string a = v[0] == 0 ? "0" : format_scaled(v[0], format_monomial(-1, 0));
    std::string b = v[1] == 0 ? "0" : format_scaled(v[1], format_monomial(0, -1));
    res.generators_hh1.push_back("(" + a + ", " + b + ")");
  }
  if (rank(d0) == 0) res.generators_hh0.push_back(format_monomial(0, 0));
}

}  // namespace

HhResult hh_total(const Rational& lambda, int window, HhMethod method) {
  if (window < 2) throw std::invalid_argument("hh_total: window must be >= 2");
  if (lambda == 0) throw std::invalid_argument("hh_total: lambda must be nonzero");

  HhResult res;
  res.degenerate_lambda = (lambda == 1 || lambda == Rational(-1));

  std::map<int, std::array<long, 4>> graded, windowed;
  if (method != HhMethod::Windowed) {
    for (int w = 0; w <= window; ++w) {
      std::array<long, 4> tot{0, 0, 0, 0};
      for (long M = -w; M <= w; ++M) {
        for (long N = -w; N <= w; ++N) {
          auto h = hh_bidegree(lambda, M, N);
          tot[0] += h[0];
          tot[1] += h[1];
          tot[2] += h[2];
        }
      }
      graded[w] = tot;
    }
  }
  if (method != HhMethod::Graded) {
    WindowedMatrices wm = build_windowed(lambda, window);
    res.charge_audit_ok = wm.charge_audit_ok;
    for (int w = 0; w <= window; ++w) {
      std::array<long, 4> tot{0, 0, 0, 0};
      for (long M = -w; M <= w; ++M) {
        for (long N = -w; N <= w; ++N) {
          auto h = windowed_bidegree(wm, M, N);
          tot[0] += h[0];
          tot[1] += h[1];
          tot[2] += h[2];
        }
      }
      windowed[w] = tot;
    }
  }

  switch (method) {
    case HhMethod::Graded:
      res.by_window = graded;
      break;
    case HhMethod::Windowed:
      res.by_window = windowed;
      break;
    case HhMethod::Both:
      res.methods_agree = (graded == windowed);
      res.by_window = graded;
      break;
  }
  res.dims = res.by_window.at(window);
  res.stabilized = window >= 2 && res.by_window.at(window) == res.by_window.at(window - 1) &&
                   res.by_window.at(window - 1) == res.by_window.at(window - 2);

  // homology is concentrated at charge (0, 0) away from roots of unity
  if (!res.degenerate_lambda) slice_generators(lambda, res);
  return res;
}

}  // namespace daggerhom
