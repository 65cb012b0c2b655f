#include "daggerhom/verify.hpp"

#include <algorithm>
#include <map>
#include <memory>

namespace daggerhom {

Rational random_small_rational(Rng& rng) {
  static const long dens[] = {1, 1, 2, 3, 5};
  long num = rng.range(-9, 9);
  if (num == 0) num = 1;
  return Rational(num, dens[rng.below(5)]);
}

Rational random_scaled_unit(Rng& rng, const Integer& p, long vmin, long vmax) {
  long v = rng.range(vmin, vmax);
  long num = rng.range(1, 9);
  while (Integer(num) % p == 0) ++num;
  long den = rng.range(1, 9);
  while (Integer(den) % p == 0) ++den;
  Rational u(num, den);
  return u * pow_rational(Rational(p), v);
}

Tuple random_reduced_tuple(Rng& rng, const std::vector<Element>& ball, int degree) {
  Tuple t;
  for (int i = 0; i <= degree; ++i) {
    Element next = ball[rng.below(ball.size())];
    while (!t.empty() && next == t.back()) next = ball[rng.below(ball.size())];
    t.push_back(next);
  }
  return t;
}

BarChain random_chain(Rng& rng, const Group& g, const std::vector<Element>& ball,
                      int degree, bool reduced, int terms) {
  BarChain ch(g, degree, reduced);
  for (int i = 0; i < terms; ++i) {
    Tuple t;
    if (reduced) {
      t = random_reduced_tuple(rng, ball, degree);
    } else {
      for (int k = 0; k <= degree; ++k) t.push_back(ball[rng.below(ball.size())]);
    }
    ch.add_term(t, random_small_rational(rng));
  }
  return ch;
}

namespace {

// random self-map of the ball, fixing nothing in particular
ElementMap random_ball_map(Rng& rng, const std::vector<Element>& ball) {
  auto table = std::make_shared<std::map<Element, Element>>();
  for (const Element& e : ball) (*table)[e] = ball[rng.below(ball.size())];
  return [table](const Element& x) {
    auto it = table->find(x);
    return it == table->end() ? x : it->second;
  };
}

}  // namespace

std::vector<CheckResult> verify_bar_suite(const BarVerifyOptions& opt) {
  std::vector<CheckResult> out;
  Rng rng(opt.seed);
  const Group g = Group::parse_spec(opt.group_spec);
  const std::vector<Element> ball = g.ball(opt.ball_radius, opt.ball_cap);
  const Combing combing = Combing::builtin(g);
  const int prism_sign = opt.corrupt_prism_sign ? -1 : +1;

  // d o d = 0
  {
    bool ok = true;
    std::string witness;
    for (int deg = 2; deg <= std::max(opt.max_degree, 2) && ok; ++deg) {
      for (int s = 0; s < opt.samples && ok; ++s) {
        bool reduced = (s % 2 == 0);
        BarChain ch = random_chain(rng, g, ball, deg, reduced, 4);
        if (!bar_differential(bar_differential(ch)).is_zero()) {
          ok = false;
          witness = "degree " + std::to_string(deg);
        }
      }
    }
    out.push_back(ok ? check_pass("d2-zero") : check_fail("d2-zero", witness));
  }

  // augmentation annihilates boundaries
  {
    bool ok = true;
    for (int s = 0; s < opt.samples && ok; ++s) {
      BarChain ch = random_chain(rng, g, ball, 1, false, 4);
      ok = augmentation(bar_differential(ch)) == 0;
    }
    out.push_back(ok ? check_pass("aug-d1-zero") : check_fail("aug-d1-zero"));
  }

  // prism identity dH + Hd = g* - f*
  {
    bool ok = true;
    std::string witness;
    for (int s = 0; s < opt.samples && ok; ++s) {
      ElementMap f = random_ball_map(rng, ball);
      ElementMap h = random_ball_map(rng, ball);
      int deg = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(
                        std::max(opt.max_degree - 1, 1))));
      bool reduced = (s % 2 == 0);
      BarChain ch = random_chain(rng, g, ball, deg, reduced, 3);
      BarChain lhs = bar_differential(prism_homotopy(f, h, ch, prism_sign)) +
                     prism_homotopy(f, h, bar_differential(ch), prism_sign);
      BarChain rhs = pushforward(h, ch) - pushforward(f, ch);
      if (!(lhs == rhs)) {
        ok = false;
        witness = "degree " + std::to_string(deg) + (reduced ? " reduced" : " unreduced");
      }
    }
    out.push_back(ok ? check_pass("prism-identity") : check_fail("prism-identity", witness));
  }

  // contraction dH + Hd = id on the augmentation-kernel complex
  {
    bool ok = true;
    std::string witness;
    const Element e = g.identity();
    for (int s = 0; s < opt.samples && ok; ++s) {
      BarChain ch(g, 0, true);
      Element x = ball[rng.below(ball.size())];
      if (x == e) continue;
      ch.add_term({x}, random_small_rational(rng));
      ch.add_term({e}, -augmentation(ch));
      BarChain lhs = bar_differential(combing_homotopy(combing, ch, prism_sign));
      if (!(lhs == ch)) {
        ok = false;
        witness = "degree 0";
      }
    }
    for (int deg = 1; deg <= opt.max_degree && ok; ++deg) {
      for (int s = 0; s < opt.samples && ok; ++s) {
        BarChain ch = random_chain(rng, g, ball, deg, true, 3);
        BarChain lhs = bar_differential(combing_homotopy(combing, ch, prism_sign)) +
                       combing_homotopy(combing, bar_differential(ch), prism_sign);
        if (!(lhs == ch)) {
          ok = false;
          witness = "degree " + std::to_string(deg);
        }
      }
    }
    out.push_back(ok ? check_pass("contraction") : check_fail("contraction", witness));
  }

  CombingProfile profile = combing_profile(combing, opt.ball_radius, opt.ball_cap);

  // summand count <= sum of J over tuple entries
  {
    bool ok = profile.stabilized;
    std::string witness = ok ? "" : "combing did not stabilize on the ball";
    for (int s = 0; s < opt.samples && ok; ++s) {
      int deg = static_cast<int>(rng.below(static_cast<std::uint64_t>(opt.max_degree) + 1));
      Tuple t = random_reduced_tuple(rng, ball, deg);
      BarChain h = combing_homotopy(combing, BarChain::basis(g, t, true));
      long bound = 0;
      for (const Element& x : t) bound += profile.j_table.at(x);
      if (static_cast<long>(h.terms().size()) > bound) {
        ok = false;
        witness = "tuple of degree " + std::to_string(deg);
      }
    }
    out.push_back(ok ? check_pass("summand-count") : check_fail("summand-count", witness));
  }

  // declared constants, when present, must dominate the measured ones
  {
    if (const auto& decl = combing.declared_constants()) {
      bool ok = profile.stabilized && profile.c_est <= decl->quasi_lipschitz_c &&
                profile.s_est <= decl->step_bound_s;
      out.push_back(ok ? check_pass("declared-constants")
                       : check_fail("declared-constants",
                                    "measured C=" + format_rational(profile.c_est) +
                                        " S=" + format_rational(profile.s_est)));
    } else {
      out.push_back({"declared-constants", "skip", "no declared constants"});
    }
  }

  // gauge degradation bounded by the profiled constant
  {
    bool ok = true;
    std::string witness;
    for (int s = 0; s < opt.samples && ok; ++s) {
      int deg = static_cast<int>(rng.below(static_cast<std::uint64_t>(opt.max_degree) + 1));
      BarChain ch(g, deg, true);
      for (int t = 0; t < 3; ++t) {
        Tuple tup = random_reduced_tuple(rng, ball, deg);
        long total = 0;
        for (const Element& x : tup) total += g.word_length(x);
        // coefficient valuation comfortably above the tuple length
        ch.add_term(tup, random_scaled_unit(rng, opt.prime, total, total + 2));
      }
      if (ch.is_zero()) continue;
      GaugeValue gauge = chain_gauge(ch, opt.prime);
      GrowthCertificate cert =
          growth_certificate(combing, ch, gauge.value, opt.prime, &profile);
      if (!cert.verified) {
        ok = false;
        witness = "degree " + std::to_string(deg) +
                  ", gauge " + format_rational(gauge.value);
      }
    }
    out.push_back(ok ? check_pass("growth-certificate")
                     : check_fail("growth-certificate", witness));
  }

  std::sort(out.begin(), out.end(),
            [](const CheckResult& a, const CheckResult& b) { return a.name < b.name; });
  return out;
}

}  // namespace daggerhom
