#include "doctest.h"

#include "daggerhom/barcomplex.hpp"
#include "daggerhom/rng.hpp"
#include "daggerhom/verify.hpp"

using namespace daggerhom;

TEST_CASE("bar differential on fixed simplices") {
  Group f2 = Group::free_group(2);
  Element x = f2.parse_element("a"), y = f2.parse_element("b"), z = f2.parse_element("ab");

  BarChain c1 = BarChain::basis(f2, {x, y}, false);
  BarChain d1 = bar_differential(c1);
  CHECK(d1.coeff({y}) == 1);
  CHECK(d1.coeff({x}) == -1);

  BarChain c2 = BarChain::basis(f2, {x, y, z}, false);
  BarChain d2 = bar_differential(c2);
  CHECK(d2.coeff({y, z}) == 1);
  CHECK(d2.coeff({x, z}) == -1);
  CHECK(d2.coeff({x, y}) == 1);

  CHECK_THROWS_AS(bar_differential(BarChain(f2, 0, false)), std::invalid_argument);
}

TEST_CASE("d o d = 0 on random chains for all builtin groups") {
  Rng rng(101);
  for (const char* spec : {"free:2", "zn:2", "sym:3"}) {
    Group g = Group::parse_spec(spec);
    auto ball = g.ball(spec == std::string("free:2") ? 3 : 2);
    for (int deg = 2; deg <= 4; ++deg) {
      for (int t = 0; t < 25; ++t) {
        for (bool reduced : {false, true}) {
          BarChain ch = random_chain(rng, g, ball, deg, reduced, 4);
          CHECK(bar_differential(bar_differential(ch)).is_zero());
        }
      }
    }
  }
}

TEST_CASE("augmentation") {
  Group f2 = Group::free_group(2);
  Element x = f2.parse_element("a"), y = f2.parse_element("b");
  BarChain ch(f2, 0, false);
  ch.add_term({x}, Rational(1));
  ch.add_term({y}, Rational(-1));
  CHECK(augmentation(ch) == 0);

  BarChain ch3(f2, 0, false);
  ch3.add_term({x}, Rational(3));
  CHECK(augmentation(ch3) == 3);
  CHECK_THROWS_AS(augmentation(BarChain(f2, 1, false)), std::invalid_argument);

  Rng rng(7);
  auto ball = f2.ball(3);
  for (int t = 0; t < 100; ++t) {
    BarChain c = random_chain(rng, f2, ball, 1, false, 4);
    CHECK(augmentation(bar_differential(c)) == 0);
  }
}

TEST_CASE("prism operator on fixed cases") {
  Group f2 = Group::free_group(2);
  Combing pc = Combing::builtin(f2);
  Element g = f2.parse_element("ab");
  auto f0 = [&](const Element& x) { return pc.evaluate(0, x); };
  auto f1 = [&](const Element& x) { return pc.evaluate(1, x); };

  // degree 0: single summand (f(x), g(x))
  BarChain ch = BarChain::basis(f2, {g}, true);
  BarChain h = prism_homotopy(f0, f1, ch);
  CHECK(h.terms().size() == 1);
  CHECK(h.coeff({f2.identity(), f2.parse_element("a")}) == 1);

  // reduced mode with f = g collapses everything
  CHECK(prism_homotopy(f1, f1, ch).is_zero());
  BarChain ch2 = BarChain::basis(f2, {g, f2.parse_element("a")}, true);
  CHECK(prism_homotopy(f1, f1, ch2).is_zero());
}

TEST_CASE("prism identity dH + Hd = g* - f*") {
  Rng rng(103);
  for (const char* spec : {"free:2", "zn:2", "sym:3"}) {
    Group g = Group::parse_spec(spec);
    auto ball = g.ball(2);
    for (int t = 0; t < 100; ++t) {
      // random set maps of the ball
      std::map<Element, Element> tf, tg;
      for (const Element& e : ball) {
        tf[e] = ball[rng.below(ball.size())];
        tg[e] = ball[rng.below(ball.size())];
      }
      ElementMap f = [&tf](const Element& x) { return tf.at(x); };
      ElementMap h = [&tg](const Element& x) { return tg.at(x); };
      int deg = 1 + static_cast<int>(rng.below(3));
      bool reduced = t % 2 == 0;
      BarChain ch = random_chain(rng, g, ball, deg, reduced, 3);
      BarChain lhs =
          bar_differential(prism_homotopy(f, h, ch)) + prism_homotopy(f, h, bar_differential(ch));
      BarChain rhs = pushforward(h, ch) - pushforward(f, ch);
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("combing homotopy: worked degree-0 example") {
  Group f2 = Group::free_group(2);
  Combing pc = Combing::builtin(f2);
  Element g = f2.parse_element("ab");
  BarChain h = combing_homotopy(pc, BarChain::basis(f2, {g}, true));
  // telescoping through the prefixes e -> a -> ab: two summands
  CHECK(h.terms().size() == 2);
  CHECK(h.coeff({f2.identity(), f2.parse_element("a")}) == 1);
  CHECK(h.coeff({f2.parse_element("a"), g}) == 1);
}

TEST_CASE("combing homotopy contracts the augmentation-kernel complex") {
  for (const char* spec : {"free:2", "zn:2", "sym:3"}) {
    Group g = Group::parse_spec(spec);
    Combing c = Combing::builtin(g);
    Rng rng(105);
    auto ball = g.ball(spec == std::string("free:2") ? 4 : 2);
    const Element e = g.identity();
    for (int t = 0; t < 50; ++t) {
      BarChain ch(g, 0, true);
      Element x = ball[rng.below(ball.size())];
      ch.add_term({x}, random_small_rational(rng));
      ch.add_term({e}, -augmentation(ch));
      CHECK(bar_differential(combing_homotopy(c, ch)) == ch);
    }
    for (int deg = 1; deg <= 3; ++deg) {
      for (int t = 0; t < 30; ++t) {
        BarChain ch = random_chain(rng, g, ball, deg, true, 3);
        BarChain lhs = bar_differential(combing_homotopy(c, ch)) +
                       combing_homotopy(c, bar_differential(ch));
        CHECK(lhs == ch);
      }
    }
  }
}

TEST_CASE("telescoping picks up the augmentation term in degree 0") {
  // outside the augmentation kernel, dH(ch) = ch - alpha(ch) (e)
  Group f2 = Group::free_group(2);
  Combing c = Combing::builtin(f2);
  Rng rng(106);
  auto ball = f2.ball(3);
  for (int t = 0; t < 50; ++t) {
    BarChain ch(f2, 0, true);
    for (int i = 0; i < 3; ++i)
      ch.add_term({ball[rng.below(ball.size())]}, random_small_rational(rng));
    BarChain expected = ch;
    expected.add_term({f2.identity()}, -augmentation(ch));
    if (ch.is_zero()) continue;
    CHECK(bar_differential(combing_homotopy(c, ch)) == expected);
  }
}

TEST_CASE("summand count bounded by the J table") {
  Group f2 = Group::free_group(2);
  Combing c = Combing::builtin(f2);
  CombingProfile p = combing_profile(c, 4);
  Rng rng(107);
  auto ball = f2.ball(4);
  for (int t = 0; t < 100; ++t) {
    int deg = static_cast<int>(rng.below(4));
    Tuple tup = random_reduced_tuple(rng, ball, deg);
    BarChain h = combing_homotopy(c, BarChain::basis(f2, tup, true));
    long bound = 0;
    for (const Element& x : tup) bound += p.j_table.at(x);
    CHECK(static_cast<long>(h.terms().size()) <= bound);
  }
}

TEST_CASE("combing homotopy requires reduced chains and stabilization") {
  Group f2 = Group::free_group(2);
  Combing c = Combing::builtin(f2);
  CHECK_THROWS_AS(combing_homotopy(c, BarChain(f2, 1, false)), std::invalid_argument);

  Element a = f2.parse_element("a");
  Combing runaway(f2, [a, &f2](int stage, const Element& x) {
    Element y = x;
    for (int i = 0; i < stage; ++i) y = f2.multiply(y, a);
    return y;
  });
  BarChain ch = BarChain::basis(f2, {f2.parse_element("b")}, true);
  CHECK_THROWS_AS(combing_homotopy(runaway, ch), StageCapExceeded);
}

TEST_CASE("free coordinates") {
  Group f2 = Group::free_group(2);
  Element g = f2.parse_element("ab"), h = f2.parse_element("b");

  // (g, gh) = g (x) (e, h)
  BarChain ch = BarChain::basis(f2, {g, f2.multiply(g, h)}, false);
  auto co = free_coordinates(ch);
  REQUIRE(co.size() == 1);
  REQUIRE(co.count(g) == 1);
  Tuple inner = co.at(g).begin()->first;
  CHECK(inner == Tuple{f2.identity(), h});

  Rng rng(109);
  auto ball = f2.ball(3);
  for (int t = 0; t < 100; ++t) {
    int deg = static_cast<int>(rng.below(3));
    BarChain c = random_chain(rng, f2, ball, deg, false, 4);
    CHECK(reassemble_free_coordinates(f2, c.degree(), c.reduced(), free_coordinates(c)) == c);

    // diagonal equivariance: translating the chain translates the outer
    // index and keeps inner tuples fixed
    Element t0 = ball[rng.below(ball.size())];
    auto left = free_coordinates(translate(t0, c));
    std::map<Element, std::map<Tuple, Rational>> expected;
    for (const auto& [outer, inner_map] : free_coordinates(c))
      expected[f2.multiply(t0, outer)] = inner_map;
    CHECK(left == expected);
  }
}

TEST_CASE("chain gauge") {
  Group f2 = Group::free_group(2);
  Integer p = 5;
  BarChain ch(f2, 0, true);
  ch.add_term({f2.parse_element("aba")}, Rational(1));  // nu = 0, total length 3
  GaugeValue g = chain_gauge(ch, p);
  CHECK(g.value == Rational(1, 4));
  CHECK(chain_gauge(BarChain(f2, 0, true), p).infinite);
}

TEST_CASE("growth certificate on the prefix combing") {
  Group f2 = Group::free_group(2);
  Combing c = Combing::builtin(f2);
  Integer p = 5;

  // the worked example: one basis chain of length 3, coefficient 1
  BarChain ch = BarChain::basis(f2, {f2.parse_element("aba")}, true);
  GrowthCertificate cert = growth_certificate(c, ch, Rational(1, 4), p);
  CHECK(cert.d_pointwise == 1);
  CHECK(cert.d == 2);  // (degree + 2) * pointwise constant
  CHECK(cert.gauge_out == Rational(1, 8));
  CHECK(cert.verified);

  // support in the identity verifies trivially (the image is empty)
  BarChain at_e = BarChain::basis(f2, {f2.identity()}, true);
  CHECK(growth_certificate(c, at_e, Rational(1, 2), p).verified);

  // gauge precondition is enforced
  CHECK_THROWS_AS(growth_certificate(c, ch, Rational(2), p), std::invalid_argument);
}

TEST_CASE("gauge degradation bounded over random certified chains") {
  Group f2 = Group::free_group(2);
  Combing c = Combing::builtin(f2);
  Integer p = 5;
  Rng rng(113);
  auto ball = f2.ball(4);
  CombingProfile profile = combing_profile(c, 4);
  for (int t = 0; t < 60; ++t) {
    int deg = static_cast<int>(rng.below(3));
    BarChain ch(f2, deg, true);
    for (int i = 0; i < 3; ++i) {
      Tuple tup = random_reduced_tuple(rng, ball, deg);
      long total = 0;
      for (const Element& x : tup) total += f2.word_length(x);
      ch.add_term(tup, random_scaled_unit(rng, p, total, total + 2));
    }
    if (ch.is_zero()) continue;
    GaugeValue gauge = chain_gauge(ch, p);
    GrowthCertificate cert = growth_certificate(c, ch, gauge.value, p, &profile);
    CHECK(cert.verified);
    // and the homotopy image really does satisfy the degraded gauge
    GaugeValue out = chain_gauge(combing_homotopy(c, ch), p);
    if (!out.infinite) CHECK(out.value >= gauge.value / cert.d);
  }
}

TEST_CASE("adversarial jump fails the certificate") {
  Group f2 = Group::free_group(2);
  Integer p = 5;
  Element far = f2.parse_element("abababababab");  // length 12
  Element marked = f2.parse_element("aba");
  Combing honest = Combing::builtin(f2);

  // claims the prefix constants but jumps far away at stage 1
  Combing fake(
      f2,
      [&, far, marked](int stage, const Element& x) {
        if (x == marked && stage == 1) return far;
        return honest.evaluate(stage, x);
      },
      CombingConstants{Rational(1), Rational(1), 1});

  BarChain ch = BarChain::basis(f2, {marked}, true);

  // cross-check against the declared constants catches the jump
  GrowthCertificate cert = growth_certificate(fake, ch, Rational(1, 4), p);
  CHECK(!cert.declared_ok);
  CHECK(!cert.verified);

  // and against an honest profile the image gauge itself fails
  CombingProfile honest_profile = combing_profile(honest, 3);
  GrowthCertificate cert2 = growth_certificate(fake, ch, Rational(1, 4), p, &honest_profile);
  CHECK(!cert2.coefficients_ok);
  CHECK(!cert2.verified);
}
