// Acceptance suite: one criterion per run_criterion call, each printing a
// single [PASS]/[FAIL] line with its runtime.  Exit code 0 iff all pass.

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "daggerhom/algebra.hpp"
#include "daggerhom/barcomplex.hpp"
#include "daggerhom/forms.hpp"
#include "daggerhom/io.hpp"
#include "daggerhom/rng.hpp"
#include "daggerhom/torus.hpp"
#include "daggerhom/verify.hpp"
#include "json.hpp"
#include "support/connection_solver.hpp"
#include "support/oracles.hpp"

using namespace daggerhom;

namespace {

int g_failures = 0;

void run_criterion(int number, const std::string& label,
                   const std::function<bool(std::string&)>& body) {
  std::string detail;
  auto start = std::chrono::steady_clock::now();
  bool ok = false;
  try {
    ok = body(detail);
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
  }
  auto secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  char line[512];
  std::snprintf(line, sizeof(line), "[%s] %2d: %s (%.2fs)%s%s", ok ? "PASS" : "FAIL", number,
                label.c_str(), secs, detail.empty() ? "" : " -- ", detail.c_str());
  std::cout << line << std::endl;
  if (!ok) ++g_failures;
}

std::pair<int, std::string> run_cli(const std::string& args) {
  std::string cmd = std::string(DAGGERHOM_CLI_PATH) + " " + args + " 2>/dev/null";
  std::array<char, 4096> buf;
  std::string out;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {-1, ""};
  while (fgets(buf.data(), buf.size(), pipe)) out += buf.data();
  return {WEXITSTATUS(pclose(pipe)), out};
}

// all tuples over free(2) with sum of entry lengths <= budget, adjacent
// entries distinct
void enumerate_tuples(const std::vector<std::vector<Element>>& by_length, int arity,
                      int budget, Tuple& current,
                      const std::function<void(const Tuple&)>& visit) {
  if (arity == 0) {
    visit(current);
    return;
  }
  for (int l = 0; l <= budget; ++l) {
    for (const Element& e : by_length[l]) {
      if (!current.empty() && current.back() == e) continue;
      current.push_back(e);
      enumerate_tuples(by_length, arity - 1, budget - l, current, visit);
      current.pop_back();
    }
  }
}

bool criterion_torus_hh(std::string& detail) {
  const std::array<long, 4> expect{1, 2, 1, 0};
  HhResult res = hh_total(Rational(6, 5), 8, HhMethod::Both);
  for (int w = 4; w <= 8; ++w) {
    if (res.by_window.at(w) != expect) {
      detail = "window " + std::to_string(w) + " disagrees";
      return false;
    }
  }
  if (!res.stabilized || !res.methods_agree || !res.charge_audit_ok) {
    detail = "stabilization or method agreement failed";
    return false;
  }
  // the command-line surface reports the same dims
  auto [code, out] = run_cli("torus hh --p 5 --lambda 6/5 --window 6 --method both");
  if (code != 0) {
    detail = "cli exit code " + std::to_string(code);
    return false;
  }
  auto j = nlohmann::json::parse(out);
  if (j["results"]["dims"] != nlohmann::json::array({1, 2, 1, 0})) {
    detail = "cli dims mismatch";
    return false;
  }
  return true;
}

bool criterion_complex_identities(std::string& detail) {
  Rng rng(2024);
  const Rational lambda(6, 5);
  for (int t = 0; t < 100; ++t) {
    TorusTensor a(lambda), b(lambda);
    for (int i = 0; i < 3; ++i) {
      a.add_term({rng.range(-3, 3), rng.range(-3, 3), rng.range(-3, 3), rng.range(-3, 3)},
                 random_small_rational(rng));
      b.add_term({rng.range(-3, 3), rng.range(-3, 3), rng.range(-3, 3), rng.range(-3, 3)},
                 random_small_rational(rng));
    }
    if (!koszul_b1(koszul_b2(a)).is_zero()) {
      detail = "b1 b2 != 0";
      return false;
    }
    if (!koszul_b0(koszul_b1({a, b})).is_zero()) {
      detail = "b0 b1 != 0";
      return false;
    }
    TorusElement x(lambda);
    for (int i = 0; i < 3; ++i)
      x.add_term(rng.range(-4, 4), rng.range(-4, 4), random_small_rational(rng));
    auto [d1a, d1b] = hochschild_d1(x);
    if (!hochschild_d0(d1a, d1b).is_zero()) {
      detail = "d0 d1 != 0";
      return false;
    }
  }
  for (const char* spec : {"free:2", "zn:2", "sym:3"}) {
    Group g = Group::parse_spec(spec);
    auto ball = g.ball(std::string(spec) == "free:2" ? 3 : 2);
    for (int deg = 2; deg <= 4; ++deg) {
      for (int t = 0; t < 100; ++t) {
        BarChain ch = random_chain(rng, g, ball, deg, t % 2 == 0, 4);
        if (!bar_differential(bar_differential(ch)).is_zero()) {
          detail = std::string("dd != 0 over ") + spec;
          return false;
        }
      }
    }
    for (int t = 0; t < 100; ++t) {
      BarChain ch = random_chain(rng, g, ball, 1, false, 4);
      if (augmentation(bar_differential(ch)) != 0) {
        detail = std::string("aug o d1 != 0 over ") + spec;
        return false;
      }
    }
  }
  return true;
}

bool criterion_contraction(std::string& detail) {
  Group f2 = Group::free_group(2);
  Combing c = Combing::builtin(f2);
  CombingProfile profile = combing_profile(c, 5);
  if (!profile.stabilized) {
    detail = "prefix combing failed to stabilize";
    return false;
  }

  std::vector<std::vector<Element>> by_length(6);
  for (const Element& e : f2.ball(5)) by_length[f2.word_length(e)].push_back(e);

  // degree 0: the augmentation-kernel basis (g) - (e), support in ball(5)
  const Element e = f2.identity();
  for (int l = 1; l <= 5; ++l) {
    for (const Element& g : by_length[l]) {
      BarChain ch(f2, 0, true);
      ch.add_term({g}, 1);
      ch.add_term({e}, -1);
      if (!(bar_differential(combing_homotopy(c, ch)) == ch)) {
        detail = "degree 0 at " + f2.format(g);
        return false;
      }
    }
  }

  // degrees 1..3: every reduced basis tuple with total entry length <= 5
  for (int deg = 1; deg <= 3; ++deg) {
    bool ok = true;
    std::string witness;
    Tuple current;
    enumerate_tuples(by_length, deg + 1, 5, current, [&](const Tuple& t) {
      if (!ok) return;
      BarChain ch = BarChain::basis(f2, t, true);
      BarChain h = combing_homotopy(c, ch);
      BarChain lhs = bar_differential(h) + combing_homotopy(c, bar_differential(ch));
      if (!(lhs == ch)) {
        ok = false;
        witness = "degree " + std::to_string(deg);
        return;
      }
      long bound = 0;
      for (const Element& x : t) bound += profile.j_table.at(x);
      if (static_cast<long>(h.terms().size()) > bound) {
        ok = false;
        witness = "summand count, degree " + std::to_string(deg);
      }
    });
    if (!ok) {
      detail = witness;
      return false;
    }
  }
  return true;
}

bool criterion_growth_certificates(std::string& detail) {
  Group f2 = Group::free_group(2);
  Combing c = Combing::builtin(f2);
  Integer p = 5;
  CombingProfile profile = combing_profile(c, 4);
  Rng rng(4096);
  auto ball = f2.ball(4);

  for (int t = 0; t < 120; ++t) {
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
    if (!cert.verified) {
      detail = "honest chain failed certification";
      return false;
    }
    GaugeValue out = chain_gauge(combing_homotopy(c, ch), p);
    if (!out.infinite && out.value < gauge.value / cert.d) {
      detail = "image gauge below gauge/D";
      return false;
    }
  }

  // adversarial fixture: claims prefix constants, jumps at stage 1
  Element far = f2.parse_element("abababababab");
  Element marked = f2.parse_element("aba");
  Combing fake(
      f2,
      [&f2, far, marked, &c](int stage, const Element& x) {
        if (x == marked && stage == 1) return far;
        return c.evaluate(stage, x);
      },
      CombingConstants{Rational(1), Rational(1), 1});
  BarChain ch = BarChain::basis(f2, {marked}, true);
  if (growth_certificate(fake, ch, Rational(1, 4), p).verified) {
    detail = "adversarial combing passed its own profile";
    return false;
  }
  CombingProfile honest = combing_profile(c, 3);
  if (growth_certificate(fake, ch, Rational(1, 4), p, &honest).verified) {
    detail = "adversarial combing passed against the honest profile";
    return false;
  }
  return true;
}

bool criterion_symmetry(std::string& detail) {
  Group f2 = Group::free_group(2);
  Rng rng(555);
  auto ball = f2.ball(3);
  for (int t = 0; t < 100; ++t) {
    PairFunction phi(f2);
    for (int i = 0; i < 4; ++i)
      phi.add_term(ball[rng.below(ball.size())], ball[rng.below(ball.size())],
                   random_small_rational(rng));
    if (!(symmetry_u(symmetry_u(phi, false), true) == phi)) {
      detail = "U^{-1} U != id";
      return false;
    }
  }
  for (const Element& g : ball) {
    for (const Element& h : ball) {
      PairFunction phi(f2);
      phi.add_term(g, h, 1);
      for (bool inverse : {false, true}) {
        PairFunction u = symmetry_u(phi, inverse);
        for (const auto& [key, _] : u.terms()) {
          long in = f2.word_length(g) + f2.word_length(h);
          long out = f2.word_length(key.first) + f2.word_length(key.second);
          if (out > 3 * in) {
            detail = "length bound exceeded at (" + f2.format(g) + "," + f2.format(h) + ")";
            return false;
          }
        }
      }
    }
  }
  return true;
}

bool criterion_crossed_product(std::string& detail) {
  Rng rng(808);
  const Rational lambda(6, 5);
  for (int t = 0; t < 200; ++t) {
    CrossedProductElement x(lambda), y(lambda);
    for (int i = 0; i < 3; ++i) {
      x.add_term(rng.range(-3, 3), rng.range(-3, 3), random_small_rational(rng));
      y.add_term(rng.range(-3, 3), rng.range(-3, 3), random_small_rational(rng));
    }
    if (!(crossed_to_torus(crossed_multiply(x, y)) ==
          convolve(crossed_to_torus(x), crossed_to_torus(y)))) {
      detail = "multiplicativity failed";
      return false;
    }
  }
  return true;
}

bool criterion_finite_x(std::string& detail) {
  FiniteAlgebra s3 = FiniteAlgebra::group_algebra(Group::symmetric(3));
  FiniteAlgebra z4 = FiniteAlgebra::group_algebra(Group::cyclic(4));
  FiniteAlgebra m2 = FiniteAlgebra::matrix_algebra(2);
  if (x_complex_homology(s3, 1) != std::pair<std::size_t, std::size_t>{3, 0}) {
    detail = "X(F[S3]) != (3,0)";
    return false;
  }
  if (commutator_quotient_dim(s3, 0) != 3 || commutator_quotient_dim(z4, 0) != 4 ||
      commutator_quotient_dim(m2, 0) != 1) {
    detail = "commutator quotient dims off";
    return false;
  }
  for (const char* spec : {"sym:3", "cyclic:4"}) {
    Group g = Group::parse_spec(spec);
    if (commutator_quotient_dim(FiniteAlgebra::group_algebra(g), 0) !=
        test::conjugacy_class_count(g)) {
      detail = std::string("class-count oracle disagrees for ") + spec;
      return false;
    }
  }
  return true;
}

bool criterion_iwasawa(std::string& detail) {
  TowerSpec tw;
  tw.levels.push_back({Group::cyclic(2), {}});
  std::vector<int> img4, img8;
  for (int i = 1; i < 4; ++i) img4.push_back(i % 2);
  for (int i = 1; i < 8; ++i) img8.push_back(i % 4);
  tw.levels.push_back({Group::cyclic(4), img4});
  tw.levels.push_back({Group::cyclic(8), img8});
  auto reports = iwasawa_tower(tw, 1);
  const std::size_t expect[3] = {2, 4, 8};
  for (int i = 0; i < 3; ++i) {
    if (reports[i].quotient_dim != expect[i]) {
      detail = "quotient dims off";
      return false;
    }
    if (reports[i].x_homology.second != 0) {
      detail = "odd homology nonzero";
      return false;
    }
  }
  for (int i = 1; i < 3; ++i) {
    if (!reports[i].map_surjective || !reports[i].induced_quotient_surjective) {
      detail = "transition surjection failed";
      return false;
    }
  }
  return true;
}

bool criterion_form_identities(std::string& detail) {
  for (const char* spec : {"cyclic:2", "cyclic:4", "sym:3"}) {
    FiniteAlgebra A = FiniteAlgebra::group_algebra(Group::parse_spec(spec));
    for (int k = 0; k <= 3; ++k) {
      FormSpace sp{&A, k};
      for (std::size_t i = 0; i < sp.dim(); ++i) {
        Form w = sp.basis_form(i);
        if (k >= 2 && !forms_b(forms_b(w)).is_zero()) {
          detail = std::string("b^2 != 0 over ") + spec;
          return false;
        }
        if (!forms_B(forms_B(w)).is_zero()) {
          detail = std::string("B^2 != 0 over ") + spec;
          return false;
        }
        Form mixed =
            (k >= 1) ? forms_b(forms_B(w)) + forms_B(forms_b(w)) : forms_b(forms_B(w));
        if (!mixed.is_zero()) {
          detail = std::string("bB + Bb != 0 over ") + spec;
          return false;
        }
      }
    }
  }
  return true;
}

bool criterion_connection(std::string& detail) {
  FiniteAlgebra z2 = FiniteAlgebra::group_algebra(Group::cyclic(2));
  auto nabla = test::solve_connection(z2, 1);
  if (!nabla) {
    detail = "linear solve found no connection";
    return false;
  }
  ConnectionReport solved = connection_check(z2, 1, *nabla);
  if (!solved.all_pass()) {
    detail = "solved connection failed an axiom";
    return false;
  }

  FormSpace s1{&z2, 1}, s2{&z2, 2}, s3{&z2, 3};
  SparseMatrix zero(s2.dim(), s1.dim());
  ConnectionReport rz = connection_check(z2, 1, zero);
  if (rz.homotopy_identity.pass) {
    detail = "zero map passed the homotopy identity";
    return false;
  }

  // fixture violating only module linearity (still Leibniz)
  SparseMatrix not_linear(s2.dim(), s1.dim());
  not_linear.set(s2.index({0, 1, 1}), s1.index({0, 1}), Rational(1, 2));
  not_linear.set(s2.index({1, 1, 1}), s1.index({0, 1}), Rational(1, 2));
  not_linear.set(s2.index({0, 1, 1}), s1.index({1, 1}), Rational(1, 2));
  not_linear.set(s2.index({1, 1, 1}), s1.index({1, 1}), Rational(-1, 2));
  ConnectionReport r1 = connection_check(z2, 1, not_linear);
  if (r1.module_linearity.pass || !r1.leibniz.pass) {
    detail = "linearity fixture not isolated";
    return false;
  }

  // fixture violating only the Leibniz rule (still left-linear)
  SparseMatrix not_leibniz(s2.dim(), s1.dim());
  not_leibniz.set(s2.index({0, 1, 1}), s1.index({0, 1}), Rational(1));
  not_leibniz.set(s2.index({1, 1, 1}), s1.index({1, 1}), Rational(1));
  ConnectionReport r2 = connection_check(z2, 1, not_leibniz);
  if (r2.leibniz.pass || !r2.module_linearity.pass) {
    detail = "leibniz fixture not isolated";
    return false;
  }

  // fixture violating only the extension rule
  SparseMatrix bad_upper(s3.dim(), s2.dim());
  bad_upper.set(0, 0, Rational(7));
  ConnectionReport r3 = connection_check(z2, 1, *nabla, &bad_upper);
  if (r3.extension.pass || !r3.module_linearity.pass || !r3.leibniz.pass) {
    detail = "extension fixture not isolated";
    return false;
  }
  return true;
}

bool criterion_degenerate_lambda(std::string& detail) {
  if (hh_bidegree(Rational(-1), 2, 2) != std::array<long, 3>{1, 2, 1}) {
    detail = "hh_bidegree(-1; 2,2) != (1,2,1)";
    return false;
  }
  HhResult res = hh_total(Rational(-1), 6, HhMethod::Graded);
  if (!res.degenerate_lambda || res.stabilized) {
    detail = "degenerate lambda not reported";
    return false;
  }
  auto [code, out] = run_cli("torus hh --p 5 --lambda -1 --window 5");
  if (code != 0) {
    detail = "cli exit " + std::to_string(code);
    return false;
  }
  auto j = nlohmann::json::parse(out);
  if (j["results"]["stabilized"] != false || j["results"]["degenerate_lambda"] != true) {
    detail = "cli degenerate report mismatch";
    return false;
  }
  return true;
}

}  // namespace

int main() {
  run_criterion(1, "torus Hochschild homology (1,2,1,0), windows 4-8, both methods",
                criterion_torus_hh);
  run_criterion(2, "complex identities: Koszul, Hochschild, bar differentials",
                criterion_complex_identities);
  run_criterion(3, "contracting homotopy on the augmentation-kernel complex, ball(5)",
                criterion_contraction);
  run_criterion(4, "growth certificates with adversarial fixture", criterion_growth_certificates);
  run_criterion(5, "symmetry operator: inverse and length bound", criterion_symmetry);
  run_criterion(6, "crossed product to twisted algebra is multiplicative",
                criterion_crossed_product);
  run_criterion(7, "finite-group truncated complex and commutator quotients", criterion_finite_x);
  run_criterion(8, "cyclic 2-group tower: dims (2,4,8) and surjections", criterion_iwasawa);
  run_criterion(9, "form identities b^2, B^2, bB+Bb exhaustively", criterion_form_identities);
  run_criterion(10, "connection verifier: solved connection and fixtures", criterion_connection);
  run_criterion(11, "degenerate lambda sensitivity", criterion_degenerate_lambda);

  if (g_failures) {
    std::cout << g_failures << " criterion(s) failed" << std::endl;
    return 1;
  }
  std::cout << "all criteria passed" << std::endl;
  return 0;
}
