#include <benchmark/benchmark.h>

#include "daggerhom/algebra.hpp"
#include "daggerhom/barcomplex.hpp"
#include "daggerhom/forms.hpp"
#include "daggerhom/linalg.hpp"
#include "daggerhom/rng.hpp"
#include "daggerhom/torus.hpp"
#include "daggerhom/verify.hpp"

using namespace daggerhom;

namespace {

void BM_BallEnumeration(benchmark::State& state) {
  Group f2 = Group::free_group(2);
  const int radius = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto ball = f2.ball(radius);
    benchmark::DoNotOptimize(ball);
  }
}
BENCHMARK(BM_BallEnumeration)->Arg(4)->Arg(6)->Arg(8);

void BM_TwistedConvolution(benchmark::State& state) {
  Group z2 = Group::free_abelian(2);
  Cocycle c{Rational(6, 5)};
  Rng rng(1);
  auto ball = z2.ball(4);
  AlgebraElement f(z2, c), h(z2, c);
  for (int i = 0; i < static_cast<int>(state.range(0)); ++i) {
    f.add_term(ball[rng.below(ball.size())], random_small_rational(rng));
    h.add_term(ball[rng.below(ball.size())], random_small_rational(rng));
  }
  for (auto _ : state) {
    AlgebraElement prod = convolve(f, h);
    benchmark::DoNotOptimize(prod);
  }
}
BENCHMARK(BM_TwistedConvolution)->Arg(10)->Arg(40);

void BM_CombingHomotopy(benchmark::State& state) {
  Group f2 = Group::free_group(2);
  Combing c = Combing::builtin(f2);
  Rng rng(2);
  auto ball = f2.ball(4);
  BarChain ch = random_chain(rng, f2, ball, static_cast<int>(state.range(0)), true, 8);
  for (auto _ : state) {
    BarChain h = combing_homotopy(c, ch);
    benchmark::DoNotOptimize(h);
  }
}
BENCHMARK(BM_CombingHomotopy)->Arg(1)->Arg(2)->Arg(3);

void BM_BareissRank(benchmark::State& state) {
  Rng rng(3);
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  SparseMatrix m(n, n);
  for (std::size_t i = 0; i < n * n / 3; ++i)
    m.set(rng.below(n), rng.below(n), random_small_rational(rng));
  for (auto _ : state) {
    std::size_t r = rank(m);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_BareissRank)->Arg(20)->Arg(40)->Arg(80);

void BM_TorusHhTotal(benchmark::State& state) {
  for (auto _ : state) {
    HhResult res = hh_total(Rational(6, 5), static_cast<int>(state.range(0)), HhMethod::Both);
    benchmark::DoNotOptimize(res);
  }
}
BENCHMARK(BM_TorusHhTotal)->Arg(4)->Arg(8);

void BM_CommutatorQuotient(benchmark::State& state) {
  FiniteAlgebra s3 = FiniteAlgebra::group_algebra(Group::symmetric(3));
  for (auto _ : state) {
    std::size_t d = commutator_quotient_dim(s3, static_cast<int>(state.range(0)));
    benchmark::DoNotOptimize(d);
  }
}
BENCHMARK(BM_CommutatorQuotient)->Arg(0)->Arg(1);

}  // namespace

BENCHMARK_MAIN();
