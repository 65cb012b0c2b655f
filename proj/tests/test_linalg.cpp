#include "doctest.h"

#include "daggerhom/linalg.hpp"
#include "daggerhom/rng.hpp"
#include "daggerhom/verify.hpp"

using namespace daggerhom;

namespace {

SparseMatrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols, int fill) {
  SparseMatrix m(rows, cols);
  for (int i = 0; i < fill; ++i)
    m.set(rng.below(rows), rng.below(cols), random_small_rational(rng));
  return m;
}

}  // namespace

TEST_CASE("rank on fixed matrices") {
  CHECK(rank(SparseMatrix::identity(5)) == 5);
  CHECK(rank(SparseMatrix(3, 4)) == 0);

  SparseMatrix prop(2, 2);
  prop.set(0, 0, 1);
  prop.set(0, 1, 2);
  prop.set(1, 0, 2);
  prop.set(1, 1, 4);
  CHECK(rank(prop) == 1);
}

TEST_CASE("kernel bases on fixed matrices") {
  CHECK(kernel_basis(SparseMatrix::identity(3)).empty());
  CHECK(kernel_basis(SparseMatrix(2, 2)).size() == 2);

  SparseMatrix row(1, 2);
  row.set(0, 0, 1);
  row.set(0, 1, 1);
  auto basis = kernel_basis(row);
  REQUIRE(basis.size() == 1);
  CHECK(basis[0][0] == -basis[0][1]);
}

TEST_CASE("rank-nullity and exact kernels on random matrices") {
  Rng rng(77);
  for (int t = 0; t < 40; ++t) {
    std::size_t rows = 1 + rng.below(8), cols = 1 + rng.below(8);
    SparseMatrix m = random_matrix(rng, rows, cols, 12);
    auto basis = kernel_basis(m);
    CHECK(rank(m) + basis.size() == cols);
    for (const auto& v : basis) {
      for (const Rational& entry : m.apply(v)) CHECK(entry == 0);
    }
  }
}

TEST_CASE("homology dimensions") {
  // zero differentials on F^3
  SparseMatrix din(3, 3), dout(3, 3);
  CHECK(homology_dim(din, dout).dim == 3);

  // exact pair: F -> F^2 -> F with matching image and kernel
  SparseMatrix d1(2, 1), d0(1, 2);
  d1.set(0, 0, 1);
  d1.set(1, 0, 2);
  d0.set(0, 0, 2);
  d0.set(0, 1, -1);
  auto h = homology_dim(d1, d0);
  CHECK(h.is_complex);
  CHECK(h.dim == 0);

  // middle homology of the all-zero 1 -> 2 -> 1 slice
  SparseMatrix z1(2, 1), z0(1, 2);
  CHECK(homology_dim(z1, z0).dim == 2);

  // non-complex input is reported with a witness column
  SparseMatrix bad_in(2, 1), bad_out(1, 2);
  bad_in.set(0, 0, 1);
  bad_out.set(0, 0, 1);
  auto bad = homology_dim(bad_in, bad_out);
  CHECK(!bad.is_complex);
  CHECK(bad.witness_column == 0);
}

TEST_CASE("solve_linear finds exact solutions") {
  Rng rng(5);
  for (int t = 0; t < 30; ++t) {
    std::size_t rows = 1 + rng.below(6), cols = 1 + rng.below(6);
    SparseMatrix m = random_matrix(rng, rows, cols, 10);
    // build a consistent right-hand side from a random preimage
    std::vector<Rational> x0(cols);
    for (auto& v : x0) v = random_small_rational(rng);
    std::vector<Rational> b = m.apply(x0);
    auto x = solve_linear(m, b);
    REQUIRE(x.has_value());
    CHECK(m.apply(*x) == b);
  }
  // inconsistent system
  SparseMatrix m(2, 1);
  m.set(0, 0, 1);
  m.set(1, 0, 1);
  CHECK(!solve_linear(m, {Rational(1), Rational(2)}).has_value());
}

TEST_CASE("quotient projections split the section") {
  Rng rng(6);
  for (int t = 0; t < 20; ++t) {
    std::size_t dim = 2 + rng.below(6);
    SparseMatrix rel = random_matrix(rng, dim, rng.below(6) + 1, 8);
    QuotientMap q = quotient_by_columns(rel);
    CHECK(q.dim == dim - rank(rel));
    // projection of every relation column vanishes
    for (std::size_t c = 0; c < rel.cols(); ++c) {
      std::vector<Rational> col(dim, Rational(0));
      for (const auto& [rc, v] : rel.entries())
        if (rc.second == c) col[rc.first] = v;
      for (const Rational& entry : q.projection.apply(col)) CHECK(entry == 0);
    }
    // proj . sect = id on the quotient
    for (std::size_t j = 0; j < q.dim; ++j) {
      std::vector<Rational> ej(q.dim, Rational(0));
      ej[j] = 1;
      std::vector<Rational> round = q.projection.apply(q.section.apply(ej));
      CHECK(round == ej);
    }
  }
}
