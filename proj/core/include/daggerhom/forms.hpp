#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "daggerhom/group.hpp"
#include "daggerhom/linalg.hpp"
#include "daggerhom/scalar.hpp"

namespace daggerhom {

using AlgebraVec = std::vector<Rational>;

// Finite-dimensional unital algebra given by structure constants over a
// basis whose first element is the unit.
class FiniteAlgebra {
 public:
  static FiniteAlgebra group_algebra(const Group& finite_group);
  static FiniteAlgebra matrix_algebra(int n);
  static FiniteAlgebra field();

  std::size_t dim() const { return names_.size(); }
  const std::vector<std::string>& basis_names() const { return names_; }
  // product of basis elements as a coefficient vector
  const AlgebraVec& basis_product(std::size_t i, std::size_t j) const {
    return table_[i][j];
  }
  AlgebraVec multiply(const AlgebraVec& a, const AlgebraVec& b) const;
  AlgebraVec unit() const;
  AlgebraVec basis_vec(std::size_t i) const;

  // Group algebras remember their group (used by the tower machinery).
  const std::optional<Group>& source_group() const { return group_; }

 private:
  FiniteAlgebra() = default;
  void validate() const;

  std::vector<std::string> names_;
  std::vector<std::vector<AlgebraVec>> table_;  // (i, j) -> product vector
  std::optional<Group> group_;
};

// Element of Omega^n(A) = A (x) Abar^(x n); keys are (i0, i1, ..., in) with
// i_k >= 1 for k >= 1 (the unit is dropped from the quotient basis).
class Form {
 public:
  Form(const FiniteAlgebra* alg, int degree) : alg_(alg), degree_(degree) {}

  const FiniteAlgebra* algebra() const { return alg_; }
  int degree() const { return degree_; }
  const std::map<std::vector<int>, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const std::vector<int>& key, const Rational& coeff);

  Form operator+(const Form& o) const;
  Form operator-(const Form& o) const;
  Form scale(const Rational& c) const;

  friend bool operator==(const Form& a, const Form& b) {
    return a.degree_ == b.degree_ && a.terms_ == b.terms_;
  }

 private:
  const FiniteAlgebra* alg_;
  int degree_;
  std::map<std::vector<int>, Rational> terms_;
};

// Dense coordinates on Omega^n with dim = d (d-1)^n.
struct FormSpace {
  const FiniteAlgebra* alg;
  int degree;

  std::size_t dim() const;
  std::size_t index(const std::vector<int>& key) const;
  std::vector<int> key(std::size_t index) const;
  Form basis_form(std::size_t index) const;
  std::vector<Rational> to_vector(const Form& f) const;
  Form from_vector(const std::vector<Rational>& v) const;
};

// Hochschild differential b: Omega^n -> Omega^(n-1),
//   b(a0 da1..dan) = a0a1 da2..dan
//                  + sum_{i=1..n-1} (-1)^i a0 da1..d(a_i a_{i+1})..dan
//                  + (-1)^n a_n a0 da1..da_{n-1}.
Form forms_b(const Form& w);

// Connes operator B: Omega^n -> Omega^(n+1),
//   B(a0 da1..dan) = sum_{i=0..n} (-1)^(ni) da_i..dan da0..da_{i-1}.
Form forms_B(const Form& w);

Form left_multiply(const AlgebraVec& a, const Form& w);
Form right_multiply(const Form& w, const AlgebraVec& a);
// w * d(e_j); zero when j indexes the unit.
Form append_d(const Form& w, std::size_t j);

// dim of Omega^n(A) / span{ a w - w a }.
std::size_t commutator_quotient_dim(const FiniteAlgebra& alg, int n,
                                    std::size_t cap = 200000);

// Quotient coordinates for Omega^n / [A, Omega^n].
QuotientMap commutator_quotient(const FiniteAlgebra& alg, int n);

// Z/2-graded homology of the Hodge-truncated complex: layers Omega^k for
// k < n plus Omega^n/[-,-] at the top, differential b + B composed through
// the quotient in the top layer.
std::pair<std::size_t, std::size_t> x_complex_homology(const FiniteAlgebra& alg, int n,
                                                       std::size_t cap = 200000);

struct AxiomResult {
  bool pass = true;
  std::string witness;  // first failing basis combination
};

struct ConnectionReport {
  AxiomResult module_linearity;   // (i)   nabla(a w) == a nabla(w)
  AxiomResult leibniz;            // (ii)  nabla(w a) == nabla(w) a + (-1)^n w da
  AxiomResult extension;          // (iii) upper map == canonical extension
  AxiomResult homotopy_identity;  // (iv)  b nabla + nabla b == id in degrees n, n+1
  bool all_pass() const {
    return module_linearity.pass && leibniz.pass && extension.pass && homotopy_identity.pass;
  }
};

// Verifies a candidate connection given as an exact matrix on the Omega^n
// basis.  The degree-(n+1) map defaults to the canonical extension
// nabla(w dx) = nabla(w) dx; an explicit matrix may be supplied instead and
// is then checked against the canonical one.  An optional lower map
// Omega^(n-1) -> Omega^n contributes the nabla(b w) term in degree n.
ConnectionReport connection_check(const FiniteAlgebra& alg, int n, const SparseMatrix& nabla,
                                  const SparseMatrix* nabla_upper = nullptr,
                                  const SparseMatrix* nabla_lower = nullptr);

struct TowerLevel {
  Group group;
  // images, in the previous level's group, of this group's generator list;
  // empty for the base level
  std::vector<int> generator_images;
};

struct TowerSpec {
  std::vector<TowerLevel> levels;
};

struct TowerLevelReport {
  std::string group_spec;
  std::size_t algebra_dim = 0;
  std::size_t quotient_dim = 0;
  std::pair<std::size_t, std::size_t> x_homology{0, 0};
  bool has_map = false;
  bool map_surjective = false;
  bool induced_quotient_surjective = false;
};

// Per-level commutator quotients and X-complex homology, plus verification
// that every transition map induces a surjection on commutator quotients.
// Throws std::invalid_argument when a transition map fails to extend to a
// homomorphism.
std::vector<TowerLevelReport> iwasawa_tower(const TowerSpec& tower, int n,
                                            std::size_t cap = 200000);

}  // namespace daggerhom
