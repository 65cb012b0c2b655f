#include "daggerhom/forms.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>

namespace daggerhom {

namespace {

std::string key_to_string(const std::vector<int>& key) {
  std::string s = "(";
  for (std::size_t i = 0; i < key.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(key[i]);
  }
  return s + ")";
}

}  // namespace

FiniteAlgebra FiniteAlgebra::group_algebra(const Group& g) {
  if (g.kind() != GroupKind::Finite)
    throw std::invalid_argument("group_algebra: group must be finite");
  FiniteAlgebra a;
  const std::size_t d = g.order();
  a.group_ = g;
  a.names_.reserve(d);
  for (std::size_t i = 0; i < d; ++i)
    a.names_.push_back(g.format(Element{{static_cast<int32_t>(i)}}));
  a.table_.assign(d, std::vector<AlgebraVec>(d, AlgebraVec(d, Rational(0))));
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      Element prod = g.multiply(Element{{static_cast<int32_t>(i)}},
                                Element{{static_cast<int32_t>(j)}});
      a.table_[i][j][prod.v[0]] = 1;
    }
  }
  a.validate();
  return a;
}

FiniteAlgebra FiniteAlgebra::matrix_algebra(int n) {
  if (n < 1) throw std::invalid_argument("matrix_algebra: n must be >= 1");
  FiniteAlgebra a;
  const std::size_t d = static_cast<std::size_t>(n) * n;
  // basis: unit, then E_ij for every matrix unit except E_00
  a.names_.push_back("1");
  std::vector<std::pair<int, int>> pairs;  // basis index k >= 1 -> (i, j)
  pairs.push_back({-1, -1});
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == 0 && j == 0) continue;
      pairs.push_back({i, j});
      a.names_.push_back("E" + std::to_string(i + 1) + std::to_string(j + 1));
    }

  // expansion of E_il in the basis
  auto unit_vec = [&](int i, int l) {
    AlgebraVec v(d, Rational(0));
    if (i == 0 && l == 0) {
      // E_00 = 1 - sum_{t>=1} E_tt
      v[0] = 1;
      for (int t = 1; t < n; ++t) {
        for (std::size_t k = 1; k < d; ++k)
          if (pairs[k] == std::make_pair(t, t)) v[k] = -1;
      }
    } else {
      for (std::size_t k = 1; k < d; ++k)
        if (pairs[k] == std::make_pair(i, l)) v[k] = 1;
    }
    return v;
  };

  a.table_.assign(d, std::vector<AlgebraVec>(d, AlgebraVec(d, Rational(0))));
  for (std::size_t x = 0; x < d; ++x) {
    for (std::size_t y = 0; y < d; ++y) {
      if (x == 0) {
        a.table_[x][y][y] = 1;
      } else if (y == 0) {
        a.table_[x][y][x] = 1;
      } else {
        auto [i, j] = pairs[x];
        auto [k, l] = pairs[y];
        if (j == k) a.table_[x][y] = unit_vec(i, l);
      }
    }
  }
  a.validate();
  return a;
}

FiniteAlgebra FiniteAlgebra::field() {
  FiniteAlgebra a;
  a.names_ = {"1"};
  a.table_.assign(1, std::vector<AlgebraVec>(1, AlgebraVec(1, Rational(1))));
  a.validate();
  return a;
}

AlgebraVec FiniteAlgebra::multiply(const AlgebraVec& a, const AlgebraVec& b) const {
  const std::size_t d = dim();
  AlgebraVec out(d, Rational(0));
  for (std::size_t i = 0; i < d; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < d; ++j) {
      if (b[j] == 0) continue;
      const AlgebraVec& p = table_[i][j];
      Rational c = a[i] * b[j];
      for (std::size_t k = 0; k < d; ++k)
        if (p[k] != 0) out[k] += c * p[k];
    }
  }
  return out;
}

AlgebraVec FiniteAlgebra::unit() const { return basis_vec(0); }

AlgebraVec FiniteAlgebra::basis_vec(std::size_t i) const {
  AlgebraVec v(dim(), Rational(0));
  v[i] = 1;
  return v;
}

void FiniteAlgebra::validate() const {
  const std::size_t d = dim();
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t k = 0; k < d; ++k) {
      if (table_[0][i][k] != Rational(k == i ? 1 : 0) ||
          table_[i][0][k] != Rational(k == i ? 1 : 0))
        throw std::invalid_argument("finite algebra: basis[0] is not a unit");
    }
  }
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k) {
        AlgebraVec lhs = multiply(table_[i][j], basis_vec(k));
        AlgebraVec rhs = multiply(basis_vec(i), table_[j][k]);
        if (lhs != rhs)
          throw std::invalid_argument("finite algebra: structure constants not associative");
      }
}

void Form::add_term(const std::vector<int>& key, const Rational& coeff) {
  if (static_cast<int>(key.size()) != degree_ + 1)
    throw std::invalid_argument("form: key arity does not match degree");
  if (key[0] < 0 || key[0] >= static_cast<int>(alg_->dim()))
    throw std::invalid_argument("form: head index out of range");
  for (std::size_t i = 1; i < key.size(); ++i)
    if (key[i] < 1 || key[i] >= static_cast<int>(alg_->dim()))
      throw std::invalid_argument("form: tail index out of range");
  if (coeff == 0) return;
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(key, coeff);
  } else {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

Form Form::operator+(const Form& o) const {
  if (alg_ != o.alg_ || degree_ != o.degree_)
    throw std::invalid_argument("form: shape mismatch in sum");
  Form r = *this;
  for (const auto& [k, c] : o.terms_) r.add_term(k, c);
  return r;
}

Form Form::operator-(const Form& o) const { return *this + o.scale(Rational(-1)); }

Form Form::scale(const Rational& c) const {
  Form r(alg_, degree_);
  if (c == 0) return r;
  for (const auto& [k, v] : terms_) r.terms_[k] = v * c;
  return r;
}

std::size_t FormSpace::dim() const {
  std::size_t d = alg->dim(), out = d;
  for (int i = 0; i < degree; ++i) out *= (d - 1);
  return out;
}

std::size_t FormSpace::index(const std::vector<int>& key) const {
  const std::size_t d = alg->dim();
  std::size_t idx = static_cast<std::size_t>(key[0]);
  for (std::size_t i = 1; i < key.size(); ++i)
    idx = idx * (d - 1) + static_cast<std::size_t>(key[i] - 1);
  return idx;
}

std::vector<int> FormSpace::key(std::size_t index) const {
  const std::size_t d = alg->dim();
  std::vector<int> k(degree + 1);
  for (int i = degree; i >= 1; --i) {
    k[i] = static_cast<int>(index % (d - 1)) + 1;
    index /= (d - 1);
  }
  k[0] = static_cast<int>(index);
  return k;
}

Form FormSpace::basis_form(std::size_t index) const {
  Form f(alg, degree);
  f.add_term(key(index), 1);
  return f;
}

std::vector<Rational> FormSpace::to_vector(const Form& f) const {
  if (f.degree() != degree) throw std::invalid_argument("form space: degree mismatch");
  std::vector<Rational> v(dim(), Rational(0));
  for (const auto& [k, c] : f.terms()) v[index(k)] = c;
  return v;
}

Form FormSpace::from_vector(const std::vector<Rational>& v) const {
  Form f(alg, degree);
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) f.add_term(key(i), v[i]);
  return f;
}

Form forms_b(const Form& w) {
  const int n = w.degree();
  if (n < 1) throw std::invalid_argument("forms_b: degree must be >= 1");
  const FiniteAlgebra& A = *w.algebra();
  Form out(&A, n - 1);
  for (const auto& [key, c] : w.terms()) {
    // a0 a1 da2..dan
    {
      const AlgebraVec& p = A.basis_product(key[0], key[1]);
      for (std::size_t k = 0; k < p.size(); ++k) {
        if (p[k] == 0) continue;
        std::vector<int> nk;
        nk.push_back(static_cast<int>(k));
        for (int i = 2; i <= n; ++i) nk.push_back(key[i]);
        out.add_term(nk, c * p[k]);
      }
    }
    // (-1)^i a0 da1 .. d(a_i a_{i+1}) .. dan
    for (int i = 1; i <= n - 1; ++i) {
      const AlgebraVec& p = A.basis_product(key[i], key[i + 1]);
      Rational sc = (i % 2 == 0) ? c : -c;
      for (std::size_t k = 1; k < p.size(); ++k) {  // d(unit) = 0
        if (p[k] == 0) continue;
        std::vector<int> nk;
        for (int t = 0; t < i; ++t) nk.push_back(key[t]);
        nk.push_back(static_cast<int>(k));
        for (int t = i + 2; t <= n; ++t) nk.push_back(key[t]);
        out.add_term(nk, sc * p[k]);
      }
    }
    // (-1)^n a_n a0 da1..da_{n-1}
    {
      const AlgebraVec& p = A.basis_product(key[n], key[0]);
      Rational sc = (n % 2 == 0) ? c : -c;
      for (std::size_t k = 0; k < p.size(); ++k) {
        if (p[k] == 0) continue;
        std::vector<int> nk;
        nk.push_back(static_cast<int>(k));
        for (int t = 1; t <= n - 1; ++t) nk.push_back(key[t]);
        out.add_term(nk, sc * p[k]);
      }
    }
  }
  return out;
}

Form forms_B(const Form& w) {
  const int n = w.degree();
  const FiniteAlgebra& A = *w.algebra();
  Form out(&A, n + 1);
  for (const auto& [key, c] : w.terms()) {
    if (key[0] == 0) continue;  // d(unit) kills every cyclic term
    for (int i = 0; i <= n; ++i) {
      std::vector<int> nk;
      nk.push_back(0);  // head is the unit
      for (int t = i; t <= n; ++t) nk.push_back(key[t]);
      for (int t = 0; t < i; ++t) nk.push_back(key[t]);
      Rational sc = ((static_cast<long>(n) * i) % 2 == 0) ? c : -c;
      out.add_term(nk, sc);
    }
  }
  return out;
}

Form left_multiply(const AlgebraVec& a, const Form& w) {
  const FiniteAlgebra& A = *w.algebra();
  Form out(&A, w.degree());
  for (const auto& [key, c] : w.terms()) {
    AlgebraVec p = A.multiply(a, A.basis_vec(key[0]));
    for (std::size_t k = 0; k < p.size(); ++k) {
      if (p[k] == 0) continue;
      std::vector<int> nk = key;
      nk[0] = static_cast<int>(k);
      out.add_term(nk, c * p[k]);
    }
  }
  return out;
}

Form append_d(const Form& w, std::size_t j) {
  const FiniteAlgebra& A = *w.algebra();
  Form out(&A, w.degree() + 1);
  if (j == 0) return out;
  for (const auto& [key, c] : w.terms()) {
    std::vector<int> nk = key;
    nk.push_back(static_cast<int>(j));
    out.add_term(nk, c);
  }
  return out;
}

Form right_multiply(const Form& w, const AlgebraVec& a) {
  const FiniteAlgebra& A = *w.algebra();
  const int n = w.degree();
  Form out(&A, n);
  if (n == 0) {
    for (const auto& [key, c] : w.terms()) {
      AlgebraVec p = A.multiply(A.basis_vec(key[0]), a);
      for (std::size_t k = 0; k < p.size(); ++k) {
        if (p[k] == 0) continue;
        out.add_term({static_cast<int>(k)}, c * p[k]);
      }
    }
    return out;
  }
  for (const auto& [key, c] : w.terms()) {
    // (w' d x) a = w' d(x a) - (w' x) d(a)
    const int last = key[n];
    Form prefix(&A, n - 1);
    prefix.add_term(std::vector<int>(key.begin(), key.end() - 1), c);

    AlgebraVec xa = A.multiply(A.basis_vec(last), a);
    for (std::size_t k = 1; k < xa.size(); ++k) {
      if (xa[k] == 0) continue;
      out = out + append_d(prefix, k).scale(xa[k]);
    }
    Form wx = right_multiply(prefix, A.basis_vec(last));
    for (std::size_t j = 1; j < a.size(); ++j) {
      if (a[j] == 0) continue;
      out = out - append_d(wx, j).scale(a[j]);
    }
  }
  return out;
}

QuotientMap commutator_quotient(const FiniteAlgebra& alg, int n) {
  FormSpace space{&alg, n};
  const std::size_t dim = space.dim();
  std::vector<std::vector<Rational>> cols;
  for (std::size_t a = 1; a < alg.dim(); ++a) {
    AlgebraVec av = alg.basis_vec(a);
    for (std::size_t w = 0; w < dim; ++w) {
      Form f = space.basis_form(w);
      Form comm = left_multiply(av, f) - right_multiply(f, av);
      if (comm.is_zero()) continue;
      cols.push_back(space.to_vector(comm));
    }
  }
  return quotient_by_columns(SparseMatrix::from_columns(dim, cols));
}

std::size_t commutator_quotient_dim(const FiniteAlgebra& alg, int n, std::size_t cap) {
  FormSpace space{&alg, n};
  if (space.dim() > cap)
    throw std::invalid_argument("commutator_quotient_dim: form space exceeds cap");
  return commutator_quotient(alg, n).dim;
}

std::pair<std::size_t, std::size_t> x_complex_homology(const FiniteAlgebra& alg, int n,
                                                       std::size_t cap) {
  if (n < 0) throw std::invalid_argument("x_complex_homology: n must be >= 0");
  std::vector<FormSpace> spaces;
  for (int k = 0; k <= n; ++k) {
    spaces.push_back(FormSpace{&alg, k});
    if (spaces.back().dim() > cap)
      throw std::invalid_argument("x_complex_homology: form space exceeds cap");
  }
  QuotientMap top = commutator_quotient(alg, n);

  auto layer_dim = [&](int k) { return k == n ? top.dim : spaces[k].dim(); };

  std::vector<int> even_layers, odd_layers;
  for (int k = 0; k <= n; ++k) (k % 2 == 0 ? even_layers : odd_layers).push_back(k);
  auto block_offsets = [&](const std::vector<int>& layers) {
    std::map<int, std::size_t> off;
    std::size_t acc = 0;
    for (int k : layers) {
      off[k] = acc;
      acc += layer_dim(k);
    }
    return std::make_pair(off, acc);
  };
  auto [even_off, even_dim] = block_offsets(even_layers);
  auto [odd_off, odd_dim] = block_offsets(odd_layers);

  // lift of a layer basis vector into Omega^k
  auto lift = [&](int k, std::size_t i) -> Form {
    if (k < n) return spaces[k].basis_form(i);
    std::vector<Rational> coords(top.dim, Rational(0));
    coords[i] = 1;
    std::vector<Rational> amb(spaces[n].dim(), Rational(0));
    for (const auto& [rc, v] : top.section.entries()) amb[rc.first] += v * coords[rc.second];
    return spaces[n].from_vector(amb);
  };
  // coordinates of an Omega^k form in layer k
  auto project = [&](int k, const Form& f) -> std::vector<Rational> {
    std::vector<Rational> amb = spaces[k].to_vector(f);
    if (k < n) return amb;
    std::vector<Rational> out(top.dim, Rational(0));
    for (const auto& [rc, v] : top.projection.entries()) out[rc.first] += v * amb[rc.second];
    return out;
  };

  auto build = [&](const std::vector<int>& from_layers, std::map<int, std::size_t>& from_off,
                   std::map<int, std::size_t>& to_off, std::size_t from_dim,
                   std::size_t to_dim) {
    SparseMatrix m(to_dim, from_dim);
    for (int k : from_layers) {
      for (std::size_t i = 0; i < layer_dim(k); ++i) {
        Form f = lift(k, i);
        if (k >= 1) {
          std::vector<Rational> img = project(k - 1, forms_b(f));
          for (std::size_t r = 0; r < img.size(); ++r)
            if (img[r] != 0) m.add(to_off[k - 1] + r, from_off[k] + i, img[r]);
        }
        if (k < n) {
          std::vector<Rational> img = project(k + 1, forms_B(f));
          for (std::size_t r = 0; r < img.size(); ++r)
            if (img[r] != 0) m.add(to_off[k + 1] + r, from_off[k] + i, img[r]);
        }
      }
    }
    return m;
  };

  SparseMatrix d_eo = build(even_layers, even_off, odd_off, even_dim, odd_dim);
  SparseMatrix d_oe = build(odd_layers, odd_off, even_off, odd_dim, even_dim);

  auto h_even = homology_dim(d_oe, d_eo);
  auto h_odd = homology_dim(d_eo, d_oe);
  if (!h_even.is_complex || !h_odd.is_complex)
    throw std::logic_error("x_complex_homology: differential does not square to zero");
  return {h_even.dim, h_odd.dim};
}

ConnectionReport connection_check(const FiniteAlgebra& alg, int n, const SparseMatrix& nabla,
                                  const SparseMatrix* nabla_upper,
                                  const SparseMatrix* nabla_lower) {
  if (n < 1) throw std::invalid_argument("connection_check: n must be >= 1");
  FormSpace sn{&alg, n}, sn1{&alg, n + 1}, sn2{&alg, n + 2}, sm1{&alg, n - 1};
  if (nabla.rows() != sn1.dim() || nabla.cols() != sn.dim())
    throw std::invalid_argument("connection_check: nabla has wrong dimensions");
  if (nabla_upper && (nabla_upper->rows() != sn2.dim() || nabla_upper->cols() != sn1.dim()))
    throw std::invalid_argument("connection_check: upper map has wrong dimensions");
  if (nabla_lower && (nabla_lower->rows() != sn.dim() || nabla_lower->cols() != sm1.dim()))
    throw std::invalid_argument("connection_check: lower map has wrong dimensions");

  auto apply = [&](const SparseMatrix& m, const FormSpace& from, const FormSpace& to,
                   const Form& f) { return to.from_vector(m.apply(from.to_vector(f))); };

  ConnectionReport rep;

  // (i) nabla(a w) == a nabla(w)
  for (std::size_t a = 1; a < alg.dim() && rep.module_linearity.pass; ++a) {
    AlgebraVec av = alg.basis_vec(a);
    for (std::size_t i = 0; i < sn.dim(); ++i) {
      Form w = sn.basis_form(i);
      Form lhs = apply(nabla, sn, sn1, left_multiply(av, w));
      Form rhs = left_multiply(av, apply(nabla, sn, sn1, w));
      if (!(lhs == rhs)) {
        rep.module_linearity = {false, "a=" + alg.basis_names()[a] +
                                           " w=" + key_to_string(sn.key(i))};
        break;
      }
    }
  }

  // (ii) nabla(w a) == nabla(w) a + (-1)^n w da
  for (std::size_t a = 1; a < alg.dim() && rep.leibniz.pass; ++a) {
    AlgebraVec av = alg.basis_vec(a);
    for (std::size_t i = 0; i < sn.dim(); ++i) {
      Form w = sn.basis_form(i);
      Form lhs = apply(nabla, sn, sn1, right_multiply(w, av));
      Form rhs = right_multiply(apply(nabla, sn, sn1, w), av);
      Form tail = append_d(w, a);
      rhs = (n % 2 == 0) ? rhs + tail : rhs - tail;
      if (!(lhs == rhs)) {
        rep.leibniz = {false,
                       "a=" + alg.basis_names()[a] + " w=" + key_to_string(sn.key(i))};
        break;
      }
    }
  }

  // canonical extension to degree n+1: nabla(w dx) = nabla(w) dx
  auto canonical_upper = [&](std::size_t i) {
    std::vector<int> key = sn1.key(i);
    int x = key.back();
    key.pop_back();
    Form w(&alg, n);
    w.add_term(key, 1);
    return append_d(apply(nabla, sn, sn1, w), static_cast<std::size_t>(x));
  };

  // (iii) a supplied upper map must agree with the canonical extension
  if (nabla_upper) {
    for (std::size_t i = 0; i < sn1.dim(); ++i) {
      Form expect = canonical_upper(i);
      Form got = apply(*nabla_upper, sn1, sn2, sn1.basis_form(i));
      if (!(got == expect)) {
        rep.extension = {false, "w dx=" + key_to_string(sn1.key(i))};
        break;
      }
    }
  }

  auto upper_apply = [&](std::size_t i) {
    return nabla_upper ? apply(*nabla_upper, sn1, sn2, sn1.basis_form(i))
                       : canonical_upper(i);
  };

  // (iv) b nabla + nabla b == id on Omega^n and Omega^(n+1)
  for (std::size_t i = 0; i < sn.dim() && rep.homotopy_identity.pass; ++i) {
    Form w = sn.basis_form(i);
    Form lhs = forms_b(apply(nabla, sn, sn1, w));
    if (nabla_lower) lhs = lhs + apply(*nabla_lower, sm1, sn, forms_b(w));
    if (!(lhs == w)) {
      rep.homotopy_identity = {false, "degree n, w=" + key_to_string(sn.key(i))};
      break;
    }
  }
  for (std::size_t i = 0; i < sn1.dim() && rep.homotopy_identity.pass; ++i) {
    Form eta = sn1.basis_form(i);
    Form lhs = forms_b(upper_apply(i)) + apply(nabla, sn, sn1, forms_b(eta));
    if (!(lhs == eta)) {
      rep.homotopy_identity = {false, "degree n+1, w=" + key_to_string(sn1.key(i))};
      break;
    }
  }
  return rep;
}

std::vector<TowerLevelReport> iwasawa_tower(const TowerSpec& tower, int n, std::size_t cap) {
  std::vector<TowerLevelReport> out;
  std::vector<FiniteAlgebra> algebras;
  std::vector<QuotientMap> quotients;
  std::vector<std::vector<int>> maps;  // element-wise images into previous level

  for (std::size_t lev = 0; lev < tower.levels.size(); ++lev) {
    const Group& g = tower.levels[lev].group;
    if (g.kind() != GroupKind::Finite)
      throw std::invalid_argument("iwasawa_tower: levels must be finite groups");
    TowerLevelReport rep;
    rep.group_spec = g.spec();
    FiniteAlgebra alg = FiniteAlgebra::group_algebra(g);
    rep.algebra_dim = alg.dim();
    QuotientMap q = commutator_quotient(alg, 0);
    rep.quotient_dim = q.dim;
    rep.x_homology = x_complex_homology(alg, n, cap);

    if (lev > 0) {
      rep.has_map = true;
      const Group& prev = tower.levels[lev - 1].group;
      const auto& imgs = tower.levels[lev].generator_images;
      if (imgs.size() != g.generators().size())
        throw std::invalid_argument(
            "iwasawa_tower: generator image count does not match generator list");
      for (int im : imgs)
        if (im < 0 || static_cast<std::size_t>(im) >= prev.order())
          throw std::invalid_argument("iwasawa_tower: generator image out of range");

      // extend the generator images along a BFS spanning tree
      std::vector<int> phi(g.order(), -1);
      phi[0] = 0;
      std::deque<int> queue{0};
      while (!queue.empty()) {
        int cur = queue.front();
        queue.pop_front();
        for (std::size_t gi = 0; gi < g.generators().size(); ++gi) {
          Element next = g.multiply(Element{{static_cast<int32_t>(cur)}}, g.generators()[gi]);
          if (phi[next.v[0]] >= 0) continue;
          Element img = prev.multiply(Element{{phi[cur]}},
                                      Element{{static_cast<int32_t>(imgs[gi])}});
          phi[next.v[0]] = img.v[0];
          queue.push_back(next.v[0]);
        }
      }
      for (std::size_t a = 0; a < g.order(); ++a)
        for (std::size_t b = 0; b < g.order(); ++b) {
          int ab = g.multiply(Element{{static_cast<int32_t>(a)}},
                              Element{{static_cast<int32_t>(b)}})
                       .v[0];
          int im = prev.multiply(Element{{phi[a]}}, Element{{phi[b]}}).v[0];
          if (phi[ab] != im)
            throw std::invalid_argument(
                "iwasawa_tower: generator images do not extend to a homomorphism");
        }
      std::set<int> image(phi.begin(), phi.end());
      rep.map_surjective = image.size() == prev.order();

      // induced map on commutator quotients
      const QuotientMap& qprev = quotients.back();
      SparseMatrix induced(qprev.dim, q.dim);
      for (std::size_t col = 0; col < q.dim; ++col) {
        // section -> algebra map -> projection
        std::vector<Rational> amb(alg.dim(), Rational(0));
        for (const auto& [rc, v] : q.section.entries())
          if (rc.second == col) amb[rc.first] += v;
        std::vector<Rational> mapped(algebras.back().dim(), Rational(0));
        for (std::size_t i = 0; i < amb.size(); ++i)
          if (amb[i] != 0) mapped[phi[i]] += amb[i];
        std::vector<Rational> proj(qprev.dim, Rational(0));
        for (const auto& [rc, v] : qprev.projection.entries())
          proj[rc.first] += v * mapped[rc.second];
        for (std::size_t r = 0; r < proj.size(); ++r)
          if (proj[r] != 0) induced.set(r, col, proj[r]);
      }
      rep.induced_quotient_surjective = rank(induced) == qprev.dim;
      maps.push_back(phi);
    }

    algebras.push_back(std::move(alg));
    quotients.push_back(std::move(q));
    out.push_back(std::move(rep));
  }
  return out;
}

}  // namespace daggerhom
