#include "daggerhom/linalg.hpp"

#include <stdexcept>

namespace daggerhom {

void SparseMatrix::set(std::size_t r, std::size_t c, const Rational& v) {
  if (r >= rows_ || c >= cols_) throw std::out_of_range("SparseMatrix::set");
  if (v == 0)
    entries_.erase({r, c});
  else
    entries_[{r, c}] = v;
}

void SparseMatrix::add(std::size_t r, std::size_t c, const Rational& v) {
  if (v == 0) return;
  if (r >= rows_ || c >= cols_) throw std::out_of_range("SparseMatrix::add");
  auto key = std::make_pair(r, c);
  auto it = entries_.find(key);
  if (it == entries_.end()) {
    entries_.emplace(key, v);
  } else {
    it->second += v;
    if (it->second == 0) entries_.erase(it);
  }
}

Rational SparseMatrix::at(std::size_t r, std::size_t c) const {
  auto it = entries_.find({r, c});
  return it == entries_.end() ? Rational(0) : it->second;
}

std::vector<Rational> SparseMatrix::apply(const std::vector<Rational>& v) const {
  if (v.size() != cols_) throw std::invalid_argument("SparseMatrix::apply: size mismatch");
  std::vector<Rational> out(rows_, Rational(0));
  for (const auto& [rc, val] : entries_) out[rc.first] += val * v[rc.second];
  return out;
}

SparseMatrix SparseMatrix::identity(std::size_t n) {
  SparseMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

SparseMatrix SparseMatrix::from_columns(std::size_t rows,
                                        const std::vector<std::vector<Rational>>& cols) {
  SparseMatrix m(rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (cols[c].size() != rows)
      throw std::invalid_argument("SparseMatrix::from_columns: column size mismatch");
    for (std::size_t r = 0; r < rows; ++r) m.set(r, c, cols[c][r]);
  }
  return m;
}

namespace {

struct Echelon {
  std::vector<std::vector<Integer>> m;   // integer row-echelon form
  std::vector<std::size_t> pivot_cols;   // strictly increasing
  std::size_t cols = 0;
};

// Fraction-free elimination with row pivoting.  Rows are scaled to integers
// first; each update divides exactly by the previous pivot (Bareiss).
Echelon bareiss_echelon(const SparseMatrix& a) {
  Echelon e;
  e.cols = a.cols();
  std::vector<std::vector<Integer>> m(a.rows(), std::vector<Integer>(a.cols(), 0));
  std::vector<Integer> den(a.rows(), 1);
  for (const auto& [rc, val] : a.entries()) {
    Integer d = denominator(val);
    den[rc.first] = lcm(den[rc.first], d);
  }
  for (const auto& [rc, val] : a.entries()) {
    m[rc.first][rc.second] = numerator(val) * (den[rc.first] / denominator(val));
  }

  Integer prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < m.size(); ++c) {
    std::size_t piv = r;
    while (piv < m.size() && m[piv][c] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[r]);
    for (std::size_t i = r + 1; i < m.size(); ++i) {
      for (std::size_t j = c + 1; j < a.cols(); ++j) {
        m[i][j] = (m[r][c] * m[i][j] - m[i][c] * m[r][j]) / prev;
      }
      m[i][c] = 0;
    }
    prev = m[r][c];
    e.pivot_cols.push_back(c);
    ++r;
  }
  m.resize(r);
  e.m = std::move(m);
  return e;
}

}  // namespace

std::size_t rank(const SparseMatrix& m) { return bareiss_echelon(m).pivot_cols.size(); }

std::vector<std::vector<Rational>> kernel_basis(const SparseMatrix& m) {
  Echelon e = bareiss_echelon(m);
  const std::size_t r = e.pivot_cols.size();
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : e.pivot_cols) is_pivot[c] = true;

  std::vector<std::vector<Rational>> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rational> x(m.cols(), Rational(0));
    x[f] = 1;
    for (std::size_t ii = r; ii-- > 0;) {
      const auto& row = e.m[ii];
      const std::size_t pc = e.pivot_cols[ii];
      Rational s(0);
      for (std::size_t j = pc + 1; j < m.cols(); ++j) {
        if (row[j] != 0 && x[j] != 0) s += Rational(row[j]) * x[j];
      }
      x[pc] = -s / Rational(row[pc]);
    }
    basis.push_back(std::move(x));
  }
  return basis;
}

HomologyResult homology_dim(const SparseMatrix& d_in, const SparseMatrix& d_out) {
  if (d_in.rows() != d_out.cols())
    throw std::invalid_argument("homology_dim: d_out and d_in are not composable");
  HomologyResult res;

  // d_out applied to each column of d_in must vanish.
  std::map<std::size_t, std::vector<std::pair<std::size_t, Rational>>> cols;
  for (const auto& [rc, val] : d_in.entries()) cols[rc.second].push_back({rc.first, val});
  std::map<std::size_t, std::vector<std::pair<std::size_t, Rational>>> out_by_col;
  for (const auto& [rc, val] : d_out.entries()) out_by_col[rc.second].push_back({rc.first, val});
  for (const auto& [c, col] : cols) {
    std::map<std::size_t, Rational> image;
    for (const auto& [r, v] : col) {
      auto it = out_by_col.find(r);
      if (it == out_by_col.end()) continue;
      for (const auto& [r2, w] : it->second) image[r2] += w * v;
    }
    for (const auto& [_, v] : image) {
      if (v != 0) {
        res.is_complex = false;
        res.witness_column = c;
        return res;
      }
    }
  }

  std::size_t ker = d_out.cols() - rank(d_out);
  std::size_t im = rank(d_in);
  if (im > ker) throw std::logic_error("homology_dim: rank exceeds kernel on a complex");
  res.dim = ker - im;
  return res;
}

std::optional<std::vector<Rational>> solve_linear(const SparseMatrix& m,
                                                  const std::vector<Rational>& b) {
  if (b.size() != m.rows()) throw std::invalid_argument("solve_linear: size mismatch");
  SparseMatrix aug(m.rows(), m.cols() + 1);
  for (const auto& [rc, v] : m.entries()) aug.set(rc.first, rc.second, v);
  for (std::size_t r = 0; r < b.size(); ++r) aug.set(r, m.cols(), b[r]);

  Echelon e = bareiss_echelon(aug);
  // a pivot in the augmented column means the system is inconsistent
  for (auto c : e.pivot_cols)
    if (c == m.cols()) return std::nullopt;

  std::vector<Rational> x(m.cols(), Rational(0));
  for (std::size_t ii = e.pivot_cols.size(); ii-- > 0;) {
    const auto& row = e.m[ii];
    const std::size_t pc = e.pivot_cols[ii];
    Rational s = Rational(row[m.cols()]);
    for (std::size_t j = pc + 1; j < m.cols(); ++j)
      if (row[j] != 0 && x[j] != 0) s -= Rational(row[j]) * x[j];
    x[pc] = s / Rational(row[pc]);
  }
  return x;
}

QuotientMap quotient_by_columns(const SparseMatrix& relations) {
  const std::size_t dim = relations.rows();

  // Row-reduce the transpose; RREF rows express pivot coordinates of the
  // subspace in terms of free coordinates.
  SparseMatrix t(relations.cols(), dim);
  for (const auto& [rc, val] : relations.entries()) t.set(rc.second, rc.first, val);
  Echelon e = bareiss_echelon(t);
  const std::size_t r = e.pivot_cols.size();

  // Back-eliminate above pivots, then normalize (rational arithmetic).
  std::vector<std::vector<Rational>> rr(r, std::vector<Rational>(dim, Rational(0)));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < dim; ++j) rr[i][j] = Rational(e.m[i][j]);
  for (std::size_t i = r; i-- > 0;) {
    const std::size_t pc = e.pivot_cols[i];
    Rational piv = rr[i][pc];
    for (std::size_t j = pc; j < dim; ++j) rr[i][j] /= piv;
    for (std::size_t k = 0; k < i; ++k) {
      Rational f = rr[k][pc];
      if (f == 0) continue;
      for (std::size_t j = pc; j < dim; ++j) rr[k][j] -= f * rr[i][j];
    }
  }

  std::vector<bool> is_pivot(dim, false);
  for (auto c : e.pivot_cols) is_pivot[c] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t j = 0; j < dim; ++j)
    if (!is_pivot[j]) free_cols.push_back(j);

  QuotientMap q;
  q.dim = free_cols.size();
  q.projection = SparseMatrix(q.dim, dim);
  q.section = SparseMatrix(dim, q.dim);
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    q.projection.set(k, free_cols[k], 1);
    q.section.set(free_cols[k], k, 1);
  }
  // e_{pivot} == -sum_{free j} alpha_j e_j modulo the subspace.
  for (std::size_t i = 0; i < r; ++i) {
    const std::size_t pc = e.pivot_cols[i];
    for (std::size_t k = 0; k < free_cols.size(); ++k) {
      Rational a = rr[i][free_cols[k]];
      if (a != 0) q.projection.set(k, pc, -a);
    }
  }
  return q;
}

}  // namespace daggerhom
