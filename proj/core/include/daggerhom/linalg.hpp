#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "daggerhom/scalar.hpp"

namespace daggerhom {

// Exact sparse matrix over the fraction field.  No stored zero entries.
class SparseMatrix {
 public:
  SparseMatrix() : rows_(0), cols_(0) {}
  SparseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  void set(std::size_t r, std::size_t c, const Rational& v);
  void add(std::size_t r, std::size_t c, const Rational& v);
  Rational at(std::size_t r, std::size_t c) const;
  std::size_t nnz() const { return entries_.size(); }

  const std::map<std::pair<std::size_t, std::size_t>, Rational>& entries() const {
    return entries_;
  }

  std::vector<Rational> apply(const std::vector<Rational>& v) const;

  static SparseMatrix identity(std::size_t n);
  // Columns stacked left to right.
  static SparseMatrix from_columns(std::size_t rows,
                                   const std::vector<std::vector<Rational>>& cols);

 private:
  std::size_t rows_, cols_;
  std::map<std::pair<std::size_t, std::size_t>, Rational> entries_;
};

// Exact rank via fraction-free (Bareiss) elimination on integer-scaled rows.
std::size_t rank(const SparseMatrix& m);

// Exact kernel basis; rank(m) + kernel_basis(m).size() == cols(m).
std::vector<std::vector<Rational>> kernel_basis(const SparseMatrix& m);

struct HomologyResult {
  std::size_t dim = 0;
  bool is_complex = true;
  // A column of d_in whose image under d_out is nonzero, when is_complex fails.
  std::optional<std::size_t> witness_column;
};

// Homology dim ker(d_out) - rank(d_in) of  .. --d_in--> V --d_out--> ..
// Requires d_out * d_in == 0; reports a witness column otherwise.
HomologyResult homology_dim(const SparseMatrix& d_in, const SparseMatrix& d_out);

// One exact solution of m x = b, or empty when the system is inconsistent.
std::optional<std::vector<Rational>> solve_linear(const SparseMatrix& m,
                                                  const std::vector<Rational>& b);

// Coordinates for the quotient of F^dim by the column span of `relations`:
// a (q x dim) projection matrix and a (dim x q) section with proj*sect = id.
struct QuotientMap {
  std::size_t dim = 0;       // quotient dimension q
  SparseMatrix projection;   // q x dim
  SparseMatrix section;      // dim x q
};
QuotientMap quotient_by_columns(const SparseMatrix& relations);

}  // namespace daggerhom
