#pragma once

// Sparse exact linear algebra over Q: reduced row echelon form, rank and
// nullspace with deterministic canonical output.

#include <cstddef>
#include <utility>
#include <vector>

#include "svinv/rational.hpp"

namespace svinv {

/// Sparse row: (column, value) pairs sorted by column, no zero values.
using SparseRow = std::vector<std::pair<std::size_t, Rational>>;

/// Sorts by column, sums repeated columns and drops zeros.
void canonicalize(SparseRow& row);

class SparseMatrix {
 public:
  SparseMatrix() = default;
  SparseMatrix(std::size_t n_rows, std::size_t n_cols);

  /// Builds from dense rows (all of equal length); zeros are dropped.
  static SparseMatrix from_dense(const std::vector<std::vector<Rational>>& rows);

  std::size_t n_rows() const { return rows_.size(); }
  std::size_t n_cols() const { return n_cols_; }

  /// Appends a row. Entries may arrive unsorted and with repeated columns;
  /// they are summed and zeros removed. Throws DomainError if a column index
  /// is out of range.
  void add_row(SparseRow row);
  const SparseRow& row(std::size_t i) const { return rows_[i]; }
  const std::vector<SparseRow>& rows() const { return rows_; }

  Rational at(std::size_t r, std::size_t c) const;
  std::vector<std::vector<Rational>> to_dense() const;

  /// Exact product with a dense vector of length n_cols.
  std::vector<Rational> multiply(const std::vector<Rational>& v) const;

  friend bool operator==(const SparseMatrix&, const SparseMatrix&) = default;

 private:
  std::size_t n_cols_ = 0;
  std::vector<SparseRow> rows_;
};

struct RrefResult {
  /// Same shape as the input; pivot rows first (ascending pivot column,
  /// unit pivots), then empty rows.
  SparseMatrix rref;
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_columns;
};

RrefResult rref_rank(const SparseMatrix& m);

/// Basis of {v : m v = 0}. One vector per free column f (ascending): v[f] = 1,
/// v[p] = -rref[p-row][f] on pivot columns, zero elsewhere.
std::vector<std::vector<Rational>> nullspace_basis(const SparseMatrix& m);

/// Sparse variant of `nullspace_basis` returning sparse vectors.
std::vector<SparseRow> nullspace_sparse(const SparseMatrix& m);

/// Incremental row echelon builder. Rows are reduced on insertion against
/// existing pivots; `finish` back-substitutes to the unique reduced form.
class EchelonBuilder {
 public:
  explicit EchelonBuilder(std::size_t n_cols);

  /// Returns true when the row was independent of the rows seen so far.
  bool insert(SparseRow row);
  std::size_t rank() const { return pivot_rows_.size(); }
  std::size_t n_cols() const { return n_cols_; }

  /// Fully reduced pivot rows in ascending pivot-column order.
  std::vector<SparseRow> finish() const;

 private:
  std::size_t n_cols_;
  std::vector<std::ptrdiff_t> pivot_of_col_;
  std::vector<SparseRow> pivot_rows_;
};

/// row += factor * other (both sorted); result sorted without zeros.
SparseRow axpy(const SparseRow& row, const Rational& factor, const SparseRow& other);

}  // namespace svinv
