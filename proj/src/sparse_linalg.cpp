#include "svinv/sparse_linalg.hpp"

#include <algorithm>

#include "svinv/errors.hpp"

namespace svinv {

void canonicalize(SparseRow& row) {
  std::sort(row.begin(), row.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  SparseRow merged;
  merged.reserve(row.size());
  for (auto& [c, v] : row) {
    if (!merged.empty() && merged.back().first == c) {
      merged.back().second += v;
    } else {
      merged.emplace_back(c, std::move(v));
    }
  }
  std::erase_if(merged, [](const auto& e) { return e.second.is_zero(); });
  row = std::move(merged);
}

SparseMatrix::SparseMatrix(std::size_t n_rows, std::size_t n_cols)
    : n_cols_(n_cols), rows_(n_rows) {}

SparseMatrix SparseMatrix::from_dense(const std::vector<std::vector<Rational>>& rows) {
  SparseMatrix m(0, rows.empty() ? 0 : rows.front().size());
  for (const auto& r : rows) {
    if (r.size() != m.n_cols_) throw DomainError("ragged dense matrix");
    SparseRow sr;
    for (std::size_t c = 0; c < r.size(); ++c) {
      if (!r[c].is_zero()) sr.emplace_back(c, r[c]);
    }
    m.rows_.push_back(std::move(sr));
  }
  return m;
}

void SparseMatrix::add_row(SparseRow row) {
  for (const auto& e : row) {
    if (e.first >= n_cols_) throw DomainError("column index out of range");
  }
  canonicalize(row);
  rows_.push_back(std::move(row));
}

Rational SparseMatrix::at(std::size_t r, std::size_t c) const {
  const auto& row = rows_.at(r);
  auto it = std::lower_bound(row.begin(), row.end(), c,
                             [](const auto& e, std::size_t col) { return e.first < col; });
  return (it != row.end() && it->first == c) ? it->second : Rational(0);
}

std::vector<std::vector<Rational>> SparseMatrix::to_dense() const {
  std::vector<std::vector<Rational>> out(rows_.size(), std::vector<Rational>(n_cols_));
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    for (const auto& [c, v] : rows_[r]) out[r][c] = v;
  }
  return out;
}

std::vector<Rational> SparseMatrix::multiply(const std::vector<Rational>& v) const {
  if (v.size() != n_cols_) throw DomainError("vector length mismatch");
  std::vector<Rational> out(rows_.size());
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    for (const auto& [c, x] : rows_[r]) out[r] += x * v[c];
  }
  return out;
}

SparseRow axpy(const SparseRow& row, const Rational& factor, const SparseRow& other) {
  SparseRow out;
  out.reserve(row.size() + other.size());
  auto a = row.begin();
  auto b = other.begin();
  while (a != row.end() || b != other.end()) {
    if (b == other.end() || (a != row.end() && a->first < b->first)) {
      out.push_back(*a++);
    } else if (a == row.end() || b->first < a->first) {
      out.emplace_back(b->first, factor * b->second);
      ++b;
    } else {
      Rational v = a->second + factor * b->second;
      if (!v.is_zero()) out.emplace_back(a->first, std::move(v));
      ++a;
      ++b;
    }
  }
  return out;
}

EchelonBuilder::EchelonBuilder(std::size_t n_cols) : n_cols_(n_cols), pivot_of_col_(n_cols, -1) {}

bool EchelonBuilder::insert(SparseRow row) {
  while (!row.empty()) {
    const std::ptrdiff_t p = pivot_of_col_[row.front().first];
    if (p < 0) break;
    const Rational factor = -row.front().second;
    row = axpy(row, factor, pivot_rows_[static_cast<std::size_t>(p)]);
  }
  if (row.empty()) return false;
  const Rational inv = Rational(1) / row.front().second;
  for (auto& e : row) e.second *= inv;
  pivot_of_col_[row.front().first] = static_cast<std::ptrdiff_t>(pivot_rows_.size());
  pivot_rows_.push_back(std::move(row));
  return true;
}

std::vector<SparseRow> EchelonBuilder::finish() const {
  std::vector<std::size_t> order(pivot_rows_.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return pivot_rows_[a].front().first < pivot_rows_[b].front().first;
  });

  // Back substitution from the last pivot column: every row reduced before
  // row i carries no pivot column except its own.
  std::vector<SparseRow> reduced(pivot_rows_.size());
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const SparseRow& src = pivot_rows_[*it];
    SparseRow out = src;
    for (std::size_t k = 1; k < src.size(); ++k) {
      const auto [c, v] = src[k];
      const std::ptrdiff_t p = pivot_of_col_[c];
      if (p < 0) continue;
      out = axpy(out, -v, reduced[static_cast<std::size_t>(p)]);
    }
    reduced[*it] = std::move(out);
  }

  std::vector<SparseRow> sorted;
  sorted.reserve(order.size());
  for (std::size_t i : order) sorted.push_back(std::move(reduced[i]));
  return sorted;
}

RrefResult rref_rank(const SparseMatrix& m) {
  EchelonBuilder eb(m.n_cols());
  for (const auto& r : m.rows()) eb.insert(r);
  RrefResult out;
  out.rank = eb.rank();
  out.rref = SparseMatrix(0, m.n_cols());
  for (auto& r : eb.finish()) {
    out.pivot_columns.push_back(r.front().first);
    out.rref.add_row(std::move(r));
  }
  while (out.rref.n_rows() < m.n_rows()) out.rref.add_row({});
  return out;
}

std::vector<SparseRow> nullspace_sparse(const SparseMatrix& m) {
  EchelonBuilder eb(m.n_cols());
  for (const auto& r : m.rows()) eb.insert(r);
  const std::vector<SparseRow> rref = eb.finish();

  std::vector<std::ptrdiff_t> row_of_pivot(m.n_cols(), -1);
  for (std::size_t i = 0; i < rref.size(); ++i) {
    row_of_pivot[rref[i].front().first] = static_cast<std::ptrdiff_t>(i);
  }
  // Column view of the non-pivot entries: free column -> (pivot col, value).
  std::vector<std::vector<std::pair<std::size_t, Rational>>> by_free(m.n_cols());
  for (const auto& r : rref) {
    const std::size_t pc = r.front().first;
    for (std::size_t k = 1; k < r.size(); ++k) by_free[r[k].first].emplace_back(pc, -r[k].second);
  }

  std::vector<SparseRow> basis;
  for (std::size_t f = 0; f < m.n_cols(); ++f) {
    if (row_of_pivot[f] >= 0) continue;
    SparseRow v = std::move(by_free[f]);
    v.emplace_back(f, Rational(1));
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<std::vector<Rational>> nullspace_basis(const SparseMatrix& m) {
  std::vector<std::vector<Rational>> out;
  for (const auto& v : nullspace_sparse(m)) {
    std::vector<Rational> dense(m.n_cols());
    for (const auto& [c, x] : v) dense[c] = x;
    out.push_back(std::move(dense));
  }
  return out;
}

}  // namespace svinv
