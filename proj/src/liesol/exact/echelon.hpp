#ifndef LIESOL_EXACT_ECHELON_HPP
#define LIESOL_EXACT_ECHELON_HPP

#include <algorithm>
#include <map>
#include <vector>

#include "liesol/exact/matrix.hpp"
#include "liesol/exact/scalar.hpp"

namespace liesol {

// Sparse row: (column, value) pairs, sorted by column, values nonzero.
template <class K>
using SparseRow = std::vector<std::pair<int, K>>;

template <class K>
SparseRow<K> to_sparse(const std::vector<K>& dense) {
  SparseRow<K> r;
  for (int j = 0; j < int(dense.size()); ++j)
    if (!is_zero(dense[j])) r.emplace_back(j, dense[j]);
  return r;
}

template <class K>
std::vector<K> to_dense(const SparseRow<K>& row, int cols) {
  std::vector<K> d(cols, K(0));
  for (const auto& [c, v] : row) d[c] = v;
  return d;
}

// target -= f * src, both sorted sparse rows.
template <class K>
void sparse_axpy(SparseRow<K>& target, const K& f, const SparseRow<K>& src) {
  SparseRow<K> out;
  out.reserve(target.size() + src.size());
  std::size_t i = 0, j = 0;
  while (i < target.size() || j < src.size()) {
    if (j == src.size() || (i < target.size() && target[i].first < src[j].first)) {
      out.push_back(target[i++]);
    } else if (i == target.size() || src[j].first < target[i].first) {
      K v = -(f * src[j].second);
      if (!is_zero(v)) out.emplace_back(src[j].first, std::move(v));
      ++j;
    } else {
      K v = target[i].second - f * src[j].second;
      if (!is_zero(v)) out.emplace_back(target[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  target = std::move(out);
}

// Incremental row-echelon accumulator over an exact field. Rows are kept
// normalized with leading coefficient 1; finalize() back-substitutes to
// reduced row echelon form, after which kernel extraction and full
// reduction are available.
template <class K>
class EchelonSolver {
public:
  explicit EchelonSolver(int cols) : cols_(cols), pivot_row_(cols, -1) {}

  int cols() const { return cols_; }
  int rank() const { return int(rows_.size()); }

  // Returns true if the row increased the rank.
  bool add_row(SparseRow<K> row) {
    reduced_ = false;
    while (!row.empty()) {
      int lead = row.front().first;
      int pr = pivot_row_[lead];
      if (pr < 0) {
        K inv = K(1) / row.front().second;
        for (auto& [c, v] : row) v = v * inv;
        pivot_row_[lead] = int(rows_.size());
        pivot_cols_.push_back(lead);
        rows_.push_back(std::move(row));
        return true;
      }
      K f = row.front().second;
      sparse_axpy(row, f, rows_[pr]);
    }
    return false;
  }

  bool add_row(const std::vector<K>& dense) { return add_row(to_sparse(dense)); }

  // Back-substitute so every pivot column appears in exactly one row.
  void finalize() {
    if (reduced_) return;
    std::vector<int> order(rows_.size());
    for (std::size_t i = 0; i < rows_.size(); ++i) order[i] = int(i);
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return rows_[a].front().first < rows_[b].front().first; });
    for (int pos = int(order.size()) - 1; pos >= 0; --pos) {
      int ri = order[pos];
      int pcol = rows_[ri].front().first;
      for (int qos = pos - 1; qos >= 0; --qos) {
        int rj = order[qos];
        auto& row = rows_[rj];
        auto it = std::lower_bound(row.begin(), row.end(), pcol,
                                   [](const std::pair<int, K>& t, int c) { return t.first < c; });
        if (it != row.end() && it->first == pcol) {
          K f = it->second;
          sparse_axpy(row, f, rows_[ri]);
        }
      }
    }
    // Store rows sorted by pivot column for deterministic output.
    std::vector<SparseRow<K>> sorted;
    sorted.reserve(rows_.size());
    for (int idx : order) sorted.push_back(std::move(rows_[idx]));
    rows_ = std::move(sorted);
    std::sort(pivot_cols_.begin(), pivot_cols_.end());
    for (std::size_t i = 0; i < rows_.size(); ++i) pivot_row_[rows_[i].front().first] = int(i);
    reduced_ = true;
  }

  // Fully reduce a row against the basis; requires finalize().
  SparseRow<K> reduce(SparseRow<K> row) const {
    if (!reduced_) throw InvalidError("EchelonSolver::reduce called before finalize");
    SparseRow<K> acc;
    while (!row.empty()) {
      int lead = row.front().first;
      int pr = pivot_row_[lead];
      if (pr < 0) {
        acc.push_back(row.front());
        row.erase(row.begin());
        continue;
      }
      K f = row.front().second;
      sparse_axpy(row, f, rows_[pr]);
    }
    return acc;
  }

  bool contains(const SparseRow<K>& row) const { return reduce(row).empty(); }
  bool contains(const std::vector<K>& dense) const { return contains(to_sparse(dense)); }

  const std::vector<int>& pivot_cols() const { return pivot_cols_; }

  std::vector<int> free_cols() const {
    std::vector<int> f;
    for (int c = 0; c < cols_; ++c)
      if (pivot_row_[c] < 0) f.push_back(c);
    return f;
  }

  // Basis of {x : Rx = 0} where R is the accumulated row space.
  // One vector per free column, in column order (deterministic).
  std::vector<std::vector<K>> kernel_basis() {
    finalize();
    std::vector<std::vector<K>> basis;
    for (int f : free_cols()) {
      std::vector<K> v(cols_, K(0));
      v[f] = K(1);
      for (const auto& row : rows_) {
        auto it = std::lower_bound(row.begin(), row.end(), f,
                                   [](const std::pair<int, K>& t, int c) { return t.first < c; });
        if (it != row.end() && it->first == f) v[row.front().first] = -it->second;
      }
      basis.push_back(std::move(v));
    }
    return basis;
  }

  // Reduced row echelon basis of the accumulated row space, densified.
  std::vector<std::vector<K>> row_basis_dense() {
    finalize();
    std::vector<std::vector<K>> out;
    out.reserve(rows_.size());
    for (const auto& r : rows_) out.push_back(to_dense(r, cols_));
    return out;
  }

  const std::vector<SparseRow<K>>& rows() const { return rows_; }

private:
  int cols_;
  bool reduced_ = false;
  std::vector<SparseRow<K>> rows_;
  std::vector<int> pivot_row_;
  std::vector<int> pivot_cols_;
};

template <class K>
std::vector<std::vector<K>> kernel_basis(const Matrix<K>& m) {
  EchelonSolver<K> solver(m.cols());
  for (int i = 0; i < m.rows(); ++i) solver.add_row(m.row_vector(i));
  return solver.kernel_basis();
}

template <class K>
int rank(const Matrix<K>& m) {
  EchelonSolver<K> solver(m.cols());
  for (int i = 0; i < m.rows(); ++i) solver.add_row(m.row_vector(i));
  return solver.rank();
}

// Indices of a lexicographically-first maximal independent subset of rows.
template <class K>
std::vector<int> row_basis_indices(const std::vector<std::vector<K>>& rows, int cols) {
  EchelonSolver<K> solver(cols);
  std::vector<int> keep;
  for (int i = 0; i < int(rows.size()); ++i)
    if (solver.add_row(rows[i])) keep.push_back(i);
  return keep;
}

}  // namespace liesol

#endif
