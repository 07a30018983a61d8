#ifndef LIESOL_LIE_SUBSPACE_HPP
#define LIESOL_LIE_SUBSPACE_HPP

#include <vector>

#include "liesol/exact/echelon.hpp"

namespace liesol {

// Subspace of K^n stored as a reduced row echelon basis, so equality and
// containment are canonical comparisons.
template <class K>
class Subspace {
public:
  Subspace() = default;
  explicit Subspace(int ambient) : ambient_(ambient) {}

  static Subspace span(int ambient, const std::vector<std::vector<K>>& vectors) {
    EchelonSolver<K> solver(ambient);
    for (const auto& v : vectors) solver.add_row(v);
    Subspace s(ambient);
    s.basis_ = solver.row_basis_dense();
    return s;
  }

  static Subspace full(int ambient) {
    std::vector<std::vector<K>> vecs;
    for (int i = 0; i < ambient; ++i) {
      std::vector<K> v(ambient, K(0));
      v[i] = K(1);
      vecs.push_back(std::move(v));
    }
    return span(ambient, vecs);
  }

  int ambient() const { return ambient_; }
  int dim() const { return int(basis_.size()); }
  const std::vector<std::vector<K>>& basis() const { return basis_; }

  bool contains(const std::vector<K>& v) const {
    EchelonSolver<K> solver(ambient_);
    for (const auto& b : basis_) solver.add_row(b);
    return !solver.add_row(v);
  }

  bool contains(const Subspace& other) const {
    for (const auto& b : other.basis_)
      if (!contains(b)) return false;
    return true;
  }

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }

  Subspace sum(const Subspace& other) const {
    std::vector<std::vector<K>> all = basis_;
    all.insert(all.end(), other.basis_.begin(), other.basis_.end());
    return span(ambient_, all);
  }

  // Annihilator under the standard dual pairing: {x : <b, x> = 0 for all b}.
  Subspace annihilator() const {
    EchelonSolver<K> solver(ambient_);
    for (const auto& b : basis_) solver.add_row(b);
    return span(ambient_, solver.kernel_basis());
  }

  Subspace intersect(const Subspace& other) const {
    return annihilator().sum(other.annihilator()).annihilator();
  }

  bool is_trivial() const { return basis_.empty(); }

  // Pivot columns of the echelon basis (0-based).
  std::vector<int> pivot_cols() const {
    std::vector<int> p;
    for (const auto& row : basis_) {
      for (int c = 0; c < ambient_; ++c)
        if (!is_zero(row[c])) {
          p.push_back(c);
          break;
        }
    }
    return p;
  }

private:
  int ambient_ = 0;
  std::vector<std::vector<K>> basis_;
};

}  // namespace liesol

#endif
