#ifndef LIESOL_LIE_MAPSPACE_HPP
#define LIESOL_LIE_MAPSPACE_HPP

#include <vector>

#include "liesol/exact/echelon.hpp"
#include "liesol/exact/matrix.hpp"

namespace liesol {

// A linear space of matrices (endomorphisms, or maps between two coordinate
// spaces) spanned by a basis. The basis is canonicalized to reduced row
// echelon form of the flattened matrices, so bases are deterministic and
// space equality is a direct comparison.
template <class K>
class MapSpace {
public:
  MapSpace() = default;
  MapSpace(int domain_dim, int codomain_dim)
      : domain_(domain_dim), codomain_(codomain_dim) {}

  static MapSpace span(int domain_dim, int codomain_dim, const std::vector<Matrix<K>>& mats) {
    MapSpace s(domain_dim, codomain_dim);
    EchelonSolver<K> solver(codomain_dim * domain_dim);
    for (const auto& m : mats) solver.add_row(m.flat());
    for (auto& row : solver.row_basis_dense()) s.basis_.push_back(unflatten(row, codomain_dim, domain_dim));
    return s;
  }

  // Build directly from already-canonical kernel vectors (flattened row-major
  // codomain x domain matrices).
  static MapSpace from_flat(int domain_dim, int codomain_dim,
                            const std::vector<std::vector<K>>& flats) {
    MapSpace s(domain_dim, codomain_dim);
    for (const auto& f : flats) s.basis_.push_back(unflatten(f, codomain_dim, domain_dim));
    return s;
  }

  int domain_dim() const { return domain_; }
  int codomain_dim() const { return codomain_; }
  int dim() const { return int(basis_.size()); }
  const std::vector<Matrix<K>>& basis() const { return basis_; }

  bool contains(const Matrix<K>& m) const {
    EchelonSolver<K> solver(codomain_ * domain_);
    for (const auto& b : basis_) solver.add_row(b.flat());
    return !solver.add_row(m.flat());
  }

  bool contains(const MapSpace& other) const {
    EchelonSolver<K> solver(codomain_ * domain_);
    for (const auto& b : basis_) solver.add_row(b.flat());
    for (const auto& m : other.basis_)
      if (solver.add_row(m.flat())) return false;
    return true;
  }

  bool same_span(const MapSpace& other) const {
    return dim() == other.dim() && contains(other);
  }

  static Matrix<K> unflatten(const std::vector<K>& flat, int rows, int cols) {
    Matrix<K> m(rows, cols);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) m(i, j) = flat[std::size_t(i) * cols + j];
    return m;
  }

private:
  int domain_ = 0, codomain_ = 0;
  std::vector<Matrix<K>> basis_;
};

}  // namespace liesol

#endif
