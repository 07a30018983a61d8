#ifndef LIESOL_NIK_GRADING_HPP
#define LIESOL_NIK_GRADING_HPP

#include <optional>
#include <vector>

#include "liesol/exact/poly.hpp"
#include "liesol/lie/analysis.hpp"
#include "liesol/metric/metric.hpp"

namespace liesol {

// Weight decomposition g = (+) b_w with [b_v, b_w] in b_{v+w}; weights are
// integers (cleared denominators). When a metric is attached, l is the
// co-compatibility constant: b_v and b_w are orthogonal unless v + w = l.
template <class K>
struct Grading {
  std::vector<std::pair<long, Subspace<K>>> parts;  // sorted by weight
  std::optional<long> l;

  const Subspace<K>* part(long w) const {
    for (const auto& [v, s] : parts)
      if (v == w) return &s;
    return nullptr;
  }
};

// Builds the grading from the eigenspaces of a diagonalizable derivation
// with rational eigenvalues. Weights are scaled to coprime integers. The
// grading law is re-verified; with a metric, the single co-constant l is
// verified as well.
template <class K>
Grading<K> grading_from_derivation(const LieAlgebra<K>& alg, const Matrix<K>& n_matrix,
                                   const Metric<K>* g = nullptr) {
  int n = alg.dim();
  if (!is_derivation(alg, n_matrix))
    throw InvalidError("grading_from_derivation: matrix is not a derivation");
  RationalRoots roots = rational_eigenvalues(n_matrix);
  if (!roots.split)
    throw UnsupportedError(
        "grading_from_derivation: characteristic polynomial does not split over the rationals");

  // Clear denominators, then divide by the gcd of the numerators.
  Integer den_lcm(1), num_gcd(0);
  for (const auto& [lambda, mult] : roots.roots)
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), lambda.get_den().get_mpz_t());
  std::vector<std::pair<long, int>> scaled;
  for (const auto& [lambda, mult] : roots.roots) {
    Rational s = lambda * Rational(den_lcm);
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), s.get_num().get_mpz_t());
  }
  if (num_gcd == 0) num_gcd = 1;

  Grading<K> grading;
  int total = 0;
  for (const auto& [lambda, mult] : roots.roots) {
    Rational w = lambda * Rational(den_lcm) / Rational(num_gcd);
    long weight = w.get_num().get_si();
    Matrix<K> shifted = n_matrix;
    K lk = FieldTraits<K>::from_rational(lambda);
    for (int i = 0; i < n; ++i) shifted(i, i) -= lk;
    Subspace<K> eigenspace = Subspace<K>::span(n, kernel_basis(shifted));
    if (eigenspace.dim() != mult)
      throw UnsupportedError("grading_from_derivation: derivation is not diagonalizable");
    total += eigenspace.dim();
    grading.parts.emplace_back(weight, std::move(eigenspace));
  }
  if (total != n)
    throw UnsupportedError("grading_from_derivation: derivation is not diagonalizable");
  std::sort(grading.parts.begin(), grading.parts.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });

  // Grading law.
  for (const auto& [v, bv] : grading.parts)
    for (const auto& [w, bw] : grading.parts) {
      const Subspace<K>* target = grading.part(v + w);
      for (const auto& x : bv.basis())
        for (const auto& y : bw.basis()) {
          std::vector<K> br = alg.bracket(x, y);
          bool zero = true;
          for (const K& c : br)
            if (!is_zero(c)) zero = false;
          if (zero) continue;
          if (!target || !target->contains(br))
            throw CertificateError("grading_from_derivation: grading law violated");
        }
    }

  if (g) {
    std::optional<long> l;
    for (const auto& [v, bv] : grading.parts)
      for (const auto& [w, bw] : grading.parts) {
        bool pairs_nontrivially = false;
        for (const auto& x : bv.basis())
          for (const auto& y : bw.basis())
            if (!is_zero(g->pair(x, y))) pairs_nontrivially = true;
        if (!pairs_nontrivially) continue;
        if (l && *l != v + w)
          throw CertificateError(
              "grading_from_derivation: metric pairs weights with different sums");
        l = v + w;
      }
    if (!l) l = 0;  // zero algebra or degenerate metric; nondegenerate metrics always pair
    grading.l = l;
  }
  return grading;
}

}  // namespace liesol

#endif
