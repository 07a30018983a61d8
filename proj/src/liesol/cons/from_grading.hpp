#ifndef LIESOL_CONS_FROM_GRADING_HPP
#define LIESOL_CONS_FROM_GRADING_HPP

#include <utility>
#include <vector>

#include "liesol/cons/build.hpp"
#include "liesol/nik/grading.hpp"
#include "liesol/nik/nik.hpp"

namespace liesol {

template <class K>
struct GradedExtensionResult {
  DoubleExtensionData<K> data;
  LieAlgebra<K> extension;   // the rebuilt double extension q
  Metric<K> extension_metric;
  Matrix<K> zeta;            // isometric isomorphism g -> q, verified
};

// Decomposes (g, G) as a double extension h + d + h* along the grading of a
// derivation N in Der cap co with nonnegative rational eigenvalues, N
// nonzero and singular; h = ker N carries the zero form. The returned zeta
// is verified to be an isometric Lie algebra isomorphism.
template <class K>
GradedExtensionResult<K> double_extension_from_grading(const LieAlgebra<K>& alg,
                                                       const Metric<K>& g,
                                                       const Matrix<K>& n_matrix) {
  int n = alg.dim();
  if (!g.nondegenerate() || !is_adinvariant(alg, g))
    throw InvalidError("double_extension_from_grading: metric must be nondegenerate ad-invariant");
  if (!is_derivation(alg, n_matrix))
    throw InvalidError("double_extension_from_grading: N is not a derivation");
  if (!co_constant(n_matrix, g))
    throw InvalidError("double_extension_from_grading: N is not conformal");
  if (n_matrix.is_zero_matrix())
    throw InvalidError("double_extension_from_grading: N must be nonzero");

  Grading<K> grading = grading_from_derivation(alg, n_matrix, &g);
  for (const auto& [w, part] : grading.parts)
    if (w < 0)
      throw InvalidError("double_extension_from_grading: N has a negative eigenvalue");
  const Subspace<K>* b0 = grading.part(0);
  if (!b0 || b0->dim() == 0)
    throw InvalidError("double_extension_from_grading: N must be singular (ker N != 0)");
  long l = grading.l.value();
  const Subspace<K>* bl = grading.part(l);
  if (!bl || bl->dim() != b0->dim())
    throw CertificateError("double_extension_from_grading: top part does not match ker N");

  int m = b0->dim();
  std::vector<std::vector<K>> section;  // bases of b_t for 0 < t < l, in weight order
  for (const auto& [w, part] : grading.parts)
    if (w > 0 && w < l)
      for (const auto& v : part.basis()) section.push_back(v);
  int p = int(section.size());
  if (m + p + m != n)
    throw CertificateError("double_extension_from_grading: weights do not span [0, l]");

  // Full eigenbasis coordinates: columns = (h | section | b_l).
  Matrix<K> basis_matrix(n, m + p + m);
  for (int a = 0; a < m; ++a)
    for (int r = 0; r < n; ++r) basis_matrix(r, a) = b0->basis()[a][r];
  for (int x = 0; x < p; ++x)
    for (int r = 0; r < n; ++r) basis_matrix(r, m + x) = section[x][r];
  for (int a = 0; a < m; ++a)
    for (int r = 0; r < n; ++r) basis_matrix(r, m + p + a) = bl->basis()[a][r];
  Matrix<K> to_eigen = inverse(basis_matrix);  // eigenbasis coordinates of a vector

  // h as a subalgebra (echelon basis of b_0).
  LieAlgebra<K> h = subalgebra(alg, *b0);

  // d = (+)_{0<t<l} b_t with the bracket projected along b_l, and the
  // restricted metric.
  auto eigen_coords = [&](const std::vector<K>& v) { return to_eigen.apply(v); };
  std::vector<BracketTerm<K>> d_terms;
  for (int x = 0; x < p; ++x)
    for (int y = x + 1; y < p; ++y) {
      std::vector<K> co = eigen_coords(alg.bracket(section[x], section[y]));
      for (int a = 0; a < m; ++a)
        if (!is_zero(co[a]))
          throw CertificateError("double_extension_from_grading: bracket of n leaves n");
      for (int u = 0; u < p; ++u)
        if (!is_zero(co[m + u])) d_terms.push_back({x + 1, y + 1, u + 1, co[m + u]});
    }
  LieAlgebra<K> d = LieAlgebra<K>::create(p, std::move(d_terms));
  Matrix<K> gd(p, p);
  for (int x = 0; x < p; ++x)
    for (int y = 0; y < p; ++y) gd(x, y) = g.pair(section[x], section[y]);
  Metric<K> g_d(std::move(gd));
  if (p > 0 && !g_d.nondegenerate())
    throw CertificateError("double_extension_from_grading: induced metric on d is degenerate");

  // pi(H_a): projected adjoint action on the section coordinates.
  std::vector<Matrix<K>> pi;
  for (int a = 0; a < m; ++a) {
    Matrix<K> pa(p, p);
    for (int x = 0; x < p; ++x) {
      std::vector<K> co = eigen_coords(alg.bracket(b0->basis()[a], section[x]));
      for (int u = 0; u < p; ++u) pa(u, x) = co[m + u];
    }
    pi.push_back(std::move(pa));
  }

  DoubleExtensionData<K> data{std::move(d), std::move(g_d), std::move(h), std::move(pi),
                              BilinearForm<K>::zero(m)};
  auto [q, q_metric] = double_extension(data);

  // zeta: h-part, section coordinates, and eta(x) = g(x, .) restricted to h.
  Matrix<K> zeta(m + p + m, n);
  for (int col = 0; col < n; ++col) {
    std::vector<K> co = to_eigen.col_vector(col);  // eigen coordinates of e_{col+1}
    for (int a = 0; a < m; ++a) zeta(a, col) = co[a];
    for (int x = 0; x < p; ++x) zeta(m + x, col) = co[m + x];
    // b_l component, mapped through eta.
    std::vector<K> bl_component(n, K(0));
    for (int a = 0; a < m; ++a)
      for (int r = 0; r < n; ++r) bl_component[r] += co[m + p + a] * bl->basis()[a][r];
    for (int a = 0; a < m; ++a) zeta(m + p + a, col) = g.pair(bl_component, b0->basis()[a]);
  }

  // Verify zeta is an isometric isomorphism.
  if (zeta.transposed() * q_metric.matrix() * zeta != g.matrix())
    throw CertificateError("double_extension_from_grading: zeta is not an isometry");
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      std::vector<K> lhs = zeta.apply(alg.bracket_basis(i, j));
      std::vector<K> rhs = q.bracket(zeta.col_vector(i - 1), zeta.col_vector(j - 1));
      if (lhs != rhs)
        throw CertificateError("double_extension_from_grading: zeta is not a homomorphism");
    }

  return {std::move(data), std::move(q), std::move(q_metric), std::move(zeta)};
}

}  // namespace liesol

#endif
