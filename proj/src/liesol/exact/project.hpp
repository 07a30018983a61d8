#ifndef LIESOL_EXACT_PROJECT_HPP
#define LIESOL_EXACT_PROJECT_HPP

#include <vector>

#include "liesol/exact/echelon.hpp"
#include "liesol/exact/matrix.hpp"

namespace liesol {

// Unique lambda with F.lambda = 0 and (lambda - v) orthogonal to ker F
// under <x,y>_D = sum d_i x_i y_i:
//   H = -(F D^-1 F^T)^-1 F v,   lambda = v + D^-1 F^T H.
// F must have full row rank (select a row basis first) and all weights must
// be positive.
inline std::vector<Rational> project_onto_kernel(const std::vector<Rational>& v,
                                                 const Matrix<Rational>& f,
                                                 const std::vector<Rational>& weights) {
  int r = f.rows(), n = f.cols();
  if (int(v.size()) != n || int(weights.size()) != n)
    throw InvalidError("project_onto_kernel: dimension mismatch");
  for (const Rational& w : weights)
    if (!is_positive(w)) throw InvalidError("project_onto_kernel: weights must be positive");
  if (r == 0) return v;

  Matrix<Rational> fdft(r, r);  // F D^-1 F^T
  for (int a = 0; a < r; ++a)
    for (int b = 0; b < r; ++b) {
      Rational s(0);
      for (int j = 0; j < n; ++j)
        if (!is_zero(f(a, j)) && !is_zero(f(b, j))) s += f(a, j) * f(b, j) / weights[j];
      fdft(a, b) = s;
    }
  Matrix<Rational> inv;
  if (!try_inverse(fdft, &inv))
    throw CertificateError("project_onto_kernel: F D^-1 F^T singular (F not of full row rank)");

  std::vector<Rational> fv(r, Rational(0));
  for (int a = 0; a < r; ++a)
    for (int j = 0; j < n; ++j)
      if (!is_zero(f(a, j))) fv[a] += f(a, j) * v[j];
  std::vector<Rational> h = inv.apply(fv);
  for (Rational& x : h) x = -x;

  std::vector<Rational> lambda = v;
  for (int j = 0; j < n; ++j) {
    Rational s(0);
    for (int a = 0; a < r; ++a)
      if (!is_zero(f(a, j))) s += f(a, j) * h[a];
    lambda[j] += s / weights[j];
  }
  return lambda;
}

inline std::vector<Rational> project_onto_kernel(const std::vector<Rational>& v,
                                                 const Matrix<Rational>& f) {
  return project_onto_kernel(v, f, std::vector<Rational>(f.cols(), Rational(1)));
}

// Select a lexicographically-first row basis of the given rows and pack it
// into a full-row-rank matrix.
inline Matrix<Rational> select_row_basis(const std::vector<std::vector<Rational>>& rows, int cols) {
  std::vector<int> keep = row_basis_indices(rows, cols);
  Matrix<Rational> f(int(keep.size()), cols);
  for (int a = 0; a < int(keep.size()); ++a)
    for (int j = 0; j < cols; ++j) f(a, j) = rows[keep[a]][j];
  return f;
}

}  // namespace liesol

#endif
