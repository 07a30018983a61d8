#ifndef LIESOL_METRIC_METRIC_HPP
#define LIESOL_METRIC_METRIC_HPP

#include <optional>
#include <string>
#include <vector>

#include "liesol/exact/echelon.hpp"
#include "liesol/exact/matrix.hpp"
#include "liesol/lie/algebra.hpp"

namespace liesol {

// Symmetric bilinear form in matrix form. Nondegeneracy is computed once at
// construction; ad-invariance depends on the algebra and is checked by
// check_adinvariant.
template <class K>
class BilinearForm {
public:
  using value_type = K;

  BilinearForm() = default;
  explicit BilinearForm(Matrix<K> g) : g_(std::move(g)) {
    if (g_.rows() != g_.cols()) throw InvalidError("metric matrix must be square");
    if (g_ != g_.transposed()) throw InvalidError("metric matrix must be symmetric");
    nondegenerate_ = (rank(g_) == g_.rows());
  }

  static BilinearForm zero(int n) { return BilinearForm(Matrix<K>(n, n)); }
  static BilinearForm identity(int n) { return BilinearForm(Matrix<K>::identity(n)); }

  const Matrix<K>& matrix() const { return g_; }
  int dim() const { return g_.rows(); }
  bool nondegenerate() const { return nondegenerate_; }

  const Matrix<K>& inverse_matrix() const {
    if (!inv_) {
      if (!nondegenerate_) throw InvalidError("degenerate metric has no inverse");
      inv_ = inverse(g_);
    }
    return *inv_;
  }

  K pair(const std::vector<K>& x, const std::vector<K>& y) const {
    K acc = K(0);
    for (int i = 0; i < dim(); ++i) {
      if (is_zero(x[i])) continue;
      for (int j = 0; j < dim(); ++j)
        if (!is_zero(g_(i, j)) && !is_zero(y[j])) acc += x[i] * g_(i, j) * y[j];
    }
    return acc;
  }

  friend bool operator==(const BilinearForm& a, const BilinearForm& b) { return a.g_ == b.g_; }

private:
  Matrix<K> g_;
  bool nondegenerate_ = false;
  mutable std::optional<Matrix<K>> inv_;
};

template <class K>
using Metric = BilinearForm<K>;

struct MetricTermText {
  int i = 0, j = 0;
  std::string coef;
  std::size_t pos = 0;
};

// Text grammar: sum of [c*]ei.ej terms with optional sign; ei.ej is an
// unordered symmetric pair.
std::vector<MetricTermText> parse_metric_text(std::string_view text);

template <class K>
Metric<K> parse_metric(std::string_view text, int dim) {
  Matrix<K> g(dim, dim);
  for (const auto& t : parse_metric_text(text)) {
    if (t.i < 1 || t.i > dim || t.j < 1 || t.j > dim)
      throw ParseError("metric index out of range for dimension " + std::to_string(dim), t.pos);
    K c;
    try {
      c = FieldTraits<K>::parse(t.coef);
    } catch (const Error&) {
      throw ParseError("invalid coefficient '" + t.coef + "'", t.pos);
    }
    if (t.i == t.j) {
      g(t.i - 1, t.i - 1) += c;
    } else {
      g(t.i - 1, t.j - 1) += c;
      g(t.j - 1, t.i - 1) += c;
    }
  }
  return Metric<K>(std::move(g));
}

template <class K>
std::string render_metric(const Metric<K>& m) {
  std::string out;
  for (int i = 0; i < m.dim(); ++i)
    for (int j = i; j < m.dim(); ++j) {
      const K& c = m.matrix()(i, j);
      if (is_zero(c)) continue;
      std::string coef = scalar_str(c);
      std::string atom = "e" + std::to_string(i + 1) + ".e" + std::to_string(j + 1);
      if (coef == "1") {
        if (!out.empty()) out += "+";
        out += atom;
      } else if (coef == "-1") {
        out += "-" + atom;
      } else if (coef.find('+') != std::string::npos || coef.find('-', 1) != std::string::npos) {
        if (!out.empty()) out += "+";
        out += "(" + coef + ")*" + atom;
      } else {
        if (!out.empty() && coef[0] != '-') out += "+";
        out += coef + "*" + atom;
      }
    }
  return out.empty() ? "0" : out;
}

template <class K>
struct AdInvarianceViolation {
  int i, j, k;  // 1-based basis triple
  K residual;   // g([e_i,e_j],e_k) + g(e_j,[e_i,e_k])
};

// Checks g([X,Y],Z) = -g(Y,[X,Z]) on all basis triples.
template <class K>
std::optional<AdInvarianceViolation<K>> check_adinvariant(const LieAlgebra<K>& alg,
                                                          const Metric<K>& g) {
  int n = alg.dim();
  if (g.dim() != n) throw InvalidError("metric dimension mismatch");
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (int k = j; k <= n; ++k) {
        std::vector<K> bij = alg.bracket_basis(i, j);
        std::vector<K> bik = alg.bracket_basis(i, k);
        K acc = K(0);
        for (int m = 0; m < n; ++m) {
          if (!is_zero(bij[m])) acc += bij[m] * g.matrix()(m, k - 1);
          if (!is_zero(bik[m])) acc += g.matrix()(j - 1, m) * bik[m];
        }
        if (!is_zero(acc)) return AdInvarianceViolation<K>{i, j, k, acc};
      }
  return std::nullopt;
}

template <class K>
bool is_adinvariant(const LieAlgebra<K>& alg, const Metric<K>& g) {
  return !check_adinvariant(alg, g).has_value();
}

// Adjoint with respect to g: f* = g^-1 f^T g, so that g(fx, y) = g(x, f*y).
template <class K>
Matrix<K> adjoint(const Matrix<K>& f, const Metric<K>& g) {
  if (!g.nondegenerate()) throw InvalidError("adjoint requires a nondegenerate metric");
  return g.inverse_matrix() * f.transposed() * g.matrix();
}

// The involution of a sigma-diagonal metric (exactly one nonzero entry per
// row), if the metric has that shape.
template <class K>
std::optional<std::vector<int>> sigma_of_diagonal_metric(const Metric<K>& g) {
  int n = g.dim();
  std::vector<int> sigma(n + 1, 0);  // 1-based
  for (int i = 0; i < n; ++i) {
    int found = -1;
    for (int j = 0; j < n; ++j) {
      if (is_zero(g.matrix()(i, j))) continue;
      if (found >= 0) return std::nullopt;
      found = j;
    }
    if (found < 0) return std::nullopt;
    sigma[i + 1] = found + 1;
  }
  for (int i = 1; i <= n; ++i)
    if (sigma[sigma[i]] != i) return std::nullopt;
  return sigma;
}

}  // namespace liesol

#endif
