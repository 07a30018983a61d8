#ifndef LIESOL_NIK_NIK_HPP
#define LIESOL_NIK_NIK_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "liesol/cons/build.hpp"
#include "liesol/exact/project.hpp"
#include "liesol/nik/grading.hpp"

namespace liesol {

// Der(g) cap co(g, g): derivations D with D^T G + G D = l G for a scalar l,
// solved as one linear system in (D, l). l_values[t] is the conformal
// constant of basis[t].
template <class K>
struct DerCapCo {
  std::vector<Matrix<K>> basis;
  std::vector<K> l_values;
  int dim() const { return int(basis.size()); }
};

template <class K>
DerCapCo<K> der_cap_co(const LieAlgebra<K>& alg, const Metric<K>& g) {
  if (!g.nondegenerate()) throw InvalidError("der_cap_co: metric must be nondegenerate");
  int n = alg.dim();
  BracketTable<K> table(alg);
  detail::MatrixSystem<K> sys(n, n, 1);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      const std::vector<K>& br = table(i, j);
      for (int k = 1; k <= n; ++k) {
        sys.begin_row();
        for (int m = 1; m <= n; ++m) {
          if (!is_zero(br[m - 1])) sys.add(k - 1, m - 1, br[m - 1]);
          const K& cmj = table(m, j)[k - 1];
          if (!is_zero(cmj)) sys.add(m - 1, i - 1, -cmj);
          const K& cim = table(i, m)[k - 1];
          if (!is_zero(cim)) sys.add(m - 1, j - 1, -cim);
        }
        sys.end_row();
      }
    }
  const Matrix<K>& G = g.matrix();
  for (int a = 0; a < n; ++a)
    for (int b = a; b < n; ++b) {
      sys.begin_row();
      for (int m = 0; m < n; ++m) {
        if (!is_zero(G(m, b))) sys.add(m, a, G(m, b));
        if (!is_zero(G(a, m))) sys.add(m, b, G(a, m));
      }
      sys.add_extra(0, -G(a, b));
      sys.end_row();
    }
  DerCapCo<K> out;
  for (const auto& v : sys.kernel()) {
    std::vector<K> flat(v.begin(), v.end() - 1);
    out.basis.push_back(MapSpace<K>::unflatten(flat, n, n));
    out.l_values.push_back(v.back());
  }
  return out;
}

// Conformal constant of f with respect to g, if f^T G + G f = l G.
template <class K>
std::optional<K> co_constant(const Matrix<K>& f, const Metric<K>& g) {
  Matrix<K> m = f.transposed() * g.matrix() + g.matrix() * f;
  int n = g.dim();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (!is_zero(g.matrix()(a, b))) {
        K l = m(a, b) / g.matrix()(a, b);
        if (m == g.matrix().scaled(l)) return l;
        return std::nullopt;
      }
  return std::nullopt;
}

// Diagram rows over the basis slots: one row -e_i - e_j + e_k per nonzero
// structure constant.
template <class K>
std::vector<std::vector<Rational>> derivation_rows(const LieAlgebra<K>& alg) {
  std::vector<std::vector<Rational>> rows;
  for (const auto& t : alg.terms()) {
    std::vector<Rational> row(alg.dim(), Rational(0));
    row[t.i - 1] += Rational(-1);
    row[t.j - 1] += Rational(-1);
    row[t.k - 1] += Rational(1);
    rows.push_back(std::move(row));
  }
  return rows;
}

// Pairing rows for the involution sigma: consecutive sigma-pair differences
// e_i + e_{sigma i} - e_j - e_{sigma j}, chaining all pairs (including
// fixed points, which contribute 2 e_i).
inline std::vector<std::vector<Rational>> pairing_rows(const std::vector<int>& sigma, int n) {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 1; i <= n; ++i)
    if (sigma[i] >= i) pairs.emplace_back(i, sigma[i]);
  std::vector<std::vector<Rational>> rows;
  for (std::size_t t = 0; t + 1 < pairs.size(); ++t) {
    std::vector<Rational> row(n, Rational(0));
    row[pairs[t].first - 1] += Rational(1);
    row[pairs[t].second - 1] += Rational(1);
    row[pairs[t + 1].first - 1] += Rational(-1);
    row[pairs[t + 1].second - 1] += Rational(-1);
    rows.push_back(std::move(row));
  }
  return rows;
}

enum class NikPath { TracelessZero, DiagonalProjection, CotangentFormula };

inline const char* to_string(NikPath p) {
  switch (p) {
    case NikPath::TracelessZero: return "traceless-zero";
    case NikPath::DiagonalProjection: return "diagonal-projection";
    case NikPath::CotangentFormula: return "cotangent-formula";
  }
  return "?";
}

template <class K>
struct NikResult {
  NikPath path = NikPath::DiagonalProjection;
  std::vector<Rational> lambda;        // diagonal eigenvalue vector
  Matrix<K> matrix;                    // N itself
  std::optional<Rational> l;           // lambda_i + lambda_{sigma i}, metric paths
  std::optional<Rational> a;           // cotangent path scaling factor
  bool a_boundary_warning = false;     // a == 1 (reducible-boundary case)
  int checked_dim = 0;                 // size of the certified space basis
  std::vector<K> residuals;            // Tr(N psi) - Tr(psi) per basis element, all zero
};

namespace detail {

// Certify Tr(N psi) = Tr(psi) for every psi in the basis; nonzero residuals
// are a hard failure.
template <class K>
void certify_trace_condition(NikResult<K>& res, const std::vector<Matrix<K>>& basis,
                             const std::string& context) {
  res.checked_dim = int(basis.size());
  res.residuals.clear();
  for (const auto& psi : basis) {
    K r = (res.matrix * psi).trace() - psi.trace();
    if (!is_zero(r))
      throw CertificateError(context + ": trace certificate failed (Tr(N psi) != Tr psi)");
    res.residuals.push_back(std::move(r));
  }
}

template <class K>
void certify_membership(const NikResult<K>& res, const DerCapCo<K>& dcc, const Metric<K>& g,
                        const std::string& context) {
  int n = res.matrix.rows();
  std::optional<K> l = co_constant(res.matrix, g);
  if (!l) throw CertificateError(context + ": N is not conformal");
  EchelonSolver<K> span(n * n + 1);
  for (int t = 0; t < dcc.dim(); ++t) {
    std::vector<K> v = dcc.basis[t].flat();
    v.push_back(dcc.l_values[t]);
    span.add_row(v);
  }
  span.finalize();
  std::vector<K> target = res.matrix.flat();
  target.push_back(*l);
  if (!span.contains(target))
    throw CertificateError(context + ": N is not in Der cap co");
}

}  // namespace detail

// Nikolayevsky derivation of a nice Lie algebra: the projection of the
// all-ones vector onto the kernel of the diagram row matrix, certified
// against the full derivation space.
template <class K>
NikResult<K> nikolayevsky_nice(const LieAlgebra<K>& alg, const MapSpace<K>* der = nullptr) {
  auto [nice, diagram] = is_nice(alg);
  if (!nice) throw InvalidError("nikolayevsky_nice: algebra is not nice");
  int n = alg.dim();
  Matrix<Rational> f = select_row_basis(derivation_rows(alg), n);
  std::vector<Rational> lambda =
      project_onto_kernel(std::vector<Rational>(n, Rational(1)), f);

  NikResult<K> res;
  res.path = NikPath::DiagonalProjection;
  res.lambda = lambda;
  std::vector<K> diag(n);
  for (int i = 0; i < n; ++i) diag[i] = FieldTraits<K>::from_rational(lambda[i]);
  res.matrix = Matrix<K>::diagonal(diag);
  if (!is_derivation(alg, res.matrix))
    throw CertificateError("nikolayevsky_nice: N is not a derivation");
  MapSpace<K> local;
  const MapSpace<K>& ders = der ? *der : (local = derivation_space(alg));
  detail::certify_trace_condition(res, ders.basis(), "nikolayevsky_nice");
  return res;
}

template <class K>
NikResult<K> cotangent_nikolayevsky_impl(const CotangentPackage<K>& pkg,
                                         const std::vector<Rational>& base_lambda,
                                         const DerCapCo<K>& dcc) {
  int n0 = pkg.base_dim;
  Rational tr(0);
  for (const Rational& x : base_lambda) tr += x;
  Rational a = Rational(n0) / (Rational(2 * n0) - tr);

  NikResult<K> res;
  res.path = NikPath::CotangentFormula;
  res.a = a;
  res.a_boundary_warning = (a == Rational(1));
  res.l = 2 * a;
  res.lambda.resize(2 * n0);
  for (int i = 0; i < n0; ++i) {
    res.lambda[i] = a * base_lambda[i];
    res.lambda[n0 + i] = a * (Rational(2) - base_lambda[i]);
  }
  std::vector<K> diag(2 * n0);
  for (int i = 0; i < 2 * n0; ++i) diag[i] = FieldTraits<K>::from_rational(res.lambda[i]);
  res.matrix = Matrix<K>::diagonal(diag);
  detail::certify_trace_condition(res, dcc.basis, "cotangent_nikolayevsky");
  detail::certify_membership(res, dcc, pkg.metric, "cotangent_nikolayevsky");
  return res;
}

// Nikolayevsky derivation of the base algebra, for feeding the cotangent
// formula: zero when all derivations are traceless, else the nice-basis
// projection.
template <class K>
std::vector<Rational> base_nikolayevsky_lambda(const LieAlgebra<K>& base) {
  MapSpace<K> der = derivation_space(base);
  if (is_nice(base).first) return nikolayevsky_nice(base, &der).lambda;
  if (all_derivations_traceless(base, &der))
    return std::vector<Rational>(base.dim(), Rational(0));
  throw UnsupportedError(
      "cotangent_nikolayevsky: base algebra is neither nice nor derivation-traceless");
}

// Metric Nikolayevsky derivation of T*g with the canonical metric,
// N = a (Ntilde - Ntilde* + 2P), certified against Der cap co of the
// cotangent.
template <class K>
NikResult<K> cotangent_nikolayevsky(const CotangentPackage<K>& pkg, const LieAlgebra<K>& base) {
  DerCapCo<K> dcc = der_cap_co(pkg.algebra, pkg.metric);
  return cotangent_nikolayevsky_impl(pkg, base_nikolayevsky_lambda(base), dcc);
}

// Metric Nikolayevsky derivation on the certifiable paths:
//   (a) Der cap co all traceless -> N = 0;
//   (b) nice basis and sigma-diagonal metric -> diagram projection;
//   (c) canonical cotangent layout -> cotangent formula.
// Every result is certified against the full Der cap co basis.
template <class K>
NikResult<K> metric_nikolayevsky(const LieAlgebra<K>& alg, const Metric<K>& g) {
  if (!g.nondegenerate()) throw InvalidError("metric_nikolayevsky: metric must be nondegenerate");
  int n = alg.dim();
  DerCapCo<K> dcc = der_cap_co(alg, g);

  bool all_traceless = true;
  for (const auto& d : dcc.basis)
    if (!is_zero(d.trace())) all_traceless = false;
  if (all_traceless) {
    NikResult<K> res;
    res.path = NikPath::TracelessZero;
    res.lambda.assign(n, Rational(0));
    res.matrix = Matrix<K>(n, n);
    res.l = Rational(0);
    detail::certify_trace_condition(res, dcc.basis, "metric_nikolayevsky");
    detail::certify_membership(res, dcc, g, "metric_nikolayevsky");
    return res;
  }

  std::optional<std::vector<int>> sigma = sigma_of_diagonal_metric(g);
  if (sigma && is_nice(alg).first) {
    std::vector<std::vector<Rational>> rows = derivation_rows(alg);
    for (auto& r : pairing_rows(*sigma, n)) rows.push_back(std::move(r));
    Matrix<Rational> f = select_row_basis(rows, n);
    std::vector<Rational> lambda =
        project_onto_kernel(std::vector<Rational>(n, Rational(1)), f);
    NikResult<K> res;
    res.path = NikPath::DiagonalProjection;
    res.lambda = lambda;
    std::vector<K> diag(n);
    for (int i = 0; i < n; ++i) diag[i] = FieldTraits<K>::from_rational(lambda[i]);
    res.matrix = Matrix<K>::diagonal(diag);
    Rational l = lambda[0] + lambda[(*sigma)[1] - 1];
    for (int i = 1; i <= n; ++i)
      if (lambda[i - 1] + lambda[(*sigma)[i] - 1] != l)
        throw CertificateError("metric_nikolayevsky: lambda_i + lambda_{sigma i} not constant");
    res.l = l;
    detail::certify_trace_condition(res, dcc.basis, "metric_nikolayevsky");
    detail::certify_membership(res, dcc, g, "metric_nikolayevsky");
    return res;
  }

  if (auto base = detect_cotangent(alg, g)) {
    CotangentPackage<K> pkg = cotangent(*base);
    return cotangent_nikolayevsky_impl(pkg, base_nikolayevsky_lambda(*base), dcc);
  }

  throw UnsupportedError(
      "metric_nikolayevsky: no certifiable path (requires traceless Der cap co, a nice basis "
      "with a sigma-diagonal metric, or a canonical cotangent layout)");
}

enum class PositivityVerdict { ProvedSolitary, Inconclusive };

inline const char* to_string(PositivityVerdict v) {
  return v == PositivityVerdict::ProvedSolitary ? "ProvedSolitary" : "Inconclusive";
}

// Positive metric Nikolayevsky eigenvalues prove the metric solitary.
template <class K>
PositivityVerdict solitary_by_positivity(const NikResult<K>& nik) {
  for (const Rational& x : nik.lambda)
    if (!is_positive(x)) return PositivityVerdict::Inconclusive;
  return PositivityVerdict::ProvedSolitary;
}

enum class TstarGradingVerdict { ProvedTstarSolitary, Inconclusive };

inline const char* to_string(TstarGradingVerdict v) {
  return v == TstarGradingVerdict::ProvedTstarSolitary ? "ProvedTstarSolitary" : "Inconclusive";
}

// Sufficient condition: a grading with positive weights, or nonnegative
// weights with a T*-solitary zero part.
template <class K>
TstarGradingVerdict tstar_by_grading(const LieAlgebra<K>& alg,
                                     const Matrix<K>* supplied = nullptr) {
  Matrix<K> n_matrix;
  if (supplied) {
    n_matrix = *supplied;
  } else if (is_nice(alg).first) {
    n_matrix = nikolayevsky_nice(alg).matrix;
  } else {
    return TstarGradingVerdict::Inconclusive;
  }
  if (n_matrix.is_zero_matrix()) return TstarGradingVerdict::Inconclusive;
  Grading<K> grading = grading_from_derivation(alg, n_matrix);
  bool all_positive = true, all_nonnegative = true;
  for (const auto& [w, part] : grading.parts) {
    if (w <= 0) all_positive = false;
    if (w < 0) all_nonnegative = false;
  }
  if (all_positive) return TstarGradingVerdict::ProvedTstarSolitary;
  if (!all_nonnegative) return TstarGradingVerdict::Inconclusive;
  const Subspace<K>* b0 = grading.part(0);
  if (!b0) return TstarGradingVerdict::ProvedTstarSolitary;  // unreachable: 0 in weights
  LieAlgebra<K> zero_part = subalgebra(alg, *b0);
  return tstar_solitary(zero_part).solitary ? TstarGradingVerdict::ProvedTstarSolitary
                                            : TstarGradingVerdict::Inconclusive;
}

}  // namespace liesol

#endif
