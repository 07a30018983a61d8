#ifndef LIESOL_CONS_BUILD_HPP
#define LIESOL_CONS_BUILD_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "liesol/lie/analysis.hpp"
#include "liesol/metric/metric.hpp"
#include "liesol/metric/spaces.hpp"

namespace liesol {

template <class K>
std::pair<LieAlgebra<K>, std::optional<Metric<K>>> direct_sum(
    const LieAlgebra<K>& a, const LieAlgebra<K>& b, const Metric<K>* ga = nullptr,
    const Metric<K>* gb = nullptr) {
  int na = a.dim(), nb = b.dim();
  std::vector<BracketTerm<K>> terms;
  for (const auto& t : a.terms()) terms.push_back(t);
  for (const auto& t : b.terms()) terms.push_back({t.i + na, t.j + na, t.k + na, t.c});
  LieAlgebra<K> sum = LieAlgebra<K>::create(na + nb, std::move(terms));
  std::optional<Metric<K>> metric;
  if (ga && gb) {
    Matrix<K> g(na + nb, na + nb);
    for (int i = 0; i < na; ++i)
      for (int j = 0; j < na; ++j) g(i, j) = ga->matrix()(i, j);
    for (int i = 0; i < nb; ++i)
      for (int j = 0; j < nb; ++j) g(na + i, na + j) = gb->matrix()(i, j);
    metric = Metric<K>(std::move(g));
  }
  return {std::move(sum), std::move(metric)};
}

// T*g = g semidirect g* via the coadjoint action, basis order
// (e_1..e_n, e^1..e^n), with the canonical pairing metric. All package
// invariants are verified at build time.
template <class K>
struct CotangentPackage {
  LieAlgebra<K> algebra;  // dimension 2n
  Metric<K> metric;       // canonical pairing
  Matrix<K> projection;   // P: projection onto the dual block
  int base_dim = 0;       // first n coordinates = g, last n = g*
};

template <class K>
CotangentPackage<K> cotangent(const LieAlgebra<K>& base) {
  int n = base.dim();
  std::vector<BracketTerm<K>> terms;
  for (const auto& t : base.terms()) {
    terms.push_back(t);
    // [e_i, e^k] = -sum_j c^k_{ij} e^j, from the coadjoint action.
    terms.push_back({t.i, n + t.k, n + t.j, -t.c});
    terms.push_back({t.j, n + t.k, n + t.i, t.c});
  }
  LieAlgebra<K> alg = LieAlgebra<K>::create(2 * n, std::move(terms));

  Matrix<K> g(2 * n, 2 * n);
  for (int i = 0; i < n; ++i) {
    g(i, n + i) = K(1);
    g(n + i, i) = K(1);
  }
  Metric<K> metric(std::move(g));

  Matrix<K> p(2 * n, 2 * n);
  for (int i = 0; i < n; ++i) p(n + i, n + i) = K(1);

  // Invariants: dual block abelian, canonical metric ad-invariant,
  // P a derivation, P + P* = id.
  for (const auto& t : alg.terms())
    if (t.i > n && t.j > n) throw CertificateError("cotangent: dual block is not abelian");
  if (!is_adinvariant(alg, metric))
    throw CertificateError("cotangent: canonical metric is not ad-invariant");
  if (!is_derivation(alg, p)) throw CertificateError("cotangent: P is not a derivation");
  if (p + adjoint(p, metric) != Matrix<K>::identity(2 * n))
    throw CertificateError("cotangent: P + P* != id");

  return {std::move(alg), std::move(metric), std::move(p), n};
}

// Recognizes an algebra+metric in the canonical cotangent layout (base block
// first, dual block second, coadjoint brackets, pairing metric) and returns
// the base algebra.
template <class K>
std::optional<LieAlgebra<K>> detect_cotangent(const LieAlgebra<K>& alg, const Metric<K>& g) {
  int n2 = alg.dim();
  if (n2 % 2 != 0) return std::nullopt;
  int n = n2 / 2;
  Matrix<K> pairing(n2, n2);
  for (int i = 0; i < n; ++i) {
    pairing(i, n + i) = K(1);
    pairing(n + i, i) = K(1);
  }
  if (g.matrix() != pairing) return std::nullopt;
  std::vector<BracketTerm<K>> base_terms;
  for (const auto& t : alg.terms())
    if (t.j <= n) {
      if (t.k > n) return std::nullopt;  // base block leaks into the dual block
      base_terms.push_back(t);
    }
  try {
    LieAlgebra<K> base = LieAlgebra<K>::create(n, base_terms);
    CotangentPackage<K> rebuilt = cotangent(base);
    if (rebuilt.algebra == alg) return base;
  } catch (const Error&) {
    // Not a canonical cotangent layout.
  }
  return std::nullopt;
}

// Double extension data: (d, g_d) with an h-representation into
// Der(d) cap so(d, g_d), plus an optional ad-invariant symmetric form on h.
template <class K>
struct DoubleExtensionData {
  LieAlgebra<K> d;
  Metric<K> g_d;  // ad-invariant nondegenerate (may be 0x0 when d is trivial)
  LieAlgebra<K> h;
  std::vector<Matrix<K>> pi;  // one matrix per h basis element
  std::optional<BilinearForm<K>> g_h;  // possibly degenerate or absent (= 0)
};

template <class K>
void validate_double_extension_data(const DoubleExtensionData<K>& data) {
  int p = data.d.dim(), m = data.h.dim();
  if (int(data.pi.size()) != m)
    throw InvalidError("double extension: pi must have one matrix per h basis element");
  if (p > 0 && !data.g_d.nondegenerate())
    throw InvalidError("double extension: g_d must be nondegenerate");
  if (p > 0 && !is_adinvariant(data.d, data.g_d))
    throw InvalidError("double extension: g_d must be ad-invariant");
  for (int a = 0; a < m; ++a) {
    const Matrix<K>& pa = data.pi[a];
    if (pa.rows() != p || pa.cols() != p)
      throw InvalidError("double extension: pi matrix dimension mismatch");
    if (p == 0) continue;
    if (!is_derivation(data.d, pa))
      throw InvalidError("double extension: pi(H_" + std::to_string(a + 1) +
                         ") is not a derivation of d");
    // so(d, g_d): g(pi X, Y) + g(X, pi Y) = 0.
    Matrix<K> skew = pa.transposed() * data.g_d.matrix() + data.g_d.matrix() * pa;
    if (!skew.is_zero_matrix())
      throw InvalidError("double extension: pi(H_" + std::to_string(a + 1) +
                         ") is not g_d-skew-symmetric");
  }
  // pi must be a homomorphism.
  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b) {
      std::vector<K> hb = data.h.bracket_basis(a + 1, b + 1);
      Matrix<K> rhs = data.pi[a] * data.pi[b] - data.pi[b] * data.pi[a];
      Matrix<K> lhs(p, p);
      for (int t = 0; t < m; ++t)
        if (!is_zero(hb[t])) lhs = lhs + data.pi[t].scaled(hb[t]);
      if (lhs != rhs)
        throw InvalidError("double extension: pi is not a Lie algebra homomorphism");
    }
  if (data.g_h) {
    if (data.g_h->dim() != m) throw InvalidError("double extension: g_h dimension mismatch");
    if (auto viol = check_adinvariant(data.h, *data.g_h))
      throw InvalidError("double extension: g_h is not ad-invariant");
  }
}

// q = h + d + h* with the double-extension bracket and metric; Jacobi and
// ad-invariance are re-verified on the result.
template <class K>
std::pair<LieAlgebra<K>, Metric<K>> double_extension(const DoubleExtensionData<K>& data) {
  validate_double_extension_data(data);
  int p = data.d.dim(), m = data.h.dim();
  int n = m + p + m;
  auto H = [&](int a) { return a + 1; };          // h coordinates, 0-based a
  auto X = [&](int x) { return m + x + 1; };      // d coordinates
  auto A = [&](int a) { return m + p + a + 1; };  // h* coordinates

  std::vector<BracketTerm<K>> terms;
  // [h, h]: bracket of h plus coadjoint action on h*.
  for (const auto& t : data.h.terms()) terms.push_back({H(t.i - 1), H(t.j - 1), H(t.k - 1), t.c});
  // Coadjoint: [H_a, alpha^k] = -sum_b c^k_{ab} alpha^b.
  for (const auto& t : data.h.terms()) {
    terms.push_back({H(t.i - 1), A(t.k - 1), A(t.j - 1), -t.c});
    terms.push_back({H(t.j - 1), A(t.k - 1), A(t.i - 1), t.c});
  }
  // [h, d] via pi.
  for (int a = 0; a < m; ++a)
    for (int x = 0; x < p; ++x)
      for (int y = 0; y < p; ++y)
        if (!is_zero(data.pi[a](y, x))) terms.push_back({H(a), X(x), X(y), data.pi[a](y, x)});
  // [d, d]: bracket of d plus beta(X, X')(H_a) = g_d(pi(H_a) X, X').
  for (const auto& t : data.d.terms()) terms.push_back({X(t.i - 1), X(t.j - 1), X(t.k - 1), t.c});
  for (int x = 0; x < p; ++x)
    for (int y = x + 1; y < p; ++y)
      for (int a = 0; a < m; ++a) {
        K beta = K(0);
        for (int u = 0; u < p; ++u)
          if (!is_zero(data.pi[a](u, x))) beta += data.g_d.matrix()(u, y) * data.pi[a](u, x);
        if (!is_zero(beta)) terms.push_back({X(x), X(y), A(a), beta});
      }
  LieAlgebra<K> q = LieAlgebra<K>::create(n, std::move(terms));

  Matrix<K> g(n, n);
  if (data.g_h)
    for (int a = 0; a < m; ++a)
      for (int b = 0; b < m; ++b) g(a, b) = data.g_h->matrix()(a, b);
  for (int x = 0; x < p; ++x)
    for (int y = 0; y < p; ++y) g(m + x, m + y) = data.g_d.matrix()(x, y);
  for (int a = 0; a < m; ++a) {
    g(a, m + p + a) = K(1);
    g(m + p + a, a) = K(1);
  }
  Metric<K> metric(std::move(g));
  if (!metric.nondegenerate()) throw CertificateError("double extension: metric is degenerate");
  if (!is_adinvariant(q, metric))
    throw CertificateError("double extension: metric is not ad-invariant");
  return {std::move(q), std::move(metric)};
}

template <class K2, class K>
LieAlgebra<K2> change_field(const LieAlgebra<K>& alg) = delete;

inline LieAlgebra<Gaussian> complexify(const LieAlgebra<Rational>& alg) {
  return alg.template map_constants<Gaussian>([](const Rational& c) { return Gaussian(c); });
}

inline Metric<Gaussian> complexify(const Metric<Rational>& g) {
  return Metric<Gaussian>(g.matrix().map([](const Rational& c) { return Gaussian(c); }));
}

struct Realification {
  LieAlgebra<Rational> algebra;  // dimension 2n, basis (x_1..x_n, i x_1..i x_n)
  Matrix<Rational> j;            // multiplication by i
};

// Underlying real (here: rational) algebra of a Gaussian algebra, together
// with the multiplication-by-i matrix J, which is an ad-invariant complex
// structure by construction (verified).
inline Realification realify(const LieAlgebra<Gaussian>& alg) {
  int n = alg.dim();
  std::vector<BracketTerm<Rational>> terms;
  for (const auto& t : alg.terms()) {
    const Rational& a = t.c.re;
    const Rational& b = t.c.im;
    // [u_i, u_j] = a u_k + b v_k
    if (!is_zero(a)) terms.push_back({t.i, t.j, t.k, a});
    if (!is_zero(b)) terms.push_back({t.i, t.j, n + t.k, b});
    // [u_i, v_j] = -b u_k + a v_k ; [v_i, u_j] likewise by antisymmetry
    if (!is_zero(b)) terms.push_back({t.i, n + t.j, t.k, -b});
    if (!is_zero(a)) terms.push_back({t.i, n + t.j, n + t.k, a});
    if (!is_zero(b)) terms.push_back({t.j, n + t.i, t.k, b});
    if (!is_zero(a)) terms.push_back({t.j, n + t.i, n + t.k, -a});
    // [v_i, v_j] = -a u_k - b v_k
    if (!is_zero(a)) terms.push_back({n + t.i, n + t.j, t.k, -a});
    if (!is_zero(b)) terms.push_back({n + t.i, n + t.j, n + t.k, -b});
  }
  Realification out{LieAlgebra<Rational>::create(2 * n, std::move(terms)), Matrix<Rational>(2 * n, 2 * n)};
  for (int i = 0; i < n; ++i) {
    out.j(n + i, i) = Rational(1);
    out.j(i, n + i) = Rational(-1);
  }
  Matrix<Rational> j2 = out.j * out.j;
  if (j2 != -Matrix<Rational>::identity(2 * n) || !is_adinvariant_endo(out.algebra, out.j))
    throw CertificateError("realify: J is not an ad-invariant complex structure");
  return out;
}

// Re g as a bilinear form on the realification basis (u, v):
//   g(u_i,u_j) = Re G_ij, g(u_i,v_j) = -Im G_ij, g(v_i,v_j) = -Re G_ij.
inline Metric<Rational> realify_metric(const Metric<Gaussian>& g) {
  int n = g.dim();
  Matrix<Rational> r(2 * n, 2 * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const Gaussian& x = g.matrix()(i, j);
      r(i, j) = x.re;
      r(i, n + j) = -x.im;
      r(n + i, j) = -x.im;
      r(n + i, n + j) = -x.re;
    }
  return Metric<Rational>(std::move(r));
}

template <class K>
struct TstarVerdict {
  bool solitary = false;
  int phi_dim = 0;  // symmetric ad-invariant maps g -> g*
  int psi_dim = 0;  // dim of {D + D^T : D a g -> g* derivation}
  std::optional<Matrix<K>> witness;  // an ad-invariant symmetric map outside the span
};

// Direct decision of the T*-solitary property: every ad-invariant symmetric
// phi: g -> g* must equal D + D^T for a g -> g* derivation D.
template <class K>
TstarVerdict<K> tstar_solitary(const LieAlgebra<K>& alg) {
  int n = alg.dim();
  BracketTable<K> table(alg);

  // Phi: matrices phi (coordinates of g* in the dual basis) with
  // sum_m c^m_{ij} phi_{km} + sum_m c^m_{ik} phi_{mj} = 0 and phi symmetric;
  // the diagonal pair i = j contributes (phi e_i)([e_i, e_k]) = 0.
  detail::MatrixSystem<K> phi_sys(n, n);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      const std::vector<K>& bij = table(i, j);
      for (int k = 1; k <= n; ++k) {
        phi_sys.begin_row();
        const std::vector<K>& bik = table(i, k);
        for (int m = 1; m <= n; ++m) {
          if (!is_zero(bij[m - 1])) phi_sys.add(k - 1, m - 1, bij[m - 1]);
          if (!is_zero(bik[m - 1])) phi_sys.add(m - 1, j - 1, bik[m - 1]);
        }
        phi_sys.end_row();
      }
    }
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      phi_sys.begin_row();
      phi_sys.add(a, b, K(1));
      phi_sys.add(b, a, K(-1));
      phi_sys.end_row();
    }
  MapSpace<K> phi_space = MapSpace<K>::from_flat(n, n, phi_sys.kernel());

  // Derivations D: g -> g*: D[X,Y](Z) = DX([Y,Z]) - DY([X,Z]), i.e.
  // sum_m [ c^m_{ij} D_{km} - c^m_{jk} D_{mi} + c^m_{ik} D_{mj} ] = 0.
  detail::MatrixSystem<K> d_sys(n, n);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      const std::vector<K>& bij = table(i, j);
      for (int k = 1; k <= n; ++k) {
        d_sys.begin_row();
        const std::vector<K>& bjk = table(j, k);
        const std::vector<K>& bik = table(i, k);
        for (int m = 1; m <= n; ++m) {
          if (!is_zero(bij[m - 1])) d_sys.add(k - 1, m - 1, bij[m - 1]);
          if (!is_zero(bjk[m - 1])) d_sys.add(m - 1, i - 1, -bjk[m - 1]);
          if (!is_zero(bik[m - 1])) d_sys.add(m - 1, j - 1, bik[m - 1]);
        }
        d_sys.end_row();
      }
    }
  std::vector<Matrix<K>> symmetrized;
  for (const auto& flat : d_sys.kernel()) {
    Matrix<K> d = MapSpace<K>::unflatten(flat, n, n);
    symmetrized.push_back(d + d.transposed());
  }
  MapSpace<K> psi_space = MapSpace<K>::span(n, n, symmetrized);

  TstarVerdict<K> verdict;
  verdict.phi_dim = phi_space.dim();
  verdict.psi_dim = psi_space.dim();
  verdict.solitary = true;
  EchelonSolver<K> span(n * n);
  for (const auto& b : psi_space.basis()) span.add_row(b.flat());
  span.finalize();
  for (const auto& b : phi_space.basis())
    if (!span.contains(b.flat())) {
      verdict.solitary = false;
      verdict.witness = b;
      break;
    }
  return verdict;
}

}  // namespace liesol

#endif
