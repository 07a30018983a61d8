#ifndef LIESOL_METRIC_SPACES_HPP
#define LIESOL_METRIC_SPACES_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "liesol/exact/poly.hpp"
#include "liesol/lie/analysis.hpp"
#include "liesol/metric/metric.hpp"

namespace liesol {

// Rational square root of a nonnegative rational; 0 reports failure for
// positive arguments.
inline Rational rational_sqrt(const Rational& x) {
  if (sgn(x) <= 0) return Rational(0);
  Integer num = x.get_num(), den = x.get_den();
  if (mpz_perfect_square_p(num.get_mpz_t()) == 0) return Rational(0);
  if (mpz_perfect_square_p(den.get_mpz_t()) == 0) return Rational(0);
  Integer rn, rd;
  mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
  Rational r(rn, rd);
  r.canonicalize();
  return r;
}

// S_g: ad-invariant endomorphisms that are self-adjoint with respect to g,
// computed as the kernel of the combined linear system.
template <class K>
MapSpace<K> selfadjoint_adinvariant_space(const LieAlgebra<K>& alg, const Metric<K>& g) {
  int n = alg.dim();
  BracketTable<K> table(alg);
  detail::MatrixSystem<K> sys(n, n);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      const std::vector<K>& br = table(i, j);
      for (int k = 1; k <= n; ++k) {
        sys.begin_row();
        for (int m = 1; m <= n; ++m) {
          if (!is_zero(br[m - 1])) sys.add(k - 1, m - 1, br[m - 1]);
          const K& cim = table(i, m)[k - 1];
          if (!is_zero(cim)) sys.add(m - 1, j - 1, -cim);
        }
        sys.end_row();
      }
    }
  // Self-adjointness: G phi symmetric.
  const Matrix<K>& G = g.matrix();
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      sys.begin_row();
      for (int m = 0; m < n; ++m) {
        if (!is_zero(G(a, m))) sys.add(m, b, G(a, m));
        if (!is_zero(G(b, m))) sys.add(m, a, -G(b, m));
      }
      sys.end_row();
    }
  return MapSpace<K>::from_flat(n, n, sys.kernel());
}

// D_g = {D + D* : D in Der(g)}; every generator is verified to land in S_g.
template <class K>
MapSpace<K> symmetrized_derivation_space(const LieAlgebra<K>& alg, const Metric<K>& g,
                                         const MapSpace<K>* der = nullptr) {
  MapSpace<K> local;
  const MapSpace<K>& ders = der ? *der : (local = derivation_space(alg));
  std::vector<Matrix<K>> sym;
  sym.reserve(ders.dim());
  for (const auto& d : ders.basis()) {
    Matrix<K> s = d + adjoint(d, g);
    if (!is_adinvariant_endo(alg, s))
      throw CertificateError(
          "symmetrized derivation is not ad-invariant; metric is not ad-invariant");
    sym.push_back(std::move(s));
  }
  return MapSpace<K>::span(alg.dim(), alg.dim(), sym);
}

enum class SolitaryStatus { Solitary, WeaklySolitary, Neither };

inline const char* to_string(SolitaryStatus s) {
  switch (s) {
    case SolitaryStatus::Solitary: return "Solitary";
    case SolitaryStatus::WeaklySolitary: return "WeaklySolitary";
    case SolitaryStatus::Neither: return "Neither";
  }
  return "?";
}

template <class K>
struct SolitaryVerdict {
  SolitaryStatus status = SolitaryStatus::Neither;
  int s_dim = 0;
  int d_dim = 0;
  bool id_in_d = false;
  // For WeaklySolitary: an element of S_g outside D_g. For Neither: an
  // element of S_g outside D_g + span{id}. Echelon order, first offender.
  std::optional<Matrix<K>> witness;
};

template <class K>
SolitaryVerdict<K> classify_solitary(const LieAlgebra<K>& alg, const Metric<K>& g,
                                     const MapSpace<K>* der = nullptr) {
  if (!g.nondegenerate()) throw InvalidError("classify_solitary: metric is degenerate");
  if (auto viol = check_adinvariant(alg, g))
    throw InvalidError("classify_solitary: metric is not ad-invariant (triple " +
                       std::to_string(viol->i) + "," + std::to_string(viol->j) + "," +
                       std::to_string(viol->k) + ")");
  int n = alg.dim();
  MapSpace<K> s_space = selfadjoint_adinvariant_space(alg, g);
  MapSpace<K> d_space = symmetrized_derivation_space(alg, g, der);
  if (!s_space.contains(d_space)) throw CertificateError("D_g is not contained in S_g");

  SolitaryVerdict<K> verdict;
  verdict.s_dim = s_space.dim();
  verdict.d_dim = d_space.dim();

  EchelonSolver<K> d_span(n * n);
  for (const auto& b : d_space.basis()) d_span.add_row(b.flat());
  d_span.finalize();
  verdict.id_in_d = d_span.contains(Matrix<K>::identity(n).flat());

  if (verdict.s_dim == verdict.d_dim) {
    verdict.status = SolitaryStatus::Solitary;
    return verdict;
  }
  EchelonSolver<K> weak(n * n);
  for (const auto& b : d_space.basis()) weak.add_row(b.flat());
  weak.add_row(Matrix<K>::identity(n).flat());
  weak.finalize();
  bool weakly = true;
  std::optional<Matrix<K>> neither_witness;
  for (const auto& b : s_space.basis()) {
    if (!weak.contains(b.flat())) {
      weakly = false;
      if (!neither_witness) neither_witness = b;
      break;
    }
  }
  if (weakly) {
    verdict.status = SolitaryStatus::WeaklySolitary;
    for (const auto& b : s_space.basis())
      if (!d_span.contains(b.flat())) {
        verdict.witness = b;
        break;
      }
  } else {
    verdict.status = SolitaryStatus::Neither;
    verdict.witness = neither_witness;
  }
  return verdict;
}

// tau = g^-1 h, the self-adjoint ad-invariant transporter between two
// ad-invariant metrics. Verified: tau is g-self-adjoint and ad-invariant,
// and tau^-1 S_g = S_h, tau^-1 D_g = D_h as spaces.
template <class K>
Matrix<K> metric_transport(const LieAlgebra<K>& alg, const Metric<K>& g, const Metric<K>& h) {
  if (!g.nondegenerate() || !h.nondegenerate())
    throw InvalidError("metric_transport: metrics must be nondegenerate");
  if (!is_adinvariant(alg, g) || !is_adinvariant(alg, h))
    throw InvalidError("metric_transport: metrics must be ad-invariant");
  Matrix<K> tau = g.inverse_matrix() * h.matrix();
  if (adjoint(tau, g) != tau) throw CertificateError("metric_transport: tau not self-adjoint");
  if (!is_adinvariant_endo(alg, tau))
    throw CertificateError("metric_transport: tau not ad-invariant");
  Matrix<K> tau_inv = inverse(tau);

  auto transported = [&](const MapSpace<K>& space) {
    std::vector<Matrix<K>> mats;
    for (const auto& b : space.basis()) mats.push_back(tau_inv * b);
    return MapSpace<K>::span(alg.dim(), alg.dim(), mats);
  };
  if (!transported(selfadjoint_adinvariant_space(alg, g))
           .same_span(selfadjoint_adinvariant_space(alg, h)))
    throw CertificateError("metric_transport: tau^-1 S_g != S_h");
  if (!transported(symmetrized_derivation_space(alg, g))
           .same_span(symmetrized_derivation_space(alg, h)))
    throw CertificateError("metric_transport: tau^-1 D_g != D_h");
  return tau;
}

// Basis of the space of ad-invariant symmetric bilinear forms.
template <class K>
std::vector<Matrix<K>> adinvariant_form_space(const LieAlgebra<K>& alg) {
  int n = alg.dim();
  BracketTable<K> table(alg);
  auto tri = [n](int a, int b) { return a * n - a * (a - 1) / 2 + (b - a); };  // 0-based, a <= b
  int unknowns = n * (n + 1) / 2;
  EchelonSolver<K> solver(unknowns);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (int k = j; k <= n; ++k) {
        const std::vector<K>& bij = table(i, j);
        const std::vector<K>& bik = table(i, k);
        std::vector<K> row(unknowns, K(0));
        bool nonzero = false;
        for (int m = 1; m <= n; ++m) {
          if (!is_zero(bij[m - 1])) {
            row[tri(std::min(m, k) - 1, std::max(m, k) - 1)] += bij[m - 1];
            nonzero = true;
          }
          if (!is_zero(bik[m - 1])) {
            row[tri(std::min(j, m) - 1, std::max(j, m) - 1)] += bik[m - 1];
            nonzero = true;
          }
        }
        if (nonzero) solver.add_row(row);
      }
  std::vector<Matrix<K>> basis;
  for (const auto& v : solver.kernel_basis()) {
    Matrix<K> m(n, n);
    for (int a = 0; a < n; ++a)
      for (int b = a; b < n; ++b) {
        m(a, b) = v[tri(a, b)];
        m(b, a) = v[tri(a, b)];
      }
    basis.push_back(std::move(m));
  }
  return basis;
}

namespace detail {

// Combinations of the basis supported on the involution pattern
// {(i, sigma(i))} only.
template <class K>
std::vector<Matrix<K>> restrict_to_sigma(const std::vector<Matrix<K>>& basis, int n,
                                         const std::vector<int>& sigma) {
  int s = int(basis.size());
  EchelonSolver<K> solver(s);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (sigma[a + 1] == b + 1) continue;
      std::vector<K> row(s, K(0));
      bool nonzero = false;
      for (int t = 0; t < s; ++t)
        if (!is_zero(basis[t](a, b))) {
          row[t] = basis[t](a, b);
          nonzero = true;
        }
      if (nonzero) solver.add_row(row);
    }
  std::vector<Matrix<K>> restricted;
  for (const auto& combo : solver.kernel_basis()) {
    Matrix<K> m(n, n);
    for (int t = 0; t < s; ++t)
      if (!is_zero(combo[t])) m = m + basis[t].scaled(combo[t]);
    restricted.push_back(std::move(m));
  }
  return restricted;
}

// Every combination of the basis kills a common vector; then all are
// degenerate and the search can stop early.
template <class K>
bool has_common_kernel(const std::vector<Matrix<K>>& basis, int n) {
  EchelonSolver<K> solver(n);
  for (const auto& b : basis)
    for (int i = 0; i < n; ++i) solver.add_row(b.row_vector(i));
  return solver.rank() < n;
}

// Integer-coefficient search over a form basis: shells of increasing
// max-norm; within a shell, coordinates run from +radius down to -radius,
// outer coordinate first. Appends distinct nondegenerate hits to out until
// max_count.
template <class K>
void enumerate_nondegenerate(const std::vector<Matrix<K>>& basis, int n, std::size_t max_count,
                             std::vector<Metric<K>>& out, int max_radius = 4,
                             long budget = 400000) {
  if (basis.empty()) return;
  int s = int(basis.size());
  for (int radius = 1; radius <= max_radius && out.size() < max_count && budget > 0; ++radius) {
    std::vector<int> v(s, radius);
    for (;;) {
      bool on_shell = false;
      for (int x : v)
        if (std::abs(x) == radius) on_shell = true;
      if (on_shell) {
        if (--budget < 0) return;
        Matrix<K> g(n, n);
        for (int t = 0; t < s; ++t)
          if (v[t] != 0) g = g + basis[t].scaled(K(v[t]));
        if (!is_zero(determinant(g))) {
          Metric<K> m(std::move(g));
          bool fresh = true;
          for (const auto& seen : out)
            if (seen == m) fresh = false;
          if (fresh) {
            out.push_back(std::move(m));
            if (out.size() >= max_count) return;
          }
        }
      }
      int pos = s - 1;
      while (pos >= 0 && v[pos] == -radius) v[pos--] = radius;
      if (pos < 0) break;
      --v[pos];
    }
  }
}

}  // namespace detail

// Up to max_count nondegenerate ad-invariant metrics in deterministic search
// order. Without a sigma constraint, diagonal-pattern combinations are tried
// first (so the abelian algebra yields the identity metric); the general
// shell search follows.
template <class K>
std::vector<Metric<K>> find_adinvariant_metrics(const LieAlgebra<K>& alg,
                                                const std::vector<int>* sigma,
                                                std::size_t max_count) {
  int n = alg.dim();
  std::vector<Matrix<K>> basis = adinvariant_form_space(alg);
  std::vector<Metric<K>> out;
  if (sigma) basis = detail::restrict_to_sigma(basis, n, *sigma);
  if (basis.empty() || detail::has_common_kernel(basis, n)) return out;
  if (!sigma) {
    std::vector<int> identity_sigma(n + 1);
    for (int i = 1; i <= n; ++i) identity_sigma[i] = i;
    std::vector<Matrix<K>> diagonal = detail::restrict_to_sigma(basis, n, identity_sigma);
    detail::enumerate_nondegenerate(diagonal, n, max_count, out);
  }
  detail::enumerate_nondegenerate(basis, n, max_count, out);
  return out;
}

template <class K>
std::optional<Metric<K>> find_adinvariant_metric(const LieAlgebra<K>& alg,
                                                 const std::vector<int>* sigma = nullptr) {
  std::vector<Metric<K>> found = find_adinvariant_metrics(alg, sigma, 1);
  if (found.empty()) return std::nullopt;
  return std::move(found.front());
}

// Enumerates involutions compatible with the support of the form space and
// returns the first sigma (lexicographic pairing order) admitting a
// sigma-diagonal nondegenerate metric, with the metric.
template <class K>
std::optional<std::pair<std::vector<int>, Metric<K>>> find_sigma_diagonal_metric(
    const LieAlgebra<K>& alg) {
  int n = alg.dim();
  std::vector<Matrix<K>> basis = adinvariant_form_space(alg);
  if (basis.empty()) return std::nullopt;
  // Allowed pairs: positions where some form in the space is nonzero.
  std::vector<std::vector<bool>> allowed(n + 1, std::vector<bool>(n + 1, false));
  for (const auto& b : basis)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (!is_zero(b(i, j))) allowed[i + 1][j + 1] = true;

  std::vector<int> sigma(n + 1, 0);
  std::optional<std::pair<std::vector<int>, Metric<K>>> result;
  auto backtrack = [&](auto&& self, int i) -> bool {
    if (result) return true;
    while (i <= n && sigma[i] != 0) ++i;
    if (i > n) {
      std::vector<Metric<K>> found = find_adinvariant_metrics(alg, &sigma, 1);
      if (!found.empty()) {
        result = std::make_pair(sigma, std::move(found.front()));
        return true;
      }
      return false;
    }
    for (int j = i; j <= n; ++j) {
      if (sigma[j] != 0 && j != i) continue;
      if (!allowed[i][j]) continue;
      sigma[i] = j;
      sigma[j] = i;
      if (self(self, i + 1)) return true;
      sigma[i] = 0;
      if (j != i) sigma[j] = 0;
    }
    return false;
  };
  backtrack(backtrack, 1);
  return result;
}

// True iff Tr D = 0 for every derivation.
template <class K>
bool all_derivations_traceless(const LieAlgebra<K>& alg, const MapSpace<K>* der = nullptr) {
  MapSpace<K> local;
  const MapSpace<K>& ders = der ? *der : (local = derivation_space(alg));
  for (const auto& d : ders.basis())
    if (!is_zero(d.trace())) return false;
  return true;
}

template <class K>
struct CentralSplit {
  Subspace<K> m;       // abelian nondegenerate central ideal
  Subspace<K> gtilde;  // orthogonal complement: ideal whose center lies in its commutator
};

// Splits g = m + gtilde when the center is not contained in the commutator;
// nullopt when it is (the split does not apply).
template <class K>
std::optional<CentralSplit<K>> central_split(const LieAlgebra<K>& alg, const Metric<K>& g) {
  if (!g.nondegenerate() || !is_adinvariant(alg, g))
    throw InvalidError("central_split: metric must be nondegenerate and ad-invariant");
  int n = alg.dim();
  Subspace<K> z = center(alg);
  Subspace<K> comm = derived_subalgebra(alg);
  Subspace<K> zc = z.intersect(comm);
  if (zc.dim() == z.dim()) return std::nullopt;

  // Echelon complement of (z cap g') inside z.
  EchelonSolver<K> ext(n);
  for (const auto& b : zc.basis()) ext.add_row(b);
  std::vector<std::vector<K>> m_gens;
  for (const auto& b : z.basis())
    if (ext.add_row(b)) m_gens.push_back(b);
  Subspace<K> m = Subspace<K>::span(n, m_gens);

  Matrix<K> gram(m.dim(), m.dim());
  for (int a = 0; a < m.dim(); ++a)
    for (int b = 0; b < m.dim(); ++b) gram(a, b) = g.pair(m.basis()[a], m.basis()[b]);
  if (rank(gram) != m.dim())
    throw CertificateError("central_split: chosen central complement is degenerate");

  EchelonSolver<K> perp(n);
  for (const auto& b : m.basis()) {
    std::vector<K> row(n, K(0));
    for (int j = 0; j < n; ++j) {
      K acc = K(0);
      for (int i = 0; i < n; ++i)
        if (!is_zero(b[i])) acc += b[i] * g.matrix()(i, j);
      row[j] = acc;
    }
    perp.add_row(row);
  }
  Subspace<K> gtilde = Subspace<K>::span(n, perp.kernel_basis());

  for (int i = 1; i <= n; ++i)
    for (const auto& b : gtilde.basis())
      if (!gtilde.contains(alg.bracket(basis_vector<K>(n, i), b)))
        throw CertificateError("central_split: orthogonal complement is not an ideal");
  if (gtilde.dim() > 0) {
    LieAlgebra<K> sub = subalgebra(alg, gtilde);
    if (!derived_subalgebra(sub).contains(center(sub)))
      throw CertificateError("central_split: center of gtilde not inside its commutator");
  }
  return CentralSplit<K>{std::move(m), std::move(gtilde)};
}

template <class K>
struct SelfAdjointClass {
  enum Kind { ScalarPlusNilpotent, ComplexPair, Unclassified } kind = Unclassified;
  Rational a;
  Rational b;      // ComplexPair only
  Matrix<K> part;  // nilpotent part, or J
  std::string note;
};

// Structure of a self-adjoint ad-invariant endomorphism on an irreducible
// algebra: a id + nilpotent when the characteristic polynomial is (x-a)^n,
// or a id + b J + nilpotent-free with J^2 = -id when it is ((x-a)^2+b^2)^m.
// Anything else is honestly Unclassified.
template <class K>
SelfAdjointClass<K> classify_selfadjoint(const LieAlgebra<K>& alg, const Metric<K>& g,
                                         const Matrix<K>& phi) {
  int n = alg.dim();
  if (!is_adinvariant_endo(alg, phi) || adjoint(phi, g) != phi)
    throw InvalidError("classify_selfadjoint: map is not in S_g");
  Polynomial<K> chi = characteristic_polynomial(phi);
  Polynomial<K> sf_den = poly_gcd(chi, chi.derivative());
  Polynomial<K> sf = chi.divmod(sf_den).first.monic();

  SelfAdjointClass<K> out;
  out.part = Matrix<K>(n, n);
  if (sf.degree() == 1) {
    K ak = -sf[0];
    if (!FieldTraits<K>::is_rational(ak)) {
      out.note = "single eigenvalue is not rational";
      return out;
    }
    out.kind = SelfAdjointClass<K>::ScalarPlusNilpotent;
    out.a = FieldTraits<K>::rational_part(ak);
    Matrix<K> nilp = phi;
    for (int i = 0; i < n; ++i) nilp(i, i) -= ak;
    if (!nilp.power(n).is_zero_matrix())
      throw CertificateError("classify_selfadjoint: residual part is not nilpotent");
    out.part = std::move(nilp);
    return out;
  }
  if (sf.degree() == 2 && n % 2 == 0 && sf.power(n / 2) == chi.monic()) {
    K c = sf[1], d = sf[0];
    if (!FieldTraits<K>::is_rational(c) || !FieldTraits<K>::is_rational(d)) {
      out.note = "quadratic factor is not rational";
      return out;
    }
    Rational a = -FieldTraits<K>::rational_part(c) / 2;
    Rational b2 = FieldTraits<K>::rational_part(d) - a * a;
    if (!is_positive(b2)) {
      out.note = "two distinct eigenvalue classes (irreducibility precondition violated)";
      return out;
    }
    Rational b = rational_sqrt(b2);
    if (is_zero(b)) {
      out.note = "imaginary part is not rational";
      return out;
    }
    // psi = (phi - a)/b satisfies psi^2 = -(id - u) with u nilpotent;
    // J = psi (id - u)^(-1/2) via the truncated binomial series, exact.
    Matrix<K> psi = phi;
    K ak = FieldTraits<K>::from_rational(a), bk = FieldTraits<K>::from_rational(b);
    for (int i = 0; i < n; ++i) psi(i, i) -= ak;
    psi = psi.scaled(K(1) / bk);
    Matrix<K> u = psi * psi + Matrix<K>::identity(n);
    Matrix<K> series = Matrix<K>::identity(n);
    Matrix<K> upow = Matrix<K>::identity(n);
    Rational coef(1);
    for (int k = 1; k < n; ++k) {
      coef = coef * Rational(2 * k - 1) / Rational(2 * k);
      upow = upow * u;
      if (upow.is_zero_matrix()) break;
      series = series + upow.scaled(FieldTraits<K>::from_rational(coef));
    }
    Matrix<K> j = psi * series;
    if (!(j * j + Matrix<K>::identity(n)).is_zero_matrix())
      throw CertificateError("classify_selfadjoint: J^2 != -id");
    if (!is_adinvariant_endo(alg, j) || adjoint(j, g) != j)
      throw CertificateError("classify_selfadjoint: extracted J is not in S_g");
    out.kind = SelfAdjointClass<K>::ComplexPair;
    out.a = a;
    out.b = b;
    out.part = std::move(j);
    return out;
  }
  out.note = "characteristic polynomial has more than one irreducible factor";
  return out;
}

}  // namespace liesol

#endif
