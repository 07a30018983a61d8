#ifndef LIESOL_LIE_ANALYSIS_HPP
#define LIESOL_LIE_ANALYSIS_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "liesol/exact/echelon.hpp"
#include "liesol/exact/poly.hpp"
#include "liesol/lie/algebra.hpp"
#include "liesol/lie/mapspace.hpp"
#include "liesol/lie/subspace.hpp"

namespace liesol {

namespace detail {

// Accumulate sparse linear systems over matrix unknowns X_{ab}, flattened
// row-major as a*cols + b.
template <class K>
class MatrixSystem {
public:
  MatrixSystem(int unknown_rows, int unknown_cols, int extra = 0)
      : rows_(unknown_rows), cols_(unknown_cols), solver_(unknown_rows * unknown_cols + extra) {}

  void begin_row() { current_.clear(); }
  void add(int a, int b, const K& coef) {
    if (!is_zero(coef)) current_[a * cols_ + b] += coef;
  }
  void add_extra(int which, const K& coef) {
    if (!is_zero(coef)) current_[rows_ * cols_ + which] += coef;
  }
  void end_row() {
    SparseRow<K> row;
    for (auto& [c, v] : current_)
      if (!is_zero(v)) row.emplace_back(c, v);
    solver_.add_row(std::move(row));
  }

  std::vector<std::vector<K>> kernel() { return solver_.kernel_basis(); }

private:
  int rows_, cols_;
  EchelonSolver<K> solver_;
  std::map<int, K> current_;
};

}  // namespace detail

// Precomputed [e_i, e_j] coefficient vectors for system assembly.
template <class K>
class BracketTable {
public:
  explicit BracketTable(const LieAlgebra<K>& alg) : n_(alg.dim()), t_(std::size_t(n_) * n_) {
    for (int i = 1; i <= n_; ++i)
      for (int j = 1; j <= n_; ++j) t_[idx(i, j)] = alg.bracket_basis(i, j);
  }
  // 1-based arguments, 0-based entries.
  const std::vector<K>& operator()(int i, int j) const { return t_[idx(i, j)]; }
  int dim() const { return n_; }

private:
  std::size_t idx(int i, int j) const { return std::size_t(i - 1) * n_ + (j - 1); }
  int n_;
  std::vector<std::vector<K>> t_;
};

// Der(g): all D with D[x,y] = [Dx,y] + [x,Dy], as the kernel of the linear
// system ranging over basis pairs i<j.
template <class K>
MapSpace<K> derivation_space(const LieAlgebra<K>& alg) {
  int n = alg.dim();
  BracketTable<K> table(alg);
  detail::MatrixSystem<K> sys(n, n);
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
  return MapSpace<K>::from_flat(n, n, sys.kernel());
}

// Ad-invariant endomorphisms: phi with phi[x,y] = [x, phi y] for all x,y.
// The diagonal case x = y contributes the conditions [e_i, phi e_i] = 0,
// which are not consequences of the off-diagonal basis pairs.
template <class K>
MapSpace<K> adinvariant_endos(const LieAlgebra<K>& alg) {
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
  return MapSpace<K>::from_flat(n, n, sys.kernel());
}

template <class K>
std::vector<K> basis_vector(int n, int i) {
  std::vector<K> v(n, K(0));
  v[i - 1] = K(1);
  return v;
}

template <class K>
bool is_derivation(const LieAlgebra<K>& alg, const Matrix<K>& d) {
  int n = alg.dim();
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      std::vector<K> lhs = d.apply(alg.bracket_basis(i, j));
      std::vector<K> rhs = alg.bracket(d.col_vector(i - 1), basis_vector<K>(n, j));
      std::vector<K> rhs2 = alg.bracket(basis_vector<K>(n, i), d.col_vector(j - 1));
      for (int k = 0; k < n; ++k)
        if (!is_zero(lhs[k] - rhs[k] - rhs2[k])) return false;
    }
  return true;
}

template <class K>
bool is_adinvariant_endo(const LieAlgebra<K>& alg, const Matrix<K>& phi) {
  int n = alg.dim();
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      std::vector<K> lhs = phi.apply(alg.bracket_basis(i, j));
      std::vector<K> rhs = alg.bracket(basis_vector<K>(n, i), phi.col_vector(j - 1));
      for (int k = 0; k < n; ++k)
        if (!is_zero(lhs[k] - rhs[k])) return false;
    }
  return true;
}

// z(g) = {x : [x, e_j] = 0 for all j}.
template <class K>
Subspace<K> center(const LieAlgebra<K>& alg) {
  int n = alg.dim();
  EchelonSolver<K> solver(n);
  for (int j = 1; j <= n; ++j)
    for (int k = 1; k <= n; ++k) {
      std::vector<K> row(n, K(0));
      bool nonzero = false;
      for (int i = 1; i <= n; ++i) {
        K c = alg.bracket_basis(i, j)[k - 1];
        if (!is_zero(c)) {
          row[i - 1] = c;
          nonzero = true;
        }
      }
      if (nonzero) solver.add_row(row);
    }
  return Subspace<K>::span(n, solver.kernel_basis());
}

// Span of [U, V].
template <class K>
Subspace<K> bracket_span(const LieAlgebra<K>& alg, const Subspace<K>& u, const Subspace<K>& v) {
  std::vector<std::vector<K>> gens;
  for (const auto& x : u.basis())
    for (const auto& y : v.basis()) gens.push_back(alg.bracket(x, y));
  return Subspace<K>::span(alg.dim(), gens);
}

template <class K>
Subspace<K> derived_subalgebra(const LieAlgebra<K>& alg) {
  Subspace<K> full = Subspace<K>::full(alg.dim());
  return bracket_span(alg, full, full);
}

// g = g^(0) >= g^(1) = [g^(0), g^(0)] >= ... until stabilization.
template <class K>
std::vector<Subspace<K>> derived_series(const LieAlgebra<K>& alg) {
  std::vector<Subspace<K>> series{Subspace<K>::full(alg.dim())};
  for (;;) {
    Subspace<K> next = bracket_span(alg, series.back(), series.back());
    if (next.dim() == series.back().dim()) break;
    series.push_back(next);
    if (next.dim() == 0) break;
  }
  return series;
}

// g = g_0 >= g_1 = [g, g_0] >= ... until stabilization.
template <class K>
std::vector<Subspace<K>> lower_central_series(const LieAlgebra<K>& alg) {
  Subspace<K> full = Subspace<K>::full(alg.dim());
  std::vector<Subspace<K>> series{full};
  for (;;) {
    Subspace<K> next = bracket_span(alg, full, series.back());
    if (next.dim() == series.back().dim()) break;
    series.push_back(next);
    if (next.dim() == 0) break;
  }
  return series;
}

template <class K>
bool is_solvable(const LieAlgebra<K>& alg) {
  return derived_series(alg).back().dim() == 0;
}

template <class K>
bool is_nilpotent(const LieAlgebra<K>& alg) {
  return lower_central_series(alg).back().dim() == 0;
}

// Nice-basis diagram: arrows i -(j)-> k for c^k_{ij} != 0, stored for both
// orderings of i and j.
template <class K>
struct NiceDiagram {
  int nodes = 0;
  struct Arrow {
    int i, j, k;
    K c;
  };
  std::vector<Arrow> arrows;
};

// A basis is nice when each [e_i, e_j] is a multiple of a basis element and
// each contraction e_i -| de^j is a multiple of a dual basis element.
template <class K>
std::pair<bool, NiceDiagram<K>> is_nice(const LieAlgebra<K>& alg) {
  int n = alg.dim();
  NiceDiagram<K> diagram;
  diagram.nodes = n;
  std::map<std::pair<int, int>, int> bracket_target;   // (i,j) i<j -> k
  std::map<std::pair<int, int>, int> contraction_target;  // (i,k) -> j
  for (const auto& t : alg.terms()) {
    auto [it, inserted] = bracket_target.try_emplace({t.i, t.j}, t.k);
    if (!inserted && it->second != t.k) return {false, {}};
    auto [c1, ins1] = contraction_target.try_emplace({t.i, t.k}, t.j);
    if (!ins1 && c1->second != t.j) return {false, {}};
    auto [c2, ins2] = contraction_target.try_emplace({t.j, t.k}, t.i);
    if (!ins2 && c2->second != t.i) return {false, {}};
  }
  for (const auto& t : alg.terms()) {
    diagram.arrows.push_back({t.i, t.j, t.k, t.c});
    diagram.arrows.push_back({t.j, t.i, t.k, -t.c});
  }
  return {true, diagram};
}

template <class K>
struct Quotient {
  LieAlgebra<K> algebra;
  Matrix<K> projection;  // quotient-dim x n
};

// Quotient by an ideal, in the echelon complement basis.
template <class K>
Quotient<K> quotient(const LieAlgebra<K>& alg, const Subspace<K>& ideal) {
  int n = alg.dim();
  if (ideal.ambient() != n) throw InvalidError("quotient: ambient dimension mismatch");
  for (int i = 1; i <= n; ++i)
    for (const auto& b : ideal.basis())
      if (!ideal.contains(alg.bracket(basis_vector<K>(n, i), b)))
        throw InvalidError("quotient: subspace is not an ideal ([e_" + std::to_string(i) +
                           ", b] leaves it for a basis element b)");

  std::vector<int> pivots = ideal.pivot_cols();
  std::vector<bool> is_pivot(n, false);
  for (int p : pivots) is_pivot[p] = true;
  std::vector<int> comp;  // complement coordinates (0-based)
  for (int c = 0; c < n; ++c)
    if (!is_pivot[c]) comp.push_back(c);
  int q = int(comp.size());

  // Projection: reduce modulo the ideal's echelon basis, then read off the
  // complement coordinates.
  EchelonSolver<K> red(n);
  for (const auto& b : ideal.basis()) red.add_row(b);
  red.finalize();
  auto project = [&](const std::vector<K>& v) {
    std::vector<K> r = to_dense(red.reduce(to_sparse(v)), n);
    std::vector<K> out(q, K(0));
    for (int a = 0; a < q; ++a) out[a] = r[comp[a]];
    return out;
  };

  Matrix<K> proj(q, n);
  for (int i = 1; i <= n; ++i) {
    std::vector<K> p = project(basis_vector<K>(n, i));
    for (int a = 0; a < q; ++a) proj(a, i - 1) = p[a];
  }

  std::vector<BracketTerm<K>> terms;
  for (int a = 0; a < q; ++a)
    for (int b = a + 1; b < q; ++b) {
      std::vector<K> br =
          project(alg.bracket(basis_vector<K>(n, comp[a] + 1), basis_vector<K>(n, comp[b] + 1)));
      for (int k = 0; k < q; ++k)
        if (!is_zero(br[k])) terms.push_back({a + 1, b + 1, k + 1, br[k]});
    }
  return {LieAlgebra<K>::create(q, std::move(terms)), std::move(proj)};
}

// Restriction of the bracket to a subalgebra, in its echelon basis.
template <class K>
LieAlgebra<K> subalgebra(const LieAlgebra<K>& alg, const Subspace<K>& sub) {
  int m = sub.dim();
  EchelonSolver<K> coords(alg.dim());
  for (const auto& b : sub.basis()) coords.add_row(b);
  coords.finalize();
  std::vector<int> pivots = sub.pivot_cols();
  std::vector<BracketTerm<K>> terms;
  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b) {
      std::vector<K> br = alg.bracket(sub.basis()[a], sub.basis()[b]);
      if (!sub.contains(br)) throw InvalidError("subalgebra: subspace is not closed under bracket");
      // Coordinates in the echelon basis: since basis rows are RREF, the
      // coefficient along basis row r is the pivot-column entry.
      for (int r = 0; r < m; ++r) {
        K coef = br[pivots[r]];
        if (!is_zero(coef)) terms.push_back({a + 1, b + 1, r + 1, coef});
      }
    }
  return LieAlgebra<K>::create(m, std::move(terms));
}

struct SplitError {
  int remaining_degree;
};

// Generalized eigenspace decomposition along an ad-invariant endomorphism;
// each factor is verified to be an ideal and the sum must be everything.
template <class K>
std::vector<Subspace<K>> split_by_adinvariant(const LieAlgebra<K>& alg, const Matrix<K>& phi) {
  int n = alg.dim();
  if (!is_adinvariant_endo(alg, phi))
    throw InvalidError("split_by_adinvariant: map is not ad-invariant");
  RationalRoots roots = rational_eigenvalues(phi);
  if (!roots.split) {
    std::string detail = roots.remaining_degree <= 3
                             ? "an irreducible factor of degree " +
                                   std::to_string(roots.remaining_degree)
                             : "a rational-root-free factor of degree " +
                                   std::to_string(roots.remaining_degree);
    throw UnsupportedError(
        "split_by_adinvariant: characteristic polynomial does not split over the rationals (" +
        detail + "); complexify first if applicable");
  }
  std::vector<Subspace<K>> ideals;
  int total = 0;
  for (const auto& [lambda, mult] : roots.roots) {
    Matrix<K> shifted = phi;
    K lk = FieldTraits<K>::from_rational(lambda);
    for (int i = 0; i < n; ++i) shifted(i, i) -= lk;
    Matrix<K> power = shifted.power(n);
    Subspace<K> space = Subspace<K>::span(n, kernel_basis(power));
    if (space.dim() != mult)
      throw CertificateError("split_by_adinvariant: generalized eigenspace dimension mismatch");
    for (int i = 1; i <= n; ++i)
      for (const auto& b : space.basis())
        if (!space.contains(alg.bracket(basis_vector<K>(n, i), b)))
          throw CertificateError("split_by_adinvariant: eigenspace is not an ideal");
    total += space.dim();
    ideals.push_back(std::move(space));
  }
  if (total != n) throw CertificateError("split_by_adinvariant: eigenspaces do not fill the algebra");
  return ideals;
}

}  // namespace liesol

#endif
