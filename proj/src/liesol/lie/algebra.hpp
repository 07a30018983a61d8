#ifndef LIESOL_LIE_ALGEBRA_HPP
#define LIESOL_LIE_ALGEBRA_HPP

#include <algorithm>
#include <string>
#include <tuple>
#include <vector>

#include "liesol/errors.hpp"
#include "liesol/exact/matrix.hpp"
#include "liesol/exact/scalar.hpp"

namespace liesol {

// One structure constant c^k_{ij} with i < j; antisymmetry is implied.
template <class K>
struct BracketTerm {
  int i, j, k;
  K c;
};

template <class K>
struct JacobiViolation {
  int i, j, k;                 // offending triple (1-based)
  std::vector<K> jacobiator;   // cyclic sum, nonzero
};

// Finite-dimensional Lie algebra given by structure constants over an exact
// field. Instances are immutable after construction; the Jacobi identity is
// validated eagerly unless explicitly deferred.
template <class K>
class LieAlgebra {
public:
  using value_type = K;

  static LieAlgebra create(int dim, std::vector<BracketTerm<K>> terms) {
    LieAlgebra alg = create_unchecked(dim, std::move(terms));
    auto violations = alg.check_jacobi();
    if (!violations.empty()) {
      const auto& v = violations.front();
      throw JacobiError("Jacobi identity fails at triple (" + std::to_string(v.i) + "," +
                        std::to_string(v.j) + "," + std::to_string(v.k) + ")" +
                        (violations.size() > 1
                             ? " and " + std::to_string(violations.size() - 1) + " more"
                             : ""));
    }
    alg.jacobi_checked_ = true;
    return alg;
  }

  static LieAlgebra create_unchecked(int dim, std::vector<BracketTerm<K>> terms) {
    LieAlgebra alg;
    alg.n_ = dim;
    for (auto& t : terms) {
      if (t.i == t.j) throw InvalidError("structure constant with i == j");
      if (t.i > t.j) {
        std::swap(t.i, t.j);
        t.c = -t.c;
      }
      if (t.i < 1 || t.j > dim || t.k < 1 || t.k > dim)
        throw InvalidError("structure constant index out of range");
    }
    std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
      return std::tie(a.i, a.j, a.k) < std::tie(b.i, b.j, b.k);
    });
    // Merge duplicates, drop zeros.
    for (auto& t : terms) {
      if (!alg.terms_.empty()) {
        auto& last = alg.terms_.back();
        if (last.i == t.i && last.j == t.j && last.k == t.k) {
          last.c += t.c;
          continue;
        }
      }
      alg.terms_.push_back(std::move(t));
    }
    std::erase_if(alg.terms_, [](const BracketTerm<K>& t) { return is_zero(t.c); });
    return alg;
  }

  static LieAlgebra abelian(int dim) { return create(dim, {}); }

  int dim() const { return n_; }
  const std::vector<BracketTerm<K>>& terms() const { return terms_; }
  bool jacobi_checked() const { return jacobi_checked_; }

  // [e_i, e_j] as a coefficient vector (0-based entries, 1-based arguments).
  std::vector<K> bracket_basis(int i, int j) const {
    std::vector<K> out(n_, K(0));
    if (i == j) return out;
    bool flip = i > j;
    if (flip) std::swap(i, j);
    for (const auto& t : terms_) {
      if (t.i == i && t.j == j) out[t.k - 1] = flip ? -t.c : t.c;
    }
    return out;
  }

  std::vector<K> bracket(const std::vector<K>& x, const std::vector<K>& y) const {
    std::vector<K> out(n_, K(0));
    for (const auto& t : terms_) {
      K coef = x[t.i - 1] * y[t.j - 1] - x[t.j - 1] * y[t.i - 1];
      if (!is_zero(coef)) out[t.k - 1] += t.c * coef;
    }
    return out;
  }

  // ad(e_i), with (ad e_i)_{kj} = c^k_{ij}.
  Matrix<K> ad_basis(int i) const {
    Matrix<K> m(n_, n_);
    for (const auto& t : terms_) {
      if (t.i == i) m(t.k - 1, t.j - 1) += t.c;
      if (t.j == i) m(t.k - 1, t.i - 1) -= t.c;
    }
    return m;
  }

  Matrix<K> ad(const std::vector<K>& x) const {
    Matrix<K> m(n_, n_);
    for (const auto& t : terms_) {
      if (!is_zero(x[t.i - 1])) {
        m(t.k - 1, t.j - 1) += x[t.i - 1] * t.c;
      }
      if (!is_zero(x[t.j - 1])) {
        m(t.k - 1, t.i - 1) -= x[t.j - 1] * t.c;
      }
    }
    return m;
  }

  std::vector<JacobiViolation<K>> check_jacobi() const {
    std::vector<JacobiViolation<K>> violations;
    for (int i = 1; i <= n_; ++i)
      for (int j = i + 1; j <= n_; ++j)
        for (int k = j + 1; k <= n_; ++k) {
          std::vector<K> acc(n_, K(0));
          accumulate_double_bracket(acc, i, j, k);
          accumulate_double_bracket(acc, j, k, i);
          accumulate_double_bracket(acc, k, i, j);
          bool bad = false;
          for (const K& v : acc)
            if (!is_zero(v)) bad = true;
          if (bad) violations.push_back({i, j, k, std::move(acc)});
        }
    return violations;
  }

  // Same structure constants viewed over a larger field or with a twist.
  template <class K2, class F>
  LieAlgebra<K2> map_constants(F&& f) const {
    std::vector<BracketTerm<K2>> terms;
    terms.reserve(terms_.size());
    for (const auto& t : terms_) terms.push_back({t.i, t.j, t.k, f(t.c)});
    return LieAlgebra<K2>::create_unchecked(n_, std::move(terms));
  }

  friend bool operator==(const LieAlgebra& a, const LieAlgebra& b) {
    if (a.n_ != b.n_ || a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t t = 0; t < a.terms_.size(); ++t) {
      const auto& x = a.terms_[t];
      const auto& y = b.terms_[t];
      if (x.i != y.i || x.j != y.j || x.k != y.k || !(x.c == y.c)) return false;
    }
    return true;
  }

private:
  void accumulate_double_bracket(std::vector<K>& acc, int a, int b, int c) const {
    // acc += [[e_a, e_b], e_c]
    std::vector<K> inner = bracket_basis(a, b);
    for (int m = 1; m <= n_; ++m) {
      if (is_zero(inner[m - 1])) continue;
      std::vector<K> outer = bracket_basis(m, c);
      for (int k = 0; k < n_; ++k)
        if (!is_zero(outer[k])) acc[k] += inner[m - 1] * outer[k];
    }
  }

  int n_ = 0;
  std::vector<BracketTerm<K>> terms_;
  bool jacobi_checked_ = false;
};

// x -> -x is an isomorphism onto the algebra with all constants negated;
// used to test convention invariance.
template <class K>
LieAlgebra<K> sign_flipped(const LieAlgebra<K>& alg) {
  std::vector<BracketTerm<K>> terms;
  for (const auto& t : alg.terms()) terms.push_back({t.i, t.j, t.k, -t.c});
  return LieAlgebra<K>::create(alg.dim(), std::move(terms));
}

}  // namespace liesol

#endif
