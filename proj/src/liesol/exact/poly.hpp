#ifndef LIESOL_EXACT_POLY_HPP
#define LIESOL_EXACT_POLY_HPP

#include <utility>
#include <vector>

#include "liesol/exact/factor.hpp"
#include "liesol/exact/matrix.hpp"
#include "liesol/exact/scalar.hpp"

namespace liesol {

// Dense polynomial, coefficients indexed by degree. Leading coefficient is
// nonzero unless the polynomial is zero (empty coefficient list).
template <class K>
class Polynomial {
public:
  Polynomial() = default;
  explicit Polynomial(std::vector<K> coeffs) : c_(std::move(coeffs)) { trim(); }
  static Polynomial constant(const K& v) { return Polynomial(std::vector<K>{v}); }
  static Polynomial x_minus(const K& r) { return Polynomial(std::vector<K>{-r, K(1)}); }

  bool is_zero_poly() const { return c_.empty(); }
  int degree() const { return int(c_.size()) - 1; }  // -1 for the zero polynomial
  const std::vector<K>& coeffs() const { return c_; }
  const K& operator[](int d) const { return c_[d]; }
  const K& leading() const { return c_.back(); }

  K eval(const K& x) const {
    K acc = K(0);
    for (int d = degree(); d >= 0; --d) acc = acc * x + c_[d];
    return acc;
  }

  Polynomial operator+(const Polynomial& o) const {
    std::vector<K> r(std::max(c_.size(), o.c_.size()), K(0));
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
    return Polynomial(std::move(r));
  }
  Polynomial operator-(const Polynomial& o) const {
    std::vector<K> r(std::max(c_.size(), o.c_.size()), K(0));
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] -= o.c_[i];
    return Polynomial(std::move(r));
  }
  Polynomial operator*(const Polynomial& o) const {
    if (is_zero_poly() || o.is_zero_poly()) return {};
    std::vector<K> r(c_.size() + o.c_.size() - 1, K(0));
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (is_zero(c_[i])) continue;
      for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    }
    return Polynomial(std::move(r));
  }
  Polynomial scaled(const K& f) const {
    std::vector<K> r = c_;
    for (K& v : r) v = v * f;
    return Polynomial(std::move(r));
  }

  // Exact division with remainder.
  std::pair<Polynomial, Polynomial> divmod(const Polynomial& d) const {
    if (d.is_zero_poly()) throw InvalidError("polynomial division by zero");
    std::vector<K> rem = c_;
    std::vector<K> quot;
    int dd = d.degree();
    if (degree() >= dd) quot.assign(degree() - dd + 1, K(0));
    for (int k = degree() - dd; k >= 0; --k) {
      K f = rem[k + dd] / d.leading();
      quot[k] = f;
      if (is_zero(f)) continue;
      for (int j = 0; j <= dd; ++j) rem[k + j] = rem[k + j] - f * d[j];
    }
    return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
  }

  Polynomial derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<K> r(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * K(int(i));
    return Polynomial(std::move(r));
  }

  Polynomial monic() const {
    if (is_zero_poly()) return *this;
    return scaled(K(1) / leading());
  }

  Polynomial power(int e) const {
    Polynomial r = constant(K(1));
    Polynomial b = *this;
    while (e > 0) {
      if (e & 1) r = r * b;
      b = b * b;
      e >>= 1;
    }
    return r;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

private:
  void trim() {
    while (!c_.empty() && is_zero(c_.back())) c_.pop_back();
  }
  std::vector<K> c_;
};

template <class K>
Polynomial<K> poly_gcd(Polynomial<K> a, Polynomial<K> b) {
  while (!b.is_zero_poly()) {
    Polynomial<K> r = a.divmod(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

// Characteristic polynomial via the Faddeev-LeVerrier recursion (exact in
// characteristic zero).
template <class K>
Polynomial<K> characteristic_polynomial(const Matrix<K>& a) {
  if (a.rows() != a.cols()) throw InvalidError("characteristic polynomial of non-square matrix");
  int n = a.rows();
  std::vector<K> coeff(n + 1, K(0));
  coeff[n] = K(1);
  Matrix<K> m(n, n);
  for (int k = 1; k <= n; ++k) {
    Matrix<K> step = a * m;
    for (int i = 0; i < n; ++i) step(i, i) += coeff[n - k + 1];
    m = std::move(step);
    K t = (a * m).trace();
    coeff[n - k] = -(t / K(k));
  }
  return Polynomial<K>(std::move(coeff));
}

struct RationalRoots {
  std::vector<std::pair<Rational, int>> roots;  // (root, algebraic multiplicity)
  bool split = false;  // true iff the polynomial is a product of rational linear factors
  int remaining_degree = 0;
};

namespace detail {

// Candidate rational roots of a rational-coefficient polynomial with nonzero
// constant term: p/q with p | a0 and q | an after clearing denominators.
inline std::vector<Rational> rational_root_candidates(const Polynomial<Rational>& p) {
  Integer den_lcm(1);
  for (const Rational& c : p.coeffs())
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
  std::vector<Integer> zc;
  zc.reserve(p.coeffs().size());
  Integer content(0);
  for (const Rational& c : p.coeffs()) {
    Rational scaled = c * Rational(den_lcm);
    zc.push_back(scaled.get_num());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), zc.back().get_mpz_t());
  }
  if (content > 1)
    for (Integer& v : zc) v /= content;
  const Integer& a0 = zc.front();
  const Integer& an = zc.back();
  std::vector<Rational> cands;
  for (const Integer& num : positive_divisors(a0))
    for (const Integer& den : positive_divisors(an)) {
      Integer g;
      mpz_gcd(g.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
      if (g != 1) continue;
      Rational r(num, den);
      r.canonicalize();
      cands.push_back(r);
      cands.push_back(-r);
    }
  std::sort(cands.begin(), cands.end());
  cands.erase(std::unique(cands.begin(), cands.end()), cands.end());
  return cands;
}

}  // namespace detail

inline Rational imaginary_part_for_roots(const Rational&) { return Rational(0); }
inline Rational imaginary_part_for_roots(const Gaussian& g) { return g.im; }

// Roots in Q of a polynomial over K, with multiplicities. The split flag
// reports whether the polynomial factors completely into rational linear
// factors; factorization beyond rational roots is out of scope, so over
// Q(i) a nonsplit verdict only means "no further rational roots".
template <class K>
RationalRoots rational_roots(Polynomial<K> p) {
  if (p.is_zero_poly()) throw InvalidError("rational_roots of the zero polynomial");
  RationalRoots out;
  // Strip x^v.
  int v = 0;
  while (v <= p.degree() && is_zero(p[v])) ++v;
  if (v > 0) {
    std::vector<K> shifted(p.coeffs().begin() + v, p.coeffs().end());
    p = Polynomial<K>(std::move(shifted));
    out.roots.emplace_back(Rational(0), v);
  }
  if (p.degree() > 0) {
    // Candidates come from a rational-coefficient companion: the polynomial
    // itself over Q, or the gcd of real and imaginary parts over Q(i).
    std::vector<Rational> re(p.degree() + 1), im(p.degree() + 1);
    bool has_im = false;
    for (int d = 0; d <= p.degree(); ++d) {
      if (FieldTraits<K>::is_rational(p[d])) {
        re[d] = FieldTraits<K>::rational_part(p[d]);
      } else {
        has_im = true;
        re[d] = FieldTraits<K>::rational_part(p[d]);
        im[d] = imaginary_part_for_roots(p[d]);
      }
    }
    Polynomial<Rational> companion(std::move(re));
    if (has_im) companion = poly_gcd(companion, Polynomial<Rational>(std::move(im)));
    std::vector<Rational> cands;
    if (!companion.is_zero_poly() && companion.degree() >= 1)
      cands = detail::rational_root_candidates(companion);
    for (const Rational& r : cands) {
      K rk = FieldTraits<K>::from_rational(r);
      if (!is_zero(p.eval(rk))) continue;
      int mult = 0;
      Polynomial<K> lin = Polynomial<K>::x_minus(rk);
      for (;;) {
        auto [q, rem] = p.divmod(lin);
        if (!rem.is_zero_poly()) break;
        p = std::move(q);
        ++mult;
      }
      if (mult > 0) out.roots.emplace_back(r, mult);
    }
  }
  out.remaining_degree = std::max(p.degree(), 0);
  out.split = (p.degree() <= 0);
  std::sort(out.roots.begin(), out.roots.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

// Rational eigenvalues of a square matrix with algebraic multiplicities,
// plus a flag reporting whether the characteristic polynomial splits into
// rational linear factors.
template <class K>
RationalRoots rational_eigenvalues(const Matrix<K>& m) {
  return rational_roots(characteristic_polynomial(m));
}

}  // namespace liesol

#endif
