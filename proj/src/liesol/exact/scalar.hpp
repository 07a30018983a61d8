#ifndef LIESOL_EXACT_SCALAR_HPP
#define LIESOL_EXACT_SCALAR_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>

#include "liesol/errors.hpp"

namespace liesol {

// Exact rational scalar. mpq_class keeps values canonical (gcd-reduced,
// positive denominator) as long as canonicalize() is called after raw
// construction; all arithmetic operators preserve canonical form.
using Rational = mpq_class;
using Integer = mpz_class;

inline bool is_zero(const Rational& x) { return sgn(x) == 0; }
inline bool is_positive(const Rational& x) { return sgn(x) > 0; }
inline bool is_negative(const Rational& x) { return sgn(x) < 0; }
inline Rational conj_of(const Rational& x) { return x; }

inline std::string scalar_str(const Rational& x) { return x.get_str(); }

Rational parse_rational(std::string_view text);

// Gaussian rational a + b*i over the rational field.
struct Gaussian {
  Rational re;
  Rational im;

  Gaussian() : re(0), im(0) {}
  Gaussian(int v) : re(v), im(0) {}  // NOLINT(google-explicit-constructor)
  Gaussian(const Rational& r) : re(r), im(0) {}  // NOLINT(google-explicit-constructor)
  Gaussian(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

  static Gaussian i() { return Gaussian(Rational(0), Rational(1)); }

  Gaussian operator-() const { return Gaussian(-re, -im); }
  Gaussian& operator+=(const Gaussian& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  Gaussian& operator-=(const Gaussian& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  Gaussian& operator*=(const Gaussian& o) {
    Rational r = re * o.re - im * o.im;
    Rational i = re * o.im + im * o.re;
    re = r;
    im = i;
    return *this;
  }
  Gaussian& operator/=(const Gaussian& o);

  friend Gaussian operator+(Gaussian a, const Gaussian& b) { return a += b; }
  friend Gaussian operator-(Gaussian a, const Gaussian& b) { return a -= b; }
  friend Gaussian operator*(Gaussian a, const Gaussian& b) { return a *= b; }
  friend Gaussian operator/(Gaussian a, const Gaussian& b) { return a /= b; }
  friend bool operator==(const Gaussian& a, const Gaussian& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const Gaussian& a, const Gaussian& b) { return !(a == b); }
};

inline bool is_zero(const Gaussian& x) { return is_zero(x.re) && is_zero(x.im); }
inline Gaussian conj_of(const Gaussian& x) { return Gaussian(x.re, -x.im); }

inline Gaussian& Gaussian::operator/=(const Gaussian& o) {
  if (is_zero(o)) throw InvalidError("division by zero");
  Rational n = o.re * o.re + o.im * o.im;
  Rational r = (re * o.re + im * o.im) / n;
  Rational i = (im * o.re - re * o.im) / n;
  re = r;
  im = i;
  return *this;
}

inline std::string scalar_str(const Gaussian& x) {
  if (is_zero(x.im)) return x.re.get_str();
  std::string s;
  if (is_zero(x.re)) {
    if (is_negative(x.im)) s += "-";
  } else {
    s += x.re.get_str();
    s += is_negative(x.im) ? "-" : "+";
  }
  Rational m = abs(x.im);
  s += m.get_str();
  s += "*i";
  return s;
}

Gaussian parse_gaussian(std::string_view text);

template <class K>
struct FieldTraits;

template <>
struct FieldTraits<Rational> {
  static const char* name() { return "Q"; }
  static Rational from_rational(const Rational& x) { return x; }
  static bool is_rational(const Rational&) { return true; }
  static Rational rational_part(const Rational& x) { return x; }
  static Rational parse(std::string_view t) { return parse_rational(t); }
};

template <>
struct FieldTraits<Gaussian> {
  static const char* name() { return "Q(i)"; }
  static Gaussian from_rational(const Rational& x) { return Gaussian(x); }
  static bool is_rational(const Gaussian& x) { return is_zero(x.im); }
  static Rational rational_part(const Gaussian& x) { return x.re; }
  static Gaussian parse(std::string_view t) { return parse_gaussian(t); }
};

}  // namespace liesol

#endif
