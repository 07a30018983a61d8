#include "liesol/exact/factor.hpp"

#include <algorithm>

#include "liesol/errors.hpp"

namespace liesol {

namespace {

Integer pollard_brent(const Integer& n, unsigned long seed) {
  // n odd composite, not a prime power of interest; returns a nontrivial factor.
  Integer y(seed % 1000 + 2), c(seed % 97 + 1), m(128);
  Integer g(1), r(1), q(1), x, ys;
  while (g == 1) {
    x = y;
    for (Integer i(0); i < r; ++i) y = (y * y + c) % n;
    Integer k(0);
    while (k < r && g == 1) {
      ys = y;
      Integer rk = r - k;
      Integer lim = std::min(m, rk);
      for (Integer i(0); i < lim; ++i) {
        y = (y * y + c) % n;
        q = q * abs(x - y) % n;
      }
      mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
      k += m;
    }
    r *= 2;
  }
  if (g == n) {
    do {
      ys = (ys * ys + c) % n;
      Integer d = abs(x - ys);
      mpz_gcd(g.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
    } while (g == 1);
  }
  return g;
}

void factor_rec(Integer n, std::map<Integer, int>& out) {
  if (n == 1) return;
  if (mpz_probab_prime_p(n.get_mpz_t(), 40) != 0) {
    out[n] += 1;
    return;
  }
  Integer d = n;
  for (unsigned long seed = 1; d == n; ++seed) {
    if (seed > 64) throw InvalidError("integer factorization did not converge");
    d = pollard_brent(n, seed);
  }
  factor_rec(d, out);
  factor_rec(n / d, out);
}

}  // namespace

std::map<Integer, int> factorize(Integer n) {
  if (sgn(n) == 0) throw InvalidError("factorize(0)");
  n = abs(n);
  std::map<Integer, int> out;
  for (Integer p : {Integer(2), Integer(3), Integer(5), Integer(7)}) {
    while (n % p == 0) {
      out[p] += 1;
      n /= p;
    }
  }
  Integer p(11);
  while (p * p <= n && p < 65536) {
    while (n % p == 0) {
      out[p] += 1;
      n /= p;
    }
    p += 2;
  }
  if (n > 1) factor_rec(n, out);
  return out;
}

std::vector<Integer> positive_divisors(const Integer& n) {
  auto fac = factorize(n);
  std::vector<Integer> divs{Integer(1)};
  for (const auto& [p, e] : fac) {
    std::size_t base = divs.size();
    Integer pk(1);
    for (int k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

}  // namespace liesol
