#ifndef LIESOL_EXACT_FACTOR_HPP
#define LIESOL_EXACT_FACTOR_HPP

#include <map>
#include <vector>

#include "liesol/exact/scalar.hpp"

namespace liesol {

// Prime factorization of |n|, n != 0. Trial division for small primes,
// Miller-Rabin plus Pollard-Brent rho for the rest.
std::map<Integer, int> factorize(Integer n);

// All positive divisors of |n|, sorted ascending.
std::vector<Integer> positive_divisors(const Integer& n);

}  // namespace liesol

#endif
