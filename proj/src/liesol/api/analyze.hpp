#ifndef LIESOL_API_ANALYZE_HPP
#define LIESOL_API_ANALYZE_HPP

#include "liesol/api/json_io.hpp"

namespace liesol {

// Full structural report for one algebra with an optional metric; stable key
// order, deterministic content.
template <class K>
ordered_json analyze(const LieAlgebra<K>& alg, const Metric<K>* metric);

extern template ordered_json analyze<Rational>(const LieAlgebra<Rational>&,
                                               const Metric<Rational>*);
extern template ordered_json analyze<Gaussian>(const LieAlgebra<Gaussian>&,
                                               const Metric<Gaussian>*);

}  // namespace liesol

#endif
