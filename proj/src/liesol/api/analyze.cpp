#include "liesol/api/analyze.hpp"

#include "liesol/cons/from_grading.hpp"
#include "liesol/lie/salamon.hpp"

namespace liesol {

template <class K>
ordered_json analyze(const LieAlgebra<K>& alg, const Metric<K>* metric) {
  ordered_json out;
  out["algebra"]["dim"] = alg.dim();
  out["algebra"]["field"] = FieldTraits<K>::name();
  out["algebra"]["salamon"] = render_salamon(alg);

  {
    ordered_json s;
    s["center_dim"] = center(alg).dim();
    s["derived_dim"] = derived_subalgebra(alg).dim();
    ordered_json ds = ordered_json::array(), lcs = ordered_json::array();
    for (const auto& t : derived_series(alg)) ds.push_back(t.dim());
    for (const auto& t : lower_central_series(alg)) lcs.push_back(t.dim());
    s["derived_series_dims"] = std::move(ds);
    s["lower_central_series_dims"] = std::move(lcs);
    s["solvable"] = is_solvable(alg);
    s["nilpotent"] = is_nilpotent(alg);
    s["nice"] = is_nice(alg).first;
    out["structure"] = std::move(s);
  }

  MapSpace<K> der = derivation_space(alg);
  out["derivations"]["dim"] = der.dim();
  out["derivations"]["all_traceless"] = all_derivations_traceless(alg, &der);

  {
    TstarVerdict<K> tv = tstar_solitary(alg);
    ordered_json t;
    t["solitary"] = tv.solitary;
    t["phi_dim"] = tv.phi_dim;
    t["psi_dim"] = tv.psi_dim;
    if (tv.witness) t["witness"] = matrix_to_json(*tv.witness);
    out["tstar_solitary"] = std::move(t);
  }

  if (is_nice(alg).first) {
    try {
      NikResult<K> nik = nikolayevsky_nice(alg, &der);
      out["nikolayevsky"] = nik_to_json(nik);
    } catch (const Error& e) {
      out["nikolayevsky"] = {{"error", e.what()}};
    }
  }

  if (metric) {
    ordered_json m;
    m["text"] = render_metric(*metric);
    m["nondegenerate"] = metric->nondegenerate();
    auto violation = check_adinvariant(alg, *metric);
    m["adinvariant"] = !violation.has_value();
    if (violation)
      m["adinvariance_violation"] = {violation->i, violation->j, violation->k};

    if (metric->nondegenerate()) {
      DerCapCo<K> dcc = der_cap_co(alg, *metric);
      m["der_cap_co_dim"] = dcc.dim();
      try {
        NikResult<K> nik = metric_nikolayevsky(alg, *metric);
        m["metric_nikolayevsky"] = nik_to_json(nik);
        if (!violation)
          m["solitary_by_positivity"] = to_string(solitary_by_positivity(nik));
      } catch (const UnsupportedError& e) {
        m["metric_nikolayevsky"] = {{"unsupported", e.what()}};
      }
    }

    if (metric->nondegenerate() && !violation) {
      SolitaryVerdict<K> v = classify_solitary(alg, *metric, &der);
      m["s_dim"] = v.s_dim;
      m["d_dim"] = v.d_dim;
      m["id_in_d"] = v.id_in_d;
      m["verdict"] = to_string(v.status);
      if (v.witness) m["witness"] = matrix_to_json(*v.witness);
      auto split = central_split(alg, *metric);
      m["central_split"]["applicable"] = split.has_value();
      if (split) {
        m["central_split"]["m_dim"] = split->m.dim();
        m["central_split"]["gtilde_dim"] = split->gtilde.dim();
      }
    }
    out["metric"] = std::move(m);
  }
  return out;
}

template ordered_json analyze<Rational>(const LieAlgebra<Rational>&, const Metric<Rational>*);
template ordered_json analyze<Gaussian>(const LieAlgebra<Gaussian>&, const Metric<Gaussian>*);

}  // namespace liesol
