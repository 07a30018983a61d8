#ifndef LIESOL_API_JSON_IO_HPP
#define LIESOL_API_JSON_IO_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "liesol/cons/build.hpp"
#include "liesol/nik/nik.hpp"

namespace liesol {

using ordered_json = nlohmann::ordered_json;

template <class K>
ordered_json matrix_to_json(const Matrix<K>& m) {
  ordered_json rows = ordered_json::array();
  for (int i = 0; i < m.rows(); ++i) {
    ordered_json row = ordered_json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(scalar_str(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

template <class K>
Matrix<K> matrix_from_json(const ordered_json& j) {
  if (!j.is_array()) throw InvalidError("matrix JSON must be an array of rows");
  if (j.empty()) return Matrix<K>(0, 0);
  int rows = int(j.size());
  int cols = int(j.at(0).size());
  Matrix<K> m(rows, cols);
  for (int i = 0; i < rows; ++i) {
    if (int(j.at(i).size()) != cols) throw InvalidError("ragged matrix JSON");
    for (int c = 0; c < cols; ++c)
      m(i, c) = FieldTraits<K>::parse(j.at(i).at(c).get<std::string>());
  }
  return m;
}

template <class K>
ordered_json algebra_to_json(const LieAlgebra<K>& alg) {
  ordered_json out;
  out["dim"] = alg.dim();
  out["field"] = FieldTraits<K>::name();
  ordered_json brackets = ordered_json::array();
  for (const auto& t : alg.terms()) {
    ordered_json term;
    term["i"] = t.i;
    term["j"] = t.j;
    term["k"] = t.k;
    term["c"] = scalar_str(t.c);
    brackets.push_back(std::move(term));
  }
  out["brackets"] = std::move(brackets);
  return out;
}

template <class K>
LieAlgebra<K> algebra_from_json(const ordered_json& j, bool check_jacobi = true) {
  int dim = j.at("dim").get<int>();
  std::vector<BracketTerm<K>> terms;
  if (j.contains("brackets"))
    for (const auto& t : j.at("brackets")) {
      terms.push_back({t.at("i").get<int>(), t.at("j").get<int>(), t.at("k").get<int>(),
                       FieldTraits<K>::parse(t.at("c").get<std::string>())});
    }
  return check_jacobi ? LieAlgebra<K>::create(dim, std::move(terms))
                      : LieAlgebra<K>::create_unchecked(dim, std::move(terms));
}

template <class K>
ordered_json metric_to_json(const Metric<K>& g) {
  ordered_json entries = ordered_json::array();
  for (int i = 0; i < g.dim(); ++i)
    for (int j = i; j < g.dim(); ++j) {
      if (is_zero(g.matrix()(i, j))) continue;
      ordered_json e;
      e["i"] = i + 1;
      e["j"] = j + 1;
      e["c"] = scalar_str(g.matrix()(i, j));
      entries.push_back(std::move(e));
    }
  ordered_json out;
  out["dim"] = g.dim();
  out["entries"] = std::move(entries);
  return out;
}

template <class K>
Metric<K> metric_from_json(const ordered_json& j, int dim = -1) {
  int n = j.contains("dim") ? j.at("dim").get<int>() : dim;
  if (n < 0) throw InvalidError("metric JSON without dimension");
  Matrix<K> g(n, n);
  for (const auto& e : j.at("entries")) {
    int a = e.at("i").get<int>(), b = e.at("j").get<int>();
    if (a < 1 || a > n || b < 1 || b > n) throw InvalidError("metric JSON index out of range");
    K c = FieldTraits<K>::parse(e.at("c").get<std::string>());
    g(a - 1, b - 1) = c;
    if (a != b) g(b - 1, a - 1) = c;
  }
  return Metric<K>(std::move(g));
}

template <class K>
ordered_json nik_to_json(const NikResult<K>& nik) {
  ordered_json out;
  out["path"] = to_string(nik.path);
  ordered_json lambda = ordered_json::array();
  for (const Rational& x : nik.lambda) lambda.push_back(x.get_str());
  out["lambda"] = std::move(lambda);
  out["l"] = nik.l ? ordered_json(nik.l->get_str()) : ordered_json(nullptr);
  if (nik.a) out["a"] = nik.a->get_str();
  if (nik.a_boundary_warning) out["a_boundary_warning"] = true;
  out["checked_dim"] = nik.checked_dim;
  out["certified"] = true;
  return out;
}

template <class K>
ordered_json double_extension_data_to_json(const DoubleExtensionData<K>& d) {
  ordered_json out;
  out["d"] = algebra_to_json(d.d);
  out["g_d"] = metric_to_json(d.g_d);
  out["h"] = algebra_to_json(d.h);
  ordered_json pis = ordered_json::array();
  for (const auto& p : d.pi) pis.push_back(matrix_to_json(p));
  out["pi"] = std::move(pis);
  out["g_h"] = d.g_h ? metric_to_json(*d.g_h) : ordered_json(nullptr);
  return out;
}

template <class K>
DoubleExtensionData<K> double_extension_data_from_json(const ordered_json& j) {
  DoubleExtensionData<K> data{algebra_from_json<K>(j.at("d")),
                              metric_from_json<K>(j.at("g_d")),
                              algebra_from_json<K>(j.at("h")),
                              {},
                              std::nullopt};
  for (const auto& p : j.at("pi")) data.pi.push_back(matrix_from_json<K>(p));
  if (j.contains("g_h") && !j.at("g_h").is_null())
    data.g_h = metric_from_json<K>(j.at("g_h"));
  return data;
}

}  // namespace liesol

#endif
