#include "liesol/corpus/corpus.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

#include "liesol/cons/from_grading.hpp"
#include "liesol/lie/salamon.hpp"

namespace liesol {

namespace {

using Alg = LieAlgebra<Rational>;
using Met = Metric<Rational>;

std::vector<Rational> lambda_from_json(const ordered_json& arr) {
  std::vector<Rational> out;
  for (const auto& s : arr) out.push_back(parse_rational(s.get<std::string>()));
  return out;
}

std::string lambda_to_text(const std::vector<Rational>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += v[i].get_str();
  }
  return s + ")";
}

std::string sigma_to_text(const std::vector<int>& sigma) {
  std::string s;
  for (int i = 1; i < int(sigma.size()); ++i) {
    if (sigma[i] < i) continue;
    if (!s.empty()) s += ",";
    s += std::to_string(i) + ":" + std::to_string(sigma[i]);
  }
  return s;
}

struct FactContext {
  const Alg& alg;
  const std::optional<Met>& entry_metric;
  const ordered_json& fact;

  Met metric() const {
    if (fact.contains("metric"))
      return parse_metric<Rational>(fact.at("metric").get<std::string>(), alg.dim());
    if (!entry_metric) throw InvalidError("fact requires a metric but none is given");
    return *entry_metric;
  }
};

FactResult check_fact(const FactContext& ctx) {
  const ordered_json& f = ctx.fact;
  FactResult result;
  result.check = f.at("check").get<std::string>();
  result.anchor = f.value("anchor", "");
  result.pass = true;

  auto fail = [&](const std::string& detail) {
    result.pass = false;
    result.detail = detail;
  };
  auto expect_int = [&](int got) {
    int want = f.at("expect").get<int>();
    if (got != want) fail("expected " + std::to_string(want) + ", got " + std::to_string(got));
  };
  auto expect_bool = [&](bool got) {
    bool want = f.at("expect").get<bool>();
    if (got != want) fail(std::string("expected ") + (want ? "true" : "false"));
  };
  auto expect_str = [&](const std::string& got) {
    std::string want = f.at("expect").get<std::string>();
    if (got != want) fail("expected " + want + ", got " + got);
  };
  auto expect_lambda = [&](const std::vector<Rational>& got) {
    std::vector<Rational> want = lambda_from_json(f.at("lambda"));
    if (got != want) fail("expected " + lambda_to_text(want) + ", got " + lambda_to_text(got));
  };

  const std::string& check = result.check;
  const Alg& alg = ctx.alg;

  if (check == "jacobi_ok") {
    // Parsing already validated the bracket identity.
  } else if (check == "dim") {
    expect_int(alg.dim());
  } else if (check == "der_dim") {
    expect_int(derivation_space(alg).dim());
  } else if (check == "center_dim") {
    expect_int(center(alg).dim());
  } else if (check == "derived_dim") {
    expect_int(derived_subalgebra(alg).dim());
  } else if (check == "nice") {
    expect_bool(is_nice(alg).first);
  } else if (check == "solvable") {
    expect_bool(is_solvable(alg));
  } else if (check == "nilpotent") {
    expect_bool(is_nilpotent(alg));
  } else if (check == "traceless") {
    expect_bool(all_derivations_traceless(alg));
  } else if (check == "tstar") {
    expect_bool(tstar_solitary(alg).solitary);
  } else if (check == "adinvariant") {
    Met g = ctx.metric();
    if (auto viol = check_adinvariant(alg, g))
      fail("metric not ad-invariant at triple (" + std::to_string(viol->i) + "," +
           std::to_string(viol->j) + "," + std::to_string(viol->k) + ")");
  } else if (check == "metric_not_adinvariant") {
    Met g = ctx.metric();
    auto viol = check_adinvariant(alg, g);
    if (!viol) {
      fail("metric unexpectedly ad-invariant");
    } else {
      std::vector<int> want;
      for (const auto& x : f.at("expect")) want.push_back(x.get<int>());
      std::vector<int> got{viol->i, viol->j, viol->k};
      if (got != want)
        fail("violation at (" + std::to_string(got[0]) + "," + std::to_string(got[1]) + "," +
             std::to_string(got[2]) + ")");
    }
  } else if (check == "no_adinvariant_metric") {
    if (find_adinvariant_metric(alg)) fail("unexpected ad-invariant metric found");
  } else if (check == "find_metric") {
    auto found = find_adinvariant_metric(alg);
    if (!found) {
      fail("no metric found");
    } else {
      expect_str(render_metric(*found));
    }
  } else if (check == "sigma_metric") {
    auto found = find_sigma_diagonal_metric(alg);
    if (!found) {
      fail("no sigma-diagonal metric found");
    } else if (f.contains("sigma")) {
      std::string got = sigma_to_text(found->first);
      std::string want = f.at("sigma").get<std::string>();
      if (got != want) fail("sigma mismatch: expected " + want + ", got " + got);
    }
  } else if (check == "s_dim") {
    expect_int(selfadjoint_adinvariant_space(alg, ctx.metric()).dim());
  } else if (check == "d_dim") {
    expect_int(symmetrized_derivation_space(alg, ctx.metric()).dim());
  } else if (check == "id_in_d") {
    expect_bool(classify_solitary(alg, ctx.metric()).id_in_d);
  } else if (check == "verdict") {
    expect_str(to_string(classify_solitary(alg, ctx.metric()).status));
  } else if (check == "dercapco_dim") {
    expect_int(der_cap_co(alg, ctx.metric()).dim());
  } else if (check == "nik_nice") {
    expect_lambda(nikolayevsky_nice(alg).lambda);
  } else if (check == "metric_nik") {
    NikResult<Rational> nik = metric_nikolayevsky(alg, ctx.metric());
    expect_lambda(nik.lambda);
    if (result.pass && f.contains("path")) {
      std::string want = f.at("path").get<std::string>();
      if (to_string(nik.path) != want)
        fail(std::string("path mismatch: expected ") + want + ", got " + to_string(nik.path));
    }
  } else if (check == "cotangent_nik") {
    CotangentPackage<Rational> pkg = cotangent(alg);
    NikResult<Rational> nik = cotangent_nikolayevsky(pkg, alg);
    Rational want_a = parse_rational(f.at("a").get<std::string>());
    if (!nik.a || *nik.a != want_a) {
      fail("scaling factor mismatch: expected " + want_a.get_str() + ", got " +
           (nik.a ? nik.a->get_str() : std::string("none")));
    } else {
      expect_lambda(nik.lambda);
    }
  } else if (check == "positivity") {
    Met g = ctx.metric();
    NikResult<Rational> nik = metric_nikolayevsky(alg, g);
    PositivityVerdict verdict = solitary_by_positivity(nik);
    expect_str(to_string(verdict));
    // The sufficient condition must never contradict the classifier.
    if (result.pass && verdict == PositivityVerdict::ProvedSolitary &&
        classify_solitary(alg, g).status != SolitaryStatus::Solitary)
      fail("positivity proof contradicts the classifier");
  } else if (check == "tstar_grading") {
    expect_str(to_string(tstar_by_grading(alg)));
  } else if (check == "quotient") {
    int n = alg.dim();
    std::vector<std::vector<Rational>> gens;
    for (const auto& idx : f.at("ideal")) gens.push_back(basis_vector<Rational>(n, idx.get<int>()));
    Quotient<Rational> q = quotient(alg, Subspace<Rational>::span(n, gens));
    if (q.algebra.dim() != f.at("expect_dim").get<int>()) {
      fail("quotient dimension mismatch: got " + std::to_string(q.algebra.dim()));
    } else if (f.value("expect_two_step", false)) {
      auto lcs = lower_central_series(q.algebra);
      bool two_step = is_nilpotent(q.algebra) && lcs.size() == 3 && lcs.back().dim() == 0 &&
                      lcs[1].dim() > 0;
      if (!two_step) fail("quotient is not two-step nilpotent");
    }
  } else if (check == "de_from_grading") {
    Met g = ctx.metric();
    NikResult<Rational> nik = metric_nikolayevsky(alg, g);
    GradedExtensionResult<Rational> de = double_extension_from_grading(alg, g, nik.matrix);
    if (de.data.h.dim() != f.at("h_dim").get<int>() || de.data.d.dim() != f.at("d_dim").get<int>())
      fail("double extension block dimensions mismatch: h=" + std::to_string(de.data.h.dim()) +
           " d=" + std::to_string(de.data.d.dim()));
  } else if (check == "realify_solitary") {
    Met g = ctx.metric();
    SolitaryStatus base = classify_solitary(alg, g).status;
    LieAlgebra<Gaussian> cx = complexify(alg);
    Metric<Gaussian> gx = complexify(g);
    SolitaryStatus over_c = classify_solitary(cx, gx).status;
    Realification real = realify(cx);
    Met gr = realify_metric(gx);
    SolitaryStatus under_r = classify_solitary(real.algebra, gr).status;
    if (base != SolitaryStatus::Solitary || over_c != base || under_r != base)
      fail(std::string("verdicts: base=") + to_string(base) + " complexified=" +
           to_string(over_c) + " realified=" + to_string(under_r));
  } else if (check == "central_split_na") {
    Met g = ctx.metric();
    if (central_split(alg, g)) fail("central split unexpectedly applicable");
  } else if (check == "table1") {
    std::ostringstream detail;
    if (!is_nilpotent(alg)) {
      fail("not nilpotent");
    } else if (!is_nice(alg).first) {
      fail("not nice");
    } else {
      auto found = find_sigma_diagonal_metric(alg);
      if (!found) {
        fail("no sigma-diagonal ad-invariant metric found");
      } else {
        const auto& [sigma, g] = *found;
        NikResult<Rational> nik = metric_nikolayevsky(alg, g);
        bool positive = true;
        for (const Rational& x : nik.lambda)
          if (!is_positive(x)) positive = false;
        NikResult<Rational> plain = nikolayevsky_nice(alg);
        if (!positive) {
          fail("metric Nikolayevsky eigenvalues not all positive: " + lambda_to_text(nik.lambda));
        } else if (plain.lambda != nik.lambda) {
          fail("metric and plain eigenvalue vectors disagree on a nice sigma-diagonal input");
        } else if (classify_solitary(alg, g).status != SolitaryStatus::Solitary) {
          fail("classifier disagrees with the positivity proof");
        } else {
          detail << "sigma=" << sigma_to_text(sigma) << " lambda=" << lambda_to_text(nik.lambda);
          result.detail = detail.str();
        }
      }
    }
  } else {
    fail("unknown check '" + check + "'");
  }
  return result;
}

}  // namespace

CorpusReport run_corpus(const std::string& filter) {
  ordered_json corpus = ordered_json::parse(corpus_json_text());
  CorpusReport report;
  report.pass = true;
  for (const auto& entry : corpus.at("entries")) {
    std::string id = entry.at("id").get<std::string>();
    if (!filter.empty()) {
      bool match = id.find(filter) != std::string::npos;
      for (const auto& tag : entry.value("tags", ordered_json::array()))
        if (tag.get<std::string>() == filter) match = true;
      if (!match) continue;
    }
    EntryResult er;
    er.id = id;
    er.pass = true;
    std::optional<Alg> alg;
    std::optional<Met> metric;
    std::string parse_failure;
    try {
      alg = parse_salamon<Rational>(entry.at("salamon").get<std::string>());
      if (entry.contains("metric") && !entry.at("metric").is_null())
        metric = parse_metric<Rational>(entry.at("metric").get<std::string>(), alg->dim());
    } catch (const Error& e) {
      parse_failure = e.what();
    }
    for (const auto& fact : entry.at("facts")) {
      FactResult fr;
      if (!parse_failure.empty()) {
        fr.check = fact.value("check", "?");
        fr.anchor = fact.value("anchor", "");
        fr.pass = false;
        fr.detail = "entry failed to parse: " + parse_failure;
      } else {
        try {
          fr = check_fact({*alg, metric, fact});
        } catch (const Error& e) {
          fr.check = fact.value("check", "?");
          fr.anchor = fact.value("anchor", "");
          fr.pass = false;
          fr.detail = e.what();
        }
      }
      ++report.facts_run;
      if (!fr.pass) {
        ++report.failures;
        er.pass = false;
        report.pass = false;
      }
      er.facts.push_back(std::move(fr));
    }
    ++report.entries_run;
    report.entries.push_back(std::move(er));
  }
  return report;
}

ordered_json corpus_report_to_json(const CorpusReport& report) {
  ordered_json out;
  out["pass"] = report.pass;
  out["entries_run"] = report.entries_run;
  out["facts_run"] = report.facts_run;
  out["failures"] = report.failures;
  ordered_json entries = ordered_json::array();
  for (const auto& er : report.entries) {
    ordered_json e;
    e["id"] = er.id;
    e["pass"] = er.pass;
    ordered_json facts = ordered_json::array();
    for (const auto& fr : er.facts) {
      ordered_json fj;
      fj["check"] = fr.check;
      fj["anchor"] = fr.anchor;
      fj["pass"] = fr.pass;
      if (!fr.detail.empty()) fj["detail"] = fr.detail;
      facts.push_back(std::move(fj));
    }
    e["facts"] = std::move(facts);
    entries.push_back(std::move(e));
  }
  out["entries"] = std::move(entries);
  return out;
}

}  // namespace liesol
