// liesol command-line front end. Links the C API only (liesol.h); the
// vendored headers are used purely for argument parsing and display.

#include <liesol.h>

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

namespace {

using json = nlohmann::json;

struct CString {
  char* p = nullptr;
  ~CString() { liesol_string_free(p); }
  std::string str() const { return p ? p : ""; }
};

struct AlgebraHandle {
  liesol_algebra* p = nullptr;
  ~AlgebraHandle() { liesol_algebra_free(p); }
};

struct MetricHandle {
  liesol_metric* p = nullptr;
  ~MetricHandle() { liesol_metric_free(p); }
};

// Arguments may be literal text or a path to a file holding the text.
std::string load_arg(const std::string& arg) {
  if (!arg.empty() && std::filesystem::exists(arg) && std::filesystem::is_regular_file(arg)) {
    std::ifstream in(arg);
    std::stringstream ss;
    ss << in.rdbuf();
    std::string text = ss.str();
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.pop_back();
    return text;
  }
  return arg;
}

int report_error(const std::string& context, liesol_status status, const CString& err) {
  std::cerr << "error: " << context << ": " << err.str() << "\n";
  return static_cast<int>(status);
}

liesol_status parse_algebra(const std::string& text, const std::string& field, AlgebraHandle& alg,
                            CString& err) {
  std::string body = load_arg(text);
  if (!body.empty() && body.front() == '{')
    return liesol_algebra_from_json(body.c_str(), &alg.p, &err.p);
  return liesol_algebra_parse(body.c_str(), field.empty() ? nullptr : field.c_str(), &alg.p,
                              &err.p);
}

liesol_status parse_metric_arg(const AlgebraHandle& alg, const std::string& text,
                               MetricHandle& metric, CString& err) {
  std::string body = load_arg(text);
  if (!body.empty() && body.front() == '{')
    return liesol_metric_from_json(alg.p, body.c_str(), &metric.p, &err.p);
  return liesol_metric_parse(alg.p, body.c_str(), &metric.p, &err.p);
}

void print_human_analysis(const json& r) {
  const auto& a = r.at("algebra");
  std::cout << "algebra " << a.at("salamon").get<std::string>() << "  (dim "
            << a.at("dim").get<int>() << ", field " << a.at("field").get<std::string>() << ")\n";
  const auto& s = r.at("structure");
  std::cout << "  center dim " << s.at("center_dim").get<int>() << ", commutator dim "
            << s.at("derived_dim").get<int>() << "\n";
  std::cout << "  solvable " << (s.at("solvable").get<bool>() ? "yes" : "no") << ", nilpotent "
            << (s.at("nilpotent").get<bool>() ? "yes" : "no") << ", nice "
            << (s.at("nice").get<bool>() ? "yes" : "no") << "\n";
  std::cout << "  derivations dim " << r.at("derivations").at("dim").get<int>()
            << (r.at("derivations").at("all_traceless").get<bool>() ? " (all traceless)" : "")
            << "\n";
  const auto& t = r.at("tstar_solitary");
  std::cout << "  T*-solitary " << (t.at("solitary").get<bool>() ? "yes" : "no") << "  (phi "
            << t.at("phi_dim").get<int>() << ", D+D^T " << t.at("psi_dim").get<int>() << ")\n";
  if (r.contains("nikolayevsky") && r.at("nikolayevsky").contains("lambda")) {
    std::cout << "  diagonal derivation: (";
    bool first = true;
    for (const auto& x : r.at("nikolayevsky").at("lambda")) {
      if (!first) std::cout << ",";
      std::cout << x.get<std::string>();
      first = false;
    }
    std::cout << ")\n";
  }
  if (r.contains("metric")) {
    const auto& m = r.at("metric");
    std::cout << "metric " << m.at("text").get<std::string>() << "\n";
    std::cout << "  nondegenerate " << (m.at("nondegenerate").get<bool>() ? "yes" : "no")
              << ", ad-invariant " << (m.at("adinvariant").get<bool>() ? "yes" : "no") << "\n";
    if (m.contains("s_dim"))
      std::cout << "  dim S = " << m.at("s_dim").get<int>() << ", dim D = "
                << m.at("d_dim").get<int>() << ", verdict " << m.at("verdict").get<std::string>()
                << "\n";
    if (m.contains("metric_nikolayevsky")) {
      const auto& nik = m.at("metric_nikolayevsky");
      if (nik.contains("lambda")) {
        std::cout << "  metric Nikolayevsky (" << nik.at("path").get<std::string>() << "): (";
        bool first = true;
        for (const auto& x : nik.at("lambda")) {
          if (!first) std::cout << ",";
          std::cout << x.get<std::string>();
          first = false;
        }
        std::cout << ")\n";
      } else {
        std::cout << "  metric Nikolayevsky: unsupported path\n";
      }
    }
    if (m.contains("solitary_by_positivity"))
      std::cout << "  positivity: " << m.at("solitary_by_positivity").get<std::string>() << "\n";
  }
}

int cmd_validate(const std::string& alg_text) {
  CString err;
  liesol_status status = liesol_validate(load_arg(alg_text).c_str(), &err.p);
  if (status != LIESOL_OK) return report_error("validate", status, err);
  std::cout << "ok\n";
  return 0;
}

int cmd_analyze(const std::string& alg_text, const std::string& field,
                const std::string& metric_text, const std::string& sigma, bool as_json) {
  AlgebraHandle alg;
  CString err;
  liesol_status status = parse_algebra(alg_text, field, alg, err);
  if (status != LIESOL_OK) return report_error("analyze", status, err);

  MetricHandle metric;
  if (!metric_text.empty()) {
    status = parse_metric_arg(alg, metric_text, metric, err);
    if (status != LIESOL_OK) return report_error("analyze", status, err);
  } else if (!sigma.empty()) {
    status = liesol_metric_find(alg.p, sigma.c_str(), &metric.p, &err.p);
    if (status != LIESOL_OK) return report_error("metric search", status, err);
    if (!metric.p) {
      std::cerr << "error: no ad-invariant metric found\n";
      return static_cast<int>(LIESOL_ERR_MISMATCH);
    }
  }

  CString out;
  status = liesol_analyze(alg.p, metric.p, &out.p, &err.p);
  if (status != LIESOL_OK) return report_error("analyze", status, err);
  if (as_json) {
    std::cout << out.str() << "\n";
  } else {
    print_human_analysis(json::parse(out.str()));
  }
  return 0;
}

int cmd_corpus(const std::string& filter, bool as_json) {
  CString out, err;
  liesol_status status =
      liesol_corpus_run(filter.empty() ? nullptr : filter.c_str(), &out.p, &err.p);
  if (status != LIESOL_OK && status != LIESOL_ERR_MISMATCH)
    return report_error("corpus", status, err);
  json report = json::parse(out.str());
  if (as_json) {
    std::cout << out.str() << "\n";
  } else {
    for (const auto& entry : report.at("entries")) {
      std::cout << (entry.at("pass").get<bool>() ? "pass " : "FAIL ")
                << entry.at("id").get<std::string>() << "\n";
      for (const auto& fact : entry.at("facts")) {
        if (fact.at("pass").get<bool>()) continue;
        std::cout << "      " << fact.at("check").get<std::string>() << " ["
                  << fact.at("anchor").get<std::string>() << "]: "
                  << fact.value("detail", "") << "\n";
      }
    }
    std::cout << report.at("entries_run").get<int>() << " entries, "
              << report.at("facts_run").get<int>() << " facts, "
              << report.at("failures").get<int>() << " failures\n";
  }
  return static_cast<int>(status);
}

int write_output(const AlgebraHandle& alg, const MetricHandle& metric, const std::string& out_alg,
                 const std::string& out_metric, bool as_json) {
  CString rendered;
  rendered.p = as_json ? liesol_algebra_to_json(alg.p) : liesol_algebra_print(alg.p);
  if (out_alg.empty()) {
    std::cout << rendered.str() << "\n";
  } else {
    std::ofstream(out_alg) << rendered.str() << "\n";
  }
  if (metric.p) {
    CString m;
    m.p = as_json ? liesol_metric_to_json(metric.p) : liesol_metric_print(metric.p);
    if (out_metric.empty()) {
      std::cout << m.str() << "\n";
    } else {
      std::ofstream(out_metric) << m.str() << "\n";
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact-arithmetic toolkit for Lie algebras with ad-invariant metrics"};
  app.require_subcommand(1);

  std::string alg_text, alg_b_text, field, metric_text, metric_b_text, sigma, filter;
  std::string out_alg, out_metric;
  bool as_json = false;

  auto* validate = app.add_subcommand("validate", "Parse and check the bracket identity");
  validate->add_option("--alg", alg_text, "Algebra (text or file)")->required();

  auto* analyze = app.add_subcommand("analyze", "Full structural report");
  analyze->add_option("--alg", alg_text, "Algebra (text or file)")->required();
  analyze->add_option("--field", field, "Base field: Q (default) or Q(i)");
  analyze->add_option("--metric", metric_text, "Metric (text or file)");
  analyze->add_option("--sigma", sigma,
                      "Search an ad-invariant metric: 'auto' or pairs like 1:4,2:3");
  analyze->add_flag("--json", as_json, "Machine-readable output");

  auto* corpus = app.add_subcommand("corpus", "Run the embedded example corpus");
  corpus->add_option("--filter", filter, "Restrict to a tag or id substring");
  corpus->add_flag("--json", as_json, "Machine-readable output");

  auto* construct = app.add_subcommand("construct", "Builders");
  construct->require_subcommand(1);
  auto add_io = [&](CLI::App* sub, bool needs_b) {
    sub->add_option("--alg", alg_text, "Algebra (text or file)")->required();
    if (needs_b) sub->add_option("--alg-b", alg_b_text, "Second algebra")->required();
    sub->add_option("--field", field, "Base field: Q (default) or Q(i)");
    sub->add_option("--metric", metric_text, "Metric for --alg");
    if (needs_b) sub->add_option("--metric-b", metric_b_text, "Metric for --alg-b");
    sub->add_option("--out", out_alg, "Write the algebra here (default stdout)");
    sub->add_option("--out-metric", out_metric, "Write the metric here (default stdout)");
    sub->add_flag("--json", as_json, "JSON output");
  };
  auto* c_cot = construct->add_subcommand("cotangent", "Cotangent algebra with canonical metric");
  add_io(c_cot, false);
  auto* c_cx = construct->add_subcommand("complexify", "Scalar extension to Q(i)");
  add_io(c_cx, false);
  auto* c_re = construct->add_subcommand("realify", "Underlying algebra over Q (doubles dim)");
  add_io(c_re, false);
  auto* c_ds = construct->add_subcommand("directsum", "Direct sum (orthogonal when metrics given)");
  add_io(c_ds, true);
  auto* c_de = construct->add_subcommand("doubleext", "Double extension from a JSON data file");
  c_de->add_option("--data", alg_text, "DoubleExtensionData JSON (text or file)")->required();
  c_de->add_option("--out", out_alg, "Write the algebra here (default stdout)");
  c_de->add_option("--out-metric", out_metric, "Write the metric here (default stdout)");
  c_de->add_flag("--json", as_json, "JSON output");

  CLI11_PARSE(app, argc, argv);

  if (validate->parsed()) return cmd_validate(alg_text);
  if (analyze->parsed()) return cmd_analyze(alg_text, field, metric_text, sigma, as_json);
  if (corpus->parsed()) return cmd_corpus(filter, as_json);

  // construct subcommands
  CString err;
  if (c_de->parsed()) {
    AlgebraHandle out;
    MetricHandle out_m;
    liesol_status status =
        liesol_double_extension(load_arg(alg_text).c_str(), &out.p, &out_m.p, &err.p);
    if (status != LIESOL_OK) return report_error("doubleext", status, err);
    return write_output(out, out_m, out_alg, out_metric, as_json);
  }

  AlgebraHandle alg;
  liesol_status status = parse_algebra(alg_text, field, alg, err);
  if (status != LIESOL_OK) return report_error("construct", status, err);
  MetricHandle metric;
  if (!metric_text.empty()) {
    status = parse_metric_arg(alg, metric_text, metric, err);
    if (status != LIESOL_OK) return report_error("construct", status, err);
  }

  if (c_cot->parsed()) {
    AlgebraHandle out;
    MetricHandle out_m;
    status = liesol_cotangent(alg.p, &out.p, &out_m.p, &err.p);
    if (status != LIESOL_OK) return report_error("cotangent", status, err);
    return write_output(out, out_m, out_alg, out_metric, as_json);
  }
  if (c_cx->parsed()) {
    AlgebraHandle out;
    status = liesol_complexify(alg.p, &out.p, &err.p);
    if (status != LIESOL_OK) return report_error("complexify", status, err);
    return write_output(out, MetricHandle{}, out_alg, out_metric, as_json);
  }
  if (c_re->parsed()) {
    AlgebraHandle out;
    status = liesol_realify(alg.p, &out.p, nullptr, &err.p);
    if (status != LIESOL_OK) return report_error("realify", status, err);
    return write_output(out, MetricHandle{}, out_alg, out_metric, as_json);
  }
  if (c_ds->parsed()) {
    AlgebraHandle b;
    status = parse_algebra(alg_b_text, field, b, err);
    if (status != LIESOL_OK) return report_error("directsum", status, err);
    MetricHandle metric_b;
    if (!metric_b_text.empty()) {
      status = parse_metric_arg(b, metric_b_text, metric_b, err);
      if (status != LIESOL_OK) return report_error("directsum", status, err);
    }
    AlgebraHandle out;
    MetricHandle out_m;
    status = liesol_direct_sum(alg.p, b.p, metric.p, metric_b.p, &out.p, &out_m.p, &err.p);
    if (status != LIESOL_OK) return report_error("directsum", status, err);
    return write_output(out, out_m, out_alg, out_metric, as_json);
  }
  return 0;
}
