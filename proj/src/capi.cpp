#include "liesol.h"

#include <cstring>
#include <string>
#include <variant>

#include "liesol/api/analyze.hpp"
#include "liesol/corpus/corpus.hpp"
#include "liesol/lie/salamon.hpp"

using namespace liesol;

struct liesol_algebra {
  std::variant<LieAlgebra<Rational>, LieAlgebra<Gaussian>> v;
};

struct liesol_metric {
  std::variant<Metric<Rational>, Metric<Gaussian>> v;
};

namespace {

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void set_error(char** errmsg, const std::string& msg) {
  if (errmsg) *errmsg = dup_string(msg);
}

template <class F>
liesol_status guarded(char** errmsg, F&& body) {
  try {
    return body();
  } catch (const Error& e) {
    set_error(errmsg, e.what());
    return static_cast<liesol_status>(static_cast<int>(e.status()));
  } catch (const std::exception& e) {
    set_error(errmsg, e.what());
    return LIESOL_ERR_INVALID;
  }
}

// Dispatch over the field of an algebra handle, pairing metrics of the same
// field; a field mismatch is an invalid argument.
template <class F>
liesol_status with_algebra(const liesol_algebra* a, const liesol_metric* m, char** errmsg,
                           F&& body) {
  if (!a) {
    set_error(errmsg, "null algebra handle");
    return LIESOL_ERR_INVALID;
  }
  return guarded(errmsg, [&]() -> liesol_status {
    if (std::holds_alternative<LieAlgebra<Rational>>(a->v)) {
      const Metric<Rational>* g = nullptr;
      if (m) {
        if (!std::holds_alternative<Metric<Rational>>(m->v))
          throw InvalidError("metric field does not match algebra field");
        g = &std::get<Metric<Rational>>(m->v);
      }
      return body(std::get<LieAlgebra<Rational>>(a->v), g);
    }
    const Metric<Gaussian>* g = nullptr;
    if (m) {
      if (!std::holds_alternative<Metric<Gaussian>>(m->v))
        throw InvalidError("metric field does not match algebra field");
      g = &std::get<Metric<Gaussian>>(m->v);
    }
    return body(std::get<LieAlgebra<Gaussian>>(a->v), g);
  });
}

std::vector<int> parse_sigma_text(const std::string& text, int n) {
  std::vector<int> sigma(n + 1);
  for (int i = 1; i <= n; ++i) sigma[i] = i;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t colon = text.find(':', pos);
    if (colon == std::string::npos) throw ParseError("expected i:j pairs", pos);
    std::size_t comma = text.find(',', colon);
    if (comma == std::string::npos) comma = text.size();
    int i = std::stoi(text.substr(pos, colon - pos));
    int j = std::stoi(text.substr(colon + 1, comma - colon - 1));
    if (i < 1 || i > n || j < 1 || j > n) throw ParseError("sigma index out of range", pos);
    sigma[i] = j;
    sigma[j] = i;
    pos = comma + 1;
  }
  for (int i = 1; i <= n; ++i)
    if (sigma[sigma[i]] != i) throw ParseError("sigma is not an involution", 0);
  return sigma;
}

}  // namespace

extern "C" {

const char* liesol_version(void) { return "0.1.0"; }

void liesol_string_free(char* s) { std::free(s); }
void liesol_algebra_free(liesol_algebra* a) { delete a; }
void liesol_metric_free(liesol_metric* m) { delete m; }

liesol_status liesol_algebra_parse(const char* text, const char* field, liesol_algebra** out,
                                   char** errmsg) {
  if (!text || !out) {
    set_error(errmsg, "null argument");
    return LIESOL_ERR_INVALID;
  }
  return guarded(errmsg, [&]() -> liesol_status {
    std::string f = field ? field : "Q";
    if (f == "Q") {
      *out = new liesol_algebra{parse_salamon<Rational>(text)};
    } else if (f == "Q(i)") {
      *out = new liesol_algebra{parse_salamon<Gaussian>(text)};
    } else {
      throw InvalidError("unknown field '" + f + "' (expected Q or Q(i))");
    }
    return LIESOL_OK;
  });
}

liesol_status liesol_algebra_from_json(const char* json, liesol_algebra** out, char** errmsg) {
  if (!json || !out) {
    set_error(errmsg, "null argument");
    return LIESOL_ERR_INVALID;
  }
  return guarded(errmsg, [&]() -> liesol_status {
    ordered_json j;
    try {
      j = ordered_json::parse(json);
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(e.what(), 0);
    }
    std::string f = j.value("field", "Q");
    if (f == "Q") {
      *out = new liesol_algebra{algebra_from_json<Rational>(j)};
    } else if (f == "Q(i)") {
      *out = new liesol_algebra{algebra_from_json<Gaussian>(j)};
    } else {
      throw InvalidError("unknown field '" + f + "'");
    }
    return LIESOL_OK;
  });
}

char* liesol_algebra_to_json(const liesol_algebra* a) {
  if (!a) return nullptr;
  return std::visit([](const auto& alg) { return dup_string(algebra_to_json(alg).dump()); }, a->v);
}

char* liesol_algebra_print(const liesol_algebra* a) {
  if (!a) return nullptr;
  return std::visit([](const auto& alg) { return dup_string(render_salamon(alg)); }, a->v);
}

int liesol_algebra_dim(const liesol_algebra* a) {
  if (!a) return -1;
  return std::visit([](const auto& alg) { return alg.dim(); }, a->v);
}

const char* liesol_algebra_field(const liesol_algebra* a) {
  if (!a) return nullptr;
  return std::holds_alternative<LieAlgebra<Rational>>(a->v) ? "Q" : "Q(i)";
}

liesol_status liesol_metric_parse(const liesol_algebra* a, const char* text, liesol_metric** out,
                                  char** errmsg) {
  if (!text || !out) {
    set_error(errmsg, "null argument");
    return LIESOL_ERR_INVALID;
  }
  return with_algebra(a, nullptr, errmsg, [&](const auto& alg, const auto*) -> liesol_status {
    using K = typename std::decay_t<decltype(alg)>::value_type;
    *out = new liesol_metric{parse_metric<K>(text, alg.dim())};
    return LIESOL_OK;
  });
}

liesol_status liesol_metric_from_json(const liesol_algebra* a, const char* json,
                                      liesol_metric** out, char** errmsg) {
  if (!json || !out) {
    set_error(errmsg, "null argument");
    return LIESOL_ERR_INVALID;
  }
  return with_algebra(a, nullptr, errmsg, [&](const auto& alg, const auto*) -> liesol_status {
    using K = typename std::decay_t<decltype(alg)>::value_type;
    ordered_json j;
    try {
      j = ordered_json::parse(json);
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(e.what(), 0);
    }
    *out = new liesol_metric{metric_from_json<K>(j, alg.dim())};
    return LIESOL_OK;
  });
}

char* liesol_metric_to_json(const liesol_metric* m) {
  if (!m) return nullptr;
  return std::visit([](const auto& g) { return dup_string(metric_to_json(g).dump()); }, m->v);
}

char* liesol_metric_print(const liesol_metric* m) {
  if (!m) return nullptr;
  return std::visit([](const auto& g) { return dup_string(render_metric(g)); }, m->v);
}

liesol_status liesol_metric_find(const liesol_algebra* a, const char* sigma, liesol_metric** out,
                                 char** errmsg) {
  if (!out) {
    set_error(errmsg, "null argument");
    return LIESOL_ERR_INVALID;
  }
  return with_algebra(a, nullptr, errmsg, [&](const auto& alg, const auto*) -> liesol_status {
    using K = typename std::decay_t<decltype(alg)>::value_type;
    *out = nullptr;
    if (sigma && std::string(sigma) == "auto") {
      auto found = find_sigma_diagonal_metric(alg);
      if (found) *out = new liesol_metric{std::move(found->second)};
    } else if (sigma) {
      std::vector<int> sig = parse_sigma_text(sigma, alg.dim());
      auto found = find_adinvariant_metric(alg, &sig);
      if (found) *out = new liesol_metric{std::move(*found)};
    } else {
      auto found = find_adinvariant_metric<K>(alg);
      if (found) *out = new liesol_metric{std::move(*found)};
    }
    return LIESOL_OK;
  });
}

liesol_status liesol_validate(const char* text, char** errmsg) {
  if (!text) {
    set_error(errmsg, "null argument");
    return LIESOL_ERR_INVALID;
  }
  return guarded(errmsg, [&]() -> liesol_status {
    parse_salamon<Rational>(text);
    return LIESOL_OK;
  });
}

liesol_status liesol_analyze(const liesol_algebra* a, const liesol_metric* metric, char** json_out,
                             char** errmsg) {
  if (!json_out) {
    set_error(errmsg, "null argument");
    return LIESOL_ERR_INVALID;
  }
  return with_algebra(a, metric, errmsg, [&](const auto& alg, const auto* g) -> liesol_status {
    *json_out = dup_string(analyze(alg, g).dump(2));
    return LIESOL_OK;
  });
}

liesol_status liesol_corpus_run(const char* filter, char** json_out, char** errmsg) {
  return guarded(errmsg, [&]() -> liesol_status {
    CorpusReport report = run_corpus(filter ? filter : "");
    if (json_out) *json_out = dup_string(corpus_report_to_json(report).dump(2));
    return report.pass ? LIESOL_OK : LIESOL_ERR_MISMATCH;
  });
}

liesol_status liesol_cotangent(const liesol_algebra* a, liesol_algebra** out,
                               liesol_metric** out_metric, char** errmsg) {
  if (!out) {
    set_error(errmsg, "null argument");
    return LIESOL_ERR_INVALID;
  }
  return with_algebra(a, nullptr, errmsg, [&](const auto& alg, const auto*) -> liesol_status {
    auto pkg = cotangent(alg);
    *out = new liesol_algebra{std::move(pkg.algebra)};
    if (out_metric) *out_metric = new liesol_metric{std::move(pkg.metric)};
    return LIESOL_OK;
  });
}

liesol_status liesol_complexify(const liesol_algebra* a, liesol_algebra** out, char** errmsg) {
  if (!a || !out) {
    set_error(errmsg, "null argument");
    return LIESOL_ERR_INVALID;
  }
  return guarded(errmsg, [&]() -> liesol_status {
    if (!std::holds_alternative<LieAlgebra<Rational>>(a->v))
      throw InvalidError("complexify expects an algebra over Q");
    *out = new liesol_algebra{complexify(std::get<LieAlgebra<Rational>>(a->v))};
    return LIESOL_OK;
  });
}

liesol_status liesol_realify(const liesol_algebra* a, liesol_algebra** out, char** json_j_out,
                             char** errmsg) {
  if (!a || !out) {
    set_error(errmsg, "null argument");
    return LIESOL_ERR_INVALID;
  }
  return guarded(errmsg, [&]() -> liesol_status {
    if (!std::holds_alternative<LieAlgebra<Gaussian>>(a->v))
      throw InvalidError("realify expects an algebra over Q(i)");
    Realification real = realify(std::get<LieAlgebra<Gaussian>>(a->v));
    *out = new liesol_algebra{std::move(real.algebra)};
    if (json_j_out) *json_j_out = dup_string(matrix_to_json(real.j).dump());
    return LIESOL_OK;
  });
}

liesol_status liesol_direct_sum(const liesol_algebra* a, const liesol_algebra* b,
                                const liesol_metric* ga, const liesol_metric* gb,
                                liesol_algebra** out, liesol_metric** out_metric, char** errmsg) {
  if (!a || !b || !out) {
    set_error(errmsg, "null argument");
    return LIESOL_ERR_INVALID;
  }
  return guarded(errmsg, [&]() -> liesol_status {
    if (a->v.index() != b->v.index()) throw InvalidError("direct sum requires a common field");
    if (std::holds_alternative<LieAlgebra<Rational>>(a->v)) {
      const Metric<Rational>* g1 = ga ? &std::get<Metric<Rational>>(ga->v) : nullptr;
      const Metric<Rational>* g2 = gb ? &std::get<Metric<Rational>>(gb->v) : nullptr;
      auto [sum, metric] = direct_sum(std::get<LieAlgebra<Rational>>(a->v),
                                      std::get<LieAlgebra<Rational>>(b->v), g1, g2);
      *out = new liesol_algebra{std::move(sum)};
      if (out_metric && metric) *out_metric = new liesol_metric{std::move(*metric)};
    } else {
      const Metric<Gaussian>* g1 = ga ? &std::get<Metric<Gaussian>>(ga->v) : nullptr;
      const Metric<Gaussian>* g2 = gb ? &std::get<Metric<Gaussian>>(gb->v) : nullptr;
      auto [sum, metric] = direct_sum(std::get<LieAlgebra<Gaussian>>(a->v),
                                      std::get<LieAlgebra<Gaussian>>(b->v), g1, g2);
      *out = new liesol_algebra{std::move(sum)};
      if (out_metric && metric) *out_metric = new liesol_metric{std::move(*metric)};
    }
    return LIESOL_OK;
  });
}

liesol_status liesol_double_extension(const char* data_json, liesol_algebra** out,
                                      liesol_metric** out_metric, char** errmsg) {
  if (!data_json || !out) {
    set_error(errmsg, "null argument");
    return LIESOL_ERR_INVALID;
  }
  return guarded(errmsg, [&]() -> liesol_status {
    ordered_json j;
    try {
      j = ordered_json::parse(data_json);
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(e.what(), 0);
    }
    std::string field = j.value("field", j.at("d").value("field", "Q"));
    if (field == "Q") {
      auto data = double_extension_data_from_json<Rational>(j);
      auto [q, metric] = double_extension(data);
      *out = new liesol_algebra{std::move(q)};
      if (out_metric) *out_metric = new liesol_metric{std::move(metric)};
    } else {
      auto data = double_extension_data_from_json<Gaussian>(j);
      auto [q, metric] = double_extension(data);
      *out = new liesol_algebra{std::move(q)};
      if (out_metric) *out_metric = new liesol_metric{std::move(metric)};
    }
    return LIESOL_OK;
  });
}

}  // extern "C"
