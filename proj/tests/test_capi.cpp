// Exercises the public C surface end to end.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <liesol.h>

#include <json.hpp>

#include <string>

using json = nlohmann::json;

namespace {

struct Str {
  char* p = nullptr;
  ~Str() { liesol_string_free(p); }
  std::string get() const { return p ? p : ""; }
};

struct Alg {
  liesol_algebra* p = nullptr;
  ~Alg() { liesol_algebra_free(p); }
};

struct Met {
  liesol_metric* p = nullptr;
  ~Met() { liesol_metric_free(p); }
};

}  // namespace

TEST_CASE("parse, print, json round-trip") {
  Alg alg;
  Str err;
  REQUIRE(liesol_algebra_parse("(0,0,12,13)", nullptr, &alg.p, &err.p) == LIESOL_OK);
  CHECK(liesol_algebra_dim(alg.p) == 4);
  CHECK(std::string(liesol_algebra_field(alg.p)) == "Q");

  Str printed;
  printed.p = liesol_algebra_print(alg.p);
  CHECK(printed.get() == "(0,0,e^{1,2},e^{1,3})");

  Str as_json;
  as_json.p = liesol_algebra_to_json(alg.p);
  Alg back;
  REQUIRE(liesol_algebra_from_json(as_json.p, &back.p, &err.p) == LIESOL_OK);
  Str printed2;
  printed2.p = liesol_algebra_print(back.p);
  CHECK(printed2.get() == printed.get());
}

TEST_CASE("status codes match the documented meanings") {
  Str err;
  CHECK(liesol_validate("(0,0,12)", &err.p) == LIESOL_OK);

  Str err2;
  CHECK(liesol_validate("(0,0,", &err2.p) == LIESOL_ERR_PARSE);
  CHECK_FALSE(err2.get().empty());

  Str err3;
  CHECK(liesol_validate("(0,0,12,13,24)", &err3.p) == LIESOL_ERR_JACOBI);
  CHECK(err3.get().find("triple") != std::string::npos);

  Alg alg;
  Str err4;
  CHECK(liesol_algebra_parse("(0,0,12)", "F7", &alg.p, &err4.p) == LIESOL_ERR_INVALID);
}

TEST_CASE("analyze produces the structural report") {
  Alg alg;
  Str err;
  REQUIRE(liesol_algebra_parse("(23,-13,12,26-35,34-16,-24+15)", nullptr, &alg.p, &err.p) ==
          LIESOL_OK);
  Met metric;
  REQUIRE(liesol_metric_parse(alg.p, "e1.e4+e2.e5+e3.e6", &metric.p, &err.p) == LIESOL_OK);

  Str out;
  REQUIRE(liesol_analyze(alg.p, metric.p, &out.p, &err.p) == LIESOL_OK);
  json report = json::parse(out.get());
  CHECK(report["derivations"]["dim"] == 7);
  CHECK(report["metric"]["s_dim"] == 2);
  CHECK(report["metric"]["d_dim"] == 1);
  CHECK(report["metric"]["verdict"] == "Neither");
  CHECK(report["metric"]["metric_nikolayevsky"]["lambda"] ==
        json::array({"0", "0", "0", "1", "1", "1"}));
  CHECK(report["tstar_solitary"]["solitary"] == false);
}

TEST_CASE("metric search through the C API") {
  Alg heis;
  Str err;
  REQUIRE(liesol_algebra_parse("(0,0,12)", nullptr, &heis.p, &err.p) == LIESOL_OK);
  Met none;
  REQUIRE(liesol_metric_find(heis.p, nullptr, &none.p, &err.p) == LIESOL_OK);
  CHECK(none.p == nullptr);

  Alg f;
  REQUIRE(liesol_algebra_parse("(0,0,12,13,23)", nullptr, &f.p, &err.p) == LIESOL_OK);
  Met sigma_metric;
  REQUIRE(liesol_metric_find(f.p, "auto", &sigma_metric.p, &err.p) == LIESOL_OK);
  REQUIRE(sigma_metric.p != nullptr);
  Str m;
  m.p = liesol_metric_print(sigma_metric.p);
  CHECK(m.get() == "e1.e5-e2.e4+e3.e3");

  Met explicit_sigma;
  REQUIRE(liesol_metric_find(f.p, "1:5,2:4", &explicit_sigma.p, &err.p) == LIESOL_OK);
  CHECK(explicit_sigma.p != nullptr);
}

TEST_CASE("constructions through the C API") {
  Alg su2;
  Str err;
  REQUIRE(liesol_algebra_parse("(23,-13,12)", nullptr, &su2.p, &err.p) == LIESOL_OK);

  Alg cot;
  Met cot_metric;
  REQUIRE(liesol_cotangent(su2.p, &cot.p, &cot_metric.p, &err.p) == LIESOL_OK);
  CHECK(liesol_algebra_dim(cot.p) == 6);
  Str printed;
  printed.p = liesol_algebra_print(cot.p);
  CHECK(printed.get() ==
        "(e^{2,3},-e^{1,3},e^{1,2},e^{2,6}-e^{3,5},-e^{1,6}+e^{3,4},e^{1,5}-e^{2,4})");

  Alg cx;
  REQUIRE(liesol_complexify(su2.p, &cx.p, &err.p) == LIESOL_OK);
  CHECK(std::string(liesol_algebra_field(cx.p)) == "Q(i)");
  Alg real;
  Str jmat;
  REQUIRE(liesol_realify(cx.p, &real.p, &jmat.p, &err.p) == LIESOL_OK);
  CHECK(liesol_algebra_dim(real.p) == 6);
  CHECK_FALSE(jmat.get().empty());

  Alg sum;
  Met sum_metric;
  REQUIRE(liesol_direct_sum(su2.p, su2.p, nullptr, nullptr, &sum.p, &sum_metric.p, &err.p) ==
          LIESOL_OK);
  CHECK(liesol_algebra_dim(sum.p) == 6);

  // Double extension: d = 0, h = heisenberg gives T*h.
  Alg heis;
  REQUIRE(liesol_algebra_parse("(0,0,12)", nullptr, &heis.p, &err.p) == LIESOL_OK);
  Str heis_json;
  heis_json.p = liesol_algebra_to_json(heis.p);
  std::string data = std::string("{\"d\": {\"dim\": 0, \"field\": \"Q\", \"brackets\": []}, ") +
                     "\"g_d\": {\"dim\": 0, \"entries\": []}, " + "\"h\": " + heis_json.get() +
                     ", \"pi\": [[], [], []], \"g_h\": null}";
  Alg de;
  Met de_metric;
  Str de_err;
  liesol_status st = liesol_double_extension(data.c_str(), &de.p, &de_metric.p, &de_err.p);
  INFO(de_err.get());
  REQUIRE(st == LIESOL_OK);
  CHECK(liesol_algebra_dim(de.p) == 6);

  Alg cot_heis;
  Met cot_heis_metric;
  REQUIRE(liesol_cotangent(heis.p, &cot_heis.p, &cot_heis_metric.p, &err.p) == LIESOL_OK);
  Str a, b;
  a.p = liesol_algebra_print(de.p);
  b.p = liesol_algebra_print(cot_heis.p);
  CHECK(a.get() == b.get());
}

TEST_CASE("corpus filter through the C API") {
  Str out, err;
  CHECK(liesol_corpus_run("trivial", &out.p, &err.p) == LIESOL_OK);
  json report = json::parse(out.get());
  CHECK(report["pass"] == true);
  CHECK(report["entries_run"].get<int>() >= 4);
}

TEST_CASE("corpus reports are byte-identical across runs") {
  Str out1, out2, err;
  REQUIRE(liesol_corpus_run("examples", &out1.p, &err.p) == LIESOL_OK);
  REQUIRE(liesol_corpus_run("examples", &out2.p, &err.p) == LIESOL_OK);
  CHECK(out1.get() == out2.get());

  Alg alg;
  REQUIRE(liesol_algebra_parse("(0,-12,13,-23)", nullptr, &alg.p, &err.p) == LIESOL_OK);
  Met metric;
  REQUIRE(liesol_metric_parse(alg.p, "e1.e4+e2.e3", &metric.p, &err.p) == LIESOL_OK);
  Str a1, a2;
  REQUIRE(liesol_analyze(alg.p, metric.p, &a1.p, &err.p) == LIESOL_OK);
  REQUIRE(liesol_analyze(alg.p, metric.p, &a2.p, &err.p) == LIESOL_OK);
  CHECK(a1.get() == a2.get());
}
