#include "coeq/json_io.hpp"
#include "coeq/error.hpp"

#include <doctest.h>

#include "helpers.hpp"

#include <random>
#include <string>

using namespace coeq;
using namespace coeq::testing;

TEST_SUITE_BEGIN("json_io");

TEST_CASE("matrix round trip and schema errors") {
  for (const ShiftSpace& S : {full2(), golden()}) {
    CHECK(parse_matrix(matrix_to_json(S)) == S);
  }
  std::mt19937 rng(101);
  for (int t = 0; t < 10; ++t) {
    ShiftSpace S = random_space(rng, 2 + t % 4);
    CHECK(parse_matrix(matrix_to_json(S)) == S);
  }

  auto expect_schema_error = [](const char* text) {
    try {
      parse_matrix(Json::parse(text));
      FAIL_CHECK("expected SchemaError for ", text);
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::SchemaError);
    }
  };
  expect_schema_error(R"({"rows": [[1,1],[1,0]]})");          // missing n
  expect_schema_error(R"({"n": 2, "rows": [[1,1]]})");        // wrong shape
  expect_schema_error(R"({"n": 2, "rows": [[1,1],[1,2]]})");  // non-0/1 entry
  expect_schema_error(R"({"n": "2", "rows": [[1,1],[1,0]]})");

  // semantic failures keep their own codes
  try {
    parse_matrix(Json::parse(R"({"n": 2, "rows": [[0,1],[1,0]]})"));
    FAIL("expected PermutationMatrix");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::PermutationMatrix);
  }
}

TEST_CASE("point round trip") {
  ShiftSpace B = golden();
  std::mt19937 rng(102);
  for (const EvPeriodicPoint& x : eventually_periodic_points(B, 5)) {
    EvPeriodicPoint back = parse_point(point_to_json(x), B);
    CHECK(back.same_point(x));
  }
  // normalization happens on parse: 1(21)^inf == (12)^inf
  EvPeriodicPoint y =
      parse_point(Json::parse(R"({"transient": [1], "cycle": [2,1]})"), B);
  CHECK(y.same_point(make_ev_periodic(B, {}, {1, 2})));
  // inadmissible content is a semantic error, not a schema error
  try {
    parse_point(Json::parse(R"({"transient": [], "cycle": [2,2]})"), B);
    FAIL("expected Inadmissible");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Inadmissible);
  }
  CHECK_THROWS_AS(parse_point(Json::parse(R"({"cycle": []})"), B), Error);
}

TEST_CASE("cylinder function round trip, both key encodings") {
  std::mt19937 rng(103);
  for (int t = 0; t < 12; ++t) {
    ShiftSpace S = random_space(rng, 2 + t % 3);
    CylFn f = random_cylfn(rng, S, t % 3, -9, 9);
    CylFn back = parse_cylfn(cylfn_to_json(f), S);
    CHECK(back.depth() == f.depth());
    CHECK(back.table() == f.table());
  }
  // digit-string keys for small alphabets
  ShiftSpace B = golden();
  Json j = cylfn_to_json(CylFn(B, 1, {{{1}, 3}, {{2}, -1}}));
  CHECK(j["table"].contains("1"));
  CHECK(j["table"]["1"] == 3);
  // depth-0 constants use the empty key
  Json c = cylfn_to_json(CylFn::constant(B, 7));
  CHECK(c["depth"] == 0);
  CHECK(c["table"].contains(""));

  // table must cover exactly the admissible words
  try {
    parse_cylfn(Json::parse(R"({"depth": 1, "table": {"1": 1}})"), B);
    FAIL("expected semantic error");
  } catch (const Error& e) {
    CHECK(e.code() != ErrorCode::SchemaError);
  }
  CHECK_THROWS_AS(parse_cylfn(Json::parse(R"({"depth": 1})"), B), Error);
}

TEST_CASE("transducer and full spec round trip") {
  CoeSpec spec = fixture_spec();
  Json j = coe_spec_to_json(spec);
  CoeSpec back = parse_coe_spec(j);
  CHECK(back.A == spec.A);
  CHECK(back.B == spec.B);
  CHECK(equal_as_functions(back.k1, spec.k1));
  CHECK(equal_as_functions(back.l1, spec.l1));
  CHECK(equal_as_functions(back.k2, spec.k2));
  CHECK(equal_as_functions(back.l2, spec.l2));
  // machines agree extensionally
  for (const EvPeriodicPoint& x : eventually_periodic_points(spec.A, 4)) {
    CHECK(apply_transducer(back.h, x)
              .same_point(apply_transducer(spec.h, x)));
  }
  for (const EvPeriodicPoint& y : eventually_periodic_points(spec.B, 4)) {
    CHECK(apply_transducer(back.hinv, y)
              .same_point(apply_transducer(spec.hinv, y)));
  }
  // and the parsed spec certifies
  CHECK(verify_coe(back, 4).passed());

  // unknown state names are schema errors
  Json bad = j;
  bad["h"]["rules"][0]["state"] = "nope";
  try {
    parse_coe_spec(bad);
    FAIL("expected SchemaError");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::SchemaError);
  }
  // semantically broken machines keep transducer codes: drop a needed rule
  Json gap = j;
  auto& rules = gap["h"]["rules"];
  rules.erase(rules.begin());
  try {
    parse_coe_spec(gap);
    FAIL("expected UndefinedTransition");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::UndefinedTransition);
  }
}

TEST_CASE("measure round trip with exact rationals") {
  ShiftSpace B = golden();
  MarkovMeasure mu = make_markov_measure(
      B, {{Rational(1, 2), Rational(1, 2)}, {Rational(1), Rational(0)}});
  Json j = measure_to_json(mu);
  CHECK(j["P"][0][0] == "1/2");
  CHECK(j["pi"][0] == "2/3");
  MarkovMeasure back = parse_measure(j, B);
  CHECK(back.P == mu.P);
  CHECK(back.pi == mu.pi);
  // pi omitted: solved, same result
  Json nopi = j;
  nopi.erase("pi");
  MarkovMeasure solved = parse_measure(nopi, B);
  CHECK(solved.pi == mu.pi);
  // malformed rational
  Json badr = j;
  badr["P"][0][0] = "1/2/3";
  CHECK_THROWS_AS(parse_measure(badr, B), Error);
}

TEST_CASE("series round trip keeps exact coefficients") {
  FormalSeries z = zeta_series(golden(), 12);
  FormalSeries back = parse_series(series_to_json(z));
  CHECK(back == z);
  Json j = series_to_json(z);
  CHECK(j["truncation"] == 12);
  CHECK(j["coeffs"][12] == "233");
  // big values survive the string encoding
  FormalSeries big = zeta_series(full2(), 40);
  CHECK(parse_series(series_to_json(big)) == big);
  CHECK(series_to_json(big)["coeffs"][40] == "1099511627776");  // 2^40
}

TEST_CASE("report serialization shape") {
  CertReport rep = make_pass("example_check", "a property", 6, "details here");
  Json j = report_to_json(rep);
  CHECK(j["name"] == "example_check");
  CHECK(j["verdict"] == "pass");
  CHECK(j["bound"] == 6);
  CHECK(j["statement"] == "a property");
  CHECK(j["details"] == "details here");
  CertReport bad = make_fail("example_check", "a property", 3, "witness text");
  CHECK(report_to_json(bad)["verdict"] == "fail");
  CHECK(report_to_json(bad)["witness"] == "witness text");
}

TEST_CASE("file helpers flag unreadable input") {
  try {
    load_json_file("/nonexistent/definitely_missing.json");
    FAIL("expected SchemaError");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::SchemaError);
  }
}

TEST_SUITE_END();
