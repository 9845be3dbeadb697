// Exercises the shared-library surface exactly as an external consumer
// would: only opconv/opconv.h, opaque handles, and status codes.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstring>
#include <string>

#include <json.hpp>

#include "opconv/opconv.h"

namespace {

struct MatrixGuard {
  opconv_matrix* m = nullptr;
  ~MatrixGuard() { opconv_matrix_free(m); }
};

struct FunctionGuard {
  opconv_function* f = nullptr;
  ~FunctionGuard() { opconv_function_free(f); }
};

struct StringGuard {
  char* s = nullptr;
  ~StringGuard() { opconv_string_free(s); }
};

opconv_matrix* make_scalar(double value) {
  opconv_matrix* m = nullptr;
  REQUIRE(opconv_matrix_create(1, &value, nullptr, &m) == OPCONV_OK);
  return m;
}

opconv_matrix* make_diag2(double a, double b) {
  const double real[4] = {a, 0.0, 0.0, b};
  opconv_matrix* m = nullptr;
  REQUIRE(opconv_matrix_create(2, real, nullptr, &m) == OPCONV_OK);
  return m;
}

nlohmann::json strip_timing(const char* report) {
  auto doc = nlohmann::json::parse(report);
  doc.erase("elapsed_ms");
  return doc;
}

}  // namespace

TEST_CASE("version and error plumbing") {
  CHECK(std::string(opconv_version()) == "0.1.0");
  CHECK(opconv_matrix_parse(nullptr, nullptr, nullptr) == OPCONV_ERR_NULL_ARGUMENT);
  CHECK(std::strlen(opconv_last_error()) > 0);
}

TEST_CASE("matrix lifecycle through the C surface") {
  const double real[4] = {2.0, 1.0, 1.0, 2.0};
  MatrixGuard m;
  REQUIRE(opconv_matrix_create(2, real, nullptr, &m.m) == OPCONV_OK);
  CHECK(opconv_matrix_dim(m.m) == 2);
  double re = 0.0, im = 1.0;
  CHECK(opconv_matrix_entry(m.m, 0, 1, &re, &im) == OPCONV_OK);
  CHECK(re == 1.0);
  CHECK(im == 0.0);
  CHECK(opconv_matrix_entry(m.m, 2, 0, &re, &im) == OPCONV_ERR_INVALID_ARGUMENT);

  double lowest = 0.0;
  CHECK(opconv_matrix_min_eigenvalue(m.m, &lowest) == OPCONV_OK);
  CHECK(lowest == doctest::Approx(1.0));

  opconv_psd_verdict verdict{};
  CHECK(opconv_matrix_psd_certificate(m.m, 1e-8, &verdict) == OPCONV_OK);
  CHECK(verdict.is_psd == 1);
  CHECK(verdict.gap_norm == doctest::Approx(3.0));

  StringGuard text;
  REQUIRE(opconv_matrix_serialize(m.m, &text.s) == OPCONV_OK);
  MatrixGuard reparsed;
  double asymmetry = -1.0;
  REQUIRE(opconv_matrix_parse(text.s, &reparsed.m, &asymmetry) == OPCONV_OK);
  CHECK(asymmetry == 0.0);
  CHECK(opconv_matrix_entry(reparsed.m, 1, 0, &re, &im) == OPCONV_OK);
  CHECK(re == 1.0);
}

TEST_CASE("matrix parse and create reject bad input") {
  MatrixGuard m;
  CHECK(opconv_matrix_parse("{broken", &m.m, nullptr) == OPCONV_ERR_PARSE);
  CHECK(opconv_matrix_parse(R"({"dim":2,"real":[[1,2],[3,1]]})", &m.m, nullptr) ==
        OPCONV_ERR_PARSE);
  const double lopsided[4] = {1.0, 2.0, 3.0, 1.0};
  CHECK(opconv_matrix_create(2, lopsided, nullptr, &m.m) ==
        OPCONV_ERR_INVALID_ARGUMENT);
  CHECK(opconv_matrix_create(0, lopsided, nullptr, &m.m) ==
        OPCONV_ERR_INVALID_ARGUMENT);
}

TEST_CASE("function catalog over the C surface") {
  FunctionGuard f;
  REQUIRE(opconv_function_lookup("resolvent:1", &f.f) == OPCONV_OK);
  CHECK(opconv_function_is_operator_convex(f.f) == 1);
  double value = 0.0;
  CHECK(opconv_function_value(f.f, 1.0, &value) == OPCONV_OK);
  CHECK(value == doctest::Approx(0.5));

  FunctionGuard unknown;
  CHECK(opconv_function_lookup("zeta", &unknown.f) == OPCONV_ERR_UNKNOWN_FUNCTION);
  FunctionGuard bad;
  CHECK(opconv_function_lookup("resolvent:0", &bad.f) == OPCONV_ERR_INVALID_ARGUMENT);

  FunctionGuard neglog;
  REQUIRE(opconv_function_lookup("neglog", &neglog.f) == OPCONV_OK);
  CHECK(opconv_function_value(neglog.f, -1.0, &value) == OPCONV_ERR_DOMAIN);
  FunctionGuard g;
  REQUIRE(opconv_function_lookup("g_counter", &g.f) == OPCONV_OK);
  CHECK(opconv_function_is_operator_convex(g.f) == 0);
}

TEST_CASE("matrix calculus anchors through the C surface") {
  MatrixGuard b;
  b.m = make_diag2(1.0, 2.0);
  FunctionGuard square;
  REQUIRE(opconv_function_lookup("square", &square.f) == OPCONV_OK);
  MatrixGuard squared;
  REQUIRE(opconv_apply_function(square.f, b.m, &squared.m) == OPCONV_OK);
  double re = 0.0, im = 0.0;
  CHECK(opconv_matrix_entry(squared.m, 1, 1, &re, &im) == OPCONV_OK);
  CHECK(re == doctest::Approx(4.0));

  FunctionGuard neglog;
  REQUIRE(opconv_function_lookup("neglog", &neglog.f) == OPCONV_OK);
  MatrixGuard indefinite;
  indefinite.m = make_diag2(-1.0, 1.0);
  MatrixGuard out;
  CHECK(opconv_apply_function(neglog.f, indefinite.m, &out.m) == OPCONV_ERR_DOMAIN);
}

TEST_CASE("scalar inequality anchors through the C surface") {
  MatrixGuard one, two, three;
  one.m = make_scalar(1.0);
  two.m = make_scalar(2.0);
  three.m = make_scalar(3.0);

  MatrixGuard ah;
  REQUIRE(opconv_strengthened_ah_gap(one.m, two.m, &ah.m) == OPCONV_OK);
  double value = 0.0;
  CHECK(opconv_matrix_min_eigenvalue(ah.m, &value) == OPCONV_OK);
  CHECK(value == doctest::Approx(1.0 / 108.0).epsilon(1e-12));

  FunctionGuard g;
  REQUIRE(opconv_function_lookup("g_counter", &g.f) == OPCONV_OK);
  MatrixGuard gap;
  REQUIRE(opconv_lower_bound_gap(g.f, one.m, three.m, 0.25, &gap.m) == OPCONV_OK);
  CHECK(opconv_matrix_min_eigenvalue(gap.m, &value) == OPCONV_OK);
  CHECK(value == doctest::Approx(-0.0016717275706308).epsilon(1e-9));

  MatrixGuard modulus, rhs;
  FunctionGuard xlogx;
  REQUIRE(opconv_function_lookup("xlogx", &xlogx.f) == OPCONV_OK);
  REQUIRE(opconv_modulus_of_convexity(xlogx.f, one.m, three.m, 0.25, &modulus.m) ==
          OPCONV_OK);
  REQUIRE(opconv_lower_bound_rhs(xlogx.f, one.m, three.m, 0.25, &rhs.m) == OPCONV_OK);
  double mod_value = 0.0, rhs_value = 0.0;
  CHECK(opconv_matrix_min_eigenvalue(modulus.m, &mod_value) == OPCONV_OK);
  CHECK(opconv_matrix_min_eigenvalue(rhs.m, &rhs_value) == OPCONV_OK);
  CHECK(mod_value >= rhs_value);

  MatrixGuard divergence;
  REQUIRE(opconv_bregman_divergence(xlogx.f, two.m, one.m, &divergence.m) == OPCONV_OK);
  CHECK(opconv_matrix_min_eigenvalue(divergence.m, &value) == OPCONV_OK);
  CHECK(value == doctest::Approx(2.0 * std::log(2.0) - 1.0).epsilon(1e-12));

  // Bad mixing weight surfaces as an invalid argument.
  CHECK(opconv_lower_bound_gap(g.f, one.m, three.m, 1.5, &gap.m) ==
        OPCONV_ERR_INVALID_ARGUMENT);
}

TEST_CASE("entropy anchors through the C surface") {
  MatrixGuard mixed, pure;
  mixed.m = make_diag2(0.5, 0.5);
  pure.m = make_diag2(1.0, 0.0);
  CHECK(opconv_matrix_is_density(mixed.m) == OPCONV_OK);
  MatrixGuard not_density;
  not_density.m = make_diag2(1.0, 1.0);
  CHECK(opconv_matrix_is_density(not_density.m) == OPCONV_ERR_INVALID_ARGUMENT);

  double value = 0.0;
  CHECK(opconv_von_neumann_entropy(mixed.m, &value) == OPCONV_OK);
  CHECK(value == doctest::Approx(std::log(2.0)));
  CHECK(opconv_trace_distance(pure.m, mixed.m, &value) == OPCONV_OK);
  CHECK(value == doctest::Approx(1.0));
  CHECK(opconv_relative_entropy(pure.m, mixed.m, &value) == OPCONV_OK);
  CHECK(value == doctest::Approx(std::log(2.0)));
  CHECK(opconv_relative_entropy(mixed.m, pure.m, &value) == OPCONV_OK);
  CHECK(std::isinf(value));
}

TEST_CASE("verify driver through the C surface") {
  opconv_verify_options options{};
  options.suite = "theorem1";
  options.functions = "xlogx,resolvent:1";
  options.seed = 7;
  options.trials = 10;
  StringGuard report;
  int violations = -1;
  REQUIRE(opconv_run_verify(&options, &report.s, &violations) == OPCONV_OK);
  CHECK(violations == 0);
  const auto doc = nlohmann::json::parse(report.s);
  CHECK(doc.at("checks").at("xlogx").at("pass") == 10);
  CHECK(doc.at("checks").at("resolvent:1").at("fail") == 0);

  StringGuard again;
  REQUIRE(opconv_run_verify(&options, &again.s, &violations) == OPCONV_OK);
  CHECK(strip_timing(report.s) == strip_timing(again.s));

  options.suite = "nosuch";
  StringGuard bad;
  CHECK(opconv_run_verify(&options, &bad.s, &violations) ==
        OPCONV_ERR_INVALID_ARGUMENT);
}

TEST_CASE("gap, entropy, and mine drivers through the C surface") {
  MatrixGuard one, three;
  one.m = make_scalar(1.0);
  three.m = make_scalar(3.0);
  FunctionGuard neglog;
  REQUIRE(opconv_function_lookup("neglog", &neglog.f) == OPCONV_OK);
  StringGuard gap_doc;
  int violation = -1;
  REQUIRE(opconv_run_gap(one.m, three.m, 0.25, neglog.f, 1e-8, &gap_doc.s,
                         &violation) == OPCONV_OK);
  CHECK(violation == 0);
  CHECK(nlohmann::json::parse(gap_doc.s).at("is_psd").get<bool>());

  MatrixGuard mixed, pure;
  mixed.m = make_diag2(0.5, 0.5);
  pure.m = make_diag2(1.0, 0.0);
  StringGuard entropy_doc;
  REQUIRE(opconv_run_entropy(pure.m, mixed.m, 0.5, &entropy_doc.s, &violation) ==
          OPCONV_OK);
  CHECK(violation == 0);
  MatrixGuard not_density;
  not_density.m = make_diag2(1.0, 1.0);
  StringGuard rejected;
  CHECK(opconv_run_entropy(not_density.m, mixed.m, 0.5, &rejected.s, &violation) ==
        OPCONV_ERR_INVALID_ARGUMENT);

  opconv_mine_options mine{};
  mine.function = "g_counter";
  mine.seed = 3;
  mine.trials = 10;
  StringGuard mine_doc;
  int found = -1;
  REQUIRE(opconv_run_mine(&mine, &mine_doc.s, &found) == OPCONV_OK);
  CHECK(found == 1);
  const auto witness = nlohmann::json::parse(mine_doc.s).at("record");
  CHECK(witness.at("min_gap_eigenvalue").get<double>() <= -1e-4);

  mine.function = "squiggle";
  StringGuard unknown_doc;
  CHECK(opconv_run_mine(&mine, &unknown_doc.s, &found) == OPCONV_ERR_UNKNOWN_FUNCTION);
}
