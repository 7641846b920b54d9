/*
 * Copyright 2026 The atomwall developers
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// Exercises the shared library through its C interface only.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "approx.hpp"
#include "doctest.h"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "atomwall/atomwall.h"

namespace {

std::string slurp(const std::string& path) {
  std::ifstream f(path);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

std::string temp_path(const char* name) {
  const char* dir = std::getenv("TMPDIR");
  return std::string(dir ? dir : "/tmp") + "/atomwall_capi_" + name;
}

}  // namespace

TEST_CASE("null handles are rejected") {
  CHECK(aw_config_new(nullptr) == AW_ERR_NULL);
  CHECK(std::string(aw_last_error()).find("null") != std::string::npos);
  double v = 0;
  CHECK(aw_config_get(nullptr, "tau", &v) == AW_ERR_NULL);
  CHECK(aw_engine_phi(nullptr, 100.0, nullptr) == AW_ERR_NULL);
  CHECK(aw_spectrum_polarizability(nullptr, &v) == AW_ERR_NULL);
  CHECK(aw_verify_run(nullptr, nullptr, 1, 0, 1, nullptr) == AW_ERR_NULL);
  aw_config_free(nullptr);
  aw_spectrum_free(nullptr);
  aw_engine_free(nullptr);
  aw_curve_free(nullptr);
  aw_report_free(nullptr);
  aw_string_free(nullptr);
}

TEST_CASE("names and version") {
  CHECK(std::string(aw_version()).size() > 0);
  CHECK(std::string(aw_rng_name()) == "splitmix64-counter/box-muller");
  CHECK(std::string(aw_regime_name(AW_REGIME_CASIMIR_POLDER)) == "CasimirPolder");
  CHECK(std::string(aw_regime_name(99)) == "unknown");
  CHECK(std::string(aw_method_name(99)) == "unknown");
}

TEST_CASE("config round trip and validation codes") {
  aw_config* cfg = nullptr;
  REQUIRE(aw_config_new(&cfg) == AW_OK);
  double v = 0;
  REQUIRE(aw_config_get(cfg, "tau", &v) == AW_OK);
  CHECK(v == approx(1e-3));
  CHECK(aw_config_set(cfg, "tau", "0.01") == AW_OK);
  CHECK(aw_config_get(cfg, "tau", &v) == AW_OK);
  CHECK(v == 0.01);
  CHECK(aw_config_set(cfg, "bogus", "1") == AW_ERR_CONFIG);
  CHECK(aw_config_get(cfg, "bogus", &v) == AW_ERR_CONFIG);

  aw_scales s;
  REQUIRE(aw_config_scales(cfg, &s) == AW_OK);
  CHECK(s.lambda_ph / s.lambda_at == approx(100.0));

  char* text = nullptr;
  REQUIRE(aw_config_format(cfg, &text) == AW_OK);
  std::string path = temp_path("cfg.toml");
  std::ofstream(path) << text;
  aw_string_free(text);
  aw_config* back = nullptr;
  REQUIRE(aw_config_new(&back) == AW_OK);
  REQUIRE(aw_config_load(back, path.c_str()) == AW_OK);
  CHECK(aw_config_get(back, "tau", &v) == AW_OK);
  CHECK(v == 0.01);
  CHECK(aw_config_load(back, "/nonexistent.toml") == AW_ERR_CONFIG);
  aw_config_free(back);
  std::remove(path.c_str());

  CHECK(aw_config_check_hierarchy(cfg) == AW_OK);
  CHECK(aw_config_set(cfg, "tau", "0.5") == AW_OK);
  CHECK(aw_config_validate(cfg) == AW_OK);
  CHECK(aw_config_check_hierarchy(cfg) == AW_ERR_HIERARCHY);
  CHECK(std::string(aw_last_error()).size() > 0);
  aw_config_free(cfg);
}

TEST_CASE("spectrum, engine and curve") {
  aw_spectrum* sp = nullptr;
  CHECK(aw_spectrum_build(1, 10, &sp) == AW_ERR_PARAMETER);
  REQUIRE(aw_spectrum_build(20, 200, &sp) == AW_OK);
  double alpha = 0;
  REQUIRE(aw_spectrum_polarizability(sp, &alpha) == AW_OK);
  CHECK(alpha == approx(4.5).epsilon(0.005));
  size_t lines = 0;
  CHECK(aw_spectrum_lines(sp, &lines) == AW_OK);
  CHECK(lines > 20);

  aw_config* cfg = nullptr;
  REQUIRE(aw_config_new(&cfg) == AW_OK);
  aw_engine* eng = nullptr;
  REQUIRE(aw_engine_new(cfg, sp, &eng) == AW_OK);

  aw_phi p;
  REQUIRE(aw_engine_phi(eng, 1e5, &p) == AW_OK);
  CHECK(p.phi < 0);
  CHECK(p.regime == AW_REGIME_CASIMIR_POLDER);
  CHECK(p.phi_unscreened == p.phi);
  CHECK(aw_engine_phi(eng, 5.0, &p) == AW_ERR_DOMAIN);

  std::vector<double> xs(8);
  CHECK(aw_log_grid(100.0, 10.0, 8, xs.data()) == AW_ERR_PARAMETER);
  REQUIRE(aw_log_grid(100.0, 1e6, 8, xs.data()) == AW_OK);
  aw_curve* curve = nullptr;
  REQUIRE(aw_curve_compute(eng, xs.data(), xs.size(), 2, &curve) == AW_OK);
  size_t n = 0;
  CHECK(aw_curve_size(curve, &n) == AW_OK);
  CHECK(n == 8);
  CHECK(aw_curve_point(curve, 8, &p) == AW_ERR_PARAMETER);
  REQUIRE(aw_curve_point(curve, 3, &p) == AW_OK);
  CHECK(p.x == approx(xs[3]));

  std::string csv = temp_path("curve.csv");
  char* gp = nullptr;
  REQUIRE(aw_plot_script_path(csv.c_str(), &gp) == AW_OK);
  std::string gp_path = gp;
  aw_string_free(gp);
  setenv("SOURCE_DATE_EPOCH", "86400", 1);
  REQUIRE(aw_curve_write(curve, "capi-test", csv.c_str(), gp_path.c_str()) == AW_OK);
  std::string first = slurp(csv);
  REQUIRE(aw_curve_write(curve, "capi-test", csv.c_str(), nullptr) == AW_OK);
  unsetenv("SOURCE_DATE_EPOCH");
  CHECK(slurp(csv) == first);
  CHECK(first.find("# timestamp: 1970-01-02T00:00:00Z") != std::string::npos);
  CHECK(slurp(gp_path).find("plot") != std::string::npos);
  CHECK(aw_curve_write(curve, "x", "/nonexistent/dir/c.csv", nullptr) == AW_ERR_IO);
  std::remove(csv.c_str());
  std::remove(gp_path.c_str());

  std::string kcsv = temp_path("kernel.csv");
  double ks[] = {1e-4, 1e-3};
  REQUIRE(aw_kernel_write(eng, ks, 2, 0, kcsv.c_str()) == AW_OK);
  CHECK(slurp(kcsv).find("k_aB_inv,B_aB2,branch") != std::string::npos);
  CHECK(aw_kernel_write(eng, ks, 2, 1, kcsv.c_str()) == AW_ERR_CUTOFF_REQUIRED);
  std::remove(kcsv.c_str());

  char* table = nullptr;
  int boundary = -1;
  REQUIRE(aw_regime_table(cfg, sp, &table, &boundary) == AW_OK);
  CHECK(std::string(table).find("unscreened") != std::string::npos);
  CHECK(boundary == 0);
  aw_string_free(table);

  aw_curve_free(curve);
  aw_engine_free(eng);
  aw_spectrum_free(sp);
  aw_config_free(cfg);
}

TEST_CASE("verification report") {
  aw_config* cfg = nullptr;
  REQUIRE(aw_config_new(&cfg) == AW_OK);
  aw_report* rep = nullptr;
  CHECK(aw_verify_run(cfg, "nonsense", 1, 0, 1, &rep) == AW_ERR_PARAMETER);
  REQUIRE(aw_verify_run(cfg, "propagator", 20260101, 0, 1, &rep) == AW_OK);
  size_t n = 0;
  REQUIRE(aw_report_size(rep, &n) == AW_OK);
  CHECK(n > 0);
  int passed = 0;
  CHECK(aw_report_passed(rep, &passed) == AW_OK);
  CHECK(passed == 1);
  aw_check c;
  REQUIRE(aw_report_check(rep, 0, &c) == AW_OK);
  CHECK(std::string(c.group) == "propagator");
  CHECK(aw_report_check(rep, n, &c) == AW_ERR_PARAMETER);
  char* text = nullptr;
  REQUIRE(aw_report_text(rep, &text) == AW_OK);
  CHECK(std::string(text).find("checks passed") != std::string::npos);
  aw_string_free(text);
  aw_report_free(rep);
  aw_config_free(cfg);
}
