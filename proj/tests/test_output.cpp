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

#include <cstdlib>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "atomwall/errors.hpp"
#include "atomwall/output.hpp"
#include "atomwall/rng.hpp"
#include "atomwall/verification.hpp"
#include "approx.hpp"
#include "doctest.h"

using namespace atomwall;

namespace {

PotentialCurve small_curve(double lambda_screen) {
  PhysicalConfig cfg;
  cfg.lambda_screen = lambda_screen;
  auto table = std::make_shared<const SpectrumTable>(build_spectrum(20, 200));
  PotentialEngine eng(cfg, table);
  auto c = compute_curve(eng, log_grid(20.0, 1e6, 12), 2);
  c.n_max = 20;
  c.continuum_bins = 200;
  return c;
}

}  // namespace

TEST_CASE("timestamps honour SOURCE_DATE_EPOCH") {
  setenv("SOURCE_DATE_EPOCH", "1700000000", 1);
  CHECK(current_timestamp() == "2023-11-14T22:13:20Z");
  unsetenv("SOURCE_DATE_EPOCH");
  CHECK(current_timestamp().size() == 20);
}

TEST_CASE("curve CSV carries the manifest and is reproducible") {
  setenv("SOURCE_DATE_EPOCH", "0", 1);
  auto curve = small_curve(1e4);
  auto m = make_manifest("curve --x-min 20", curve.config, 20, 200);
  std::ostringstream a, b;
  write_curve_csv(a, curve, m);
  write_curve_csv(b, small_curve(1e4), make_manifest("curve --x-min 20", curve.config, 20, 200));
  unsetenv("SOURCE_DATE_EPOCH");
  CHECK(a.str() == b.str());

  std::istringstream in(a.str());
  std::string line;
  int header = 0, rows = 0;
  bool saw_columns = false, saw_rng = false, saw_screened = false;
  while (std::getline(in, line)) {
    if (line[0] == '#') {
      ++header;
      saw_rng = saw_rng || line.find(kRngName) != std::string::npos;
      continue;
    }
    if (!saw_columns) {
      CHECK(line == "x_aB,phi_hartree,regime,method,rel_err_estimate,phi_alternate,alternate_method");
      saw_columns = true;
      continue;
    }
    ++rows;
    saw_screened = saw_screened || line.find("ScreenedCP") != std::string::npos;
  }
  CHECK(header >= 8);
  CHECK(saw_rng);
  CHECK(rows == 12);
  CHECK(saw_screened);
  CHECK(a.str().find("# timestamp: 1970-01-01T00:00:00Z") != std::string::npos);
  CHECK_THROWS_AS(write_curve_csv("/nonexistent/dir/out.csv", curve, m), IoError);
}

TEST_CASE("plot script") {
  CHECK(plot_script_path("out.csv") == "out.gp");
  CHECK(plot_script_path("dir.v2/out") == "dir.v2/out.gp");
  PhysicalConfig cfg;
  auto plain = plot_script("out.csv", cfg);
  CHECK(plain.find("plot 'out.csv'") != std::string::npos);
  CHECK(plain.find("lambda_at") != std::string::npos);
  CHECK(plain.find("lambda_screen") == std::string::npos);
  cfg.lambda_screen = 1e4;
  auto screened = plot_script("out.csv", cfg);
  CHECK(screened.find("lambda_screen") != std::string::npos);
  CHECK(screened.find("lambda_at << lambda_screen << lambda_ph") != std::string::npos);
}

TEST_CASE("verification report formats") {
  SuiteOptions opt;
  opt.only = {"propagator"};
  auto recs = run_verification(PhysicalConfig{}, opt);
  REQUIRE_FALSE(recs.empty());
  CHECK(all_passed(recs));
  for (const auto& r : recs) CHECK(r.group == "propagator");
  std::ostringstream text, csv;
  write_report_text(text, recs);
  write_report_csv(csv, recs);
  CHECK(text.str().find("checks passed") != std::string::npos);
  CHECK(csv.str().rfind("group,check,expected,observed,tolerance,sigma,pass", 0) == 0);
  opt.only = {"nonsense"};
  CHECK_THROWS_AS(run_verification(PhysicalConfig{}, opt), ParameterError);
}

TEST_CASE("kernel dump") {
  PhysicalConfig cfg;
  cfg.tau = 0.1;
  auto table = std::make_shared<const SpectrumTable>(build_spectrum(20, 200));
  auto p = KernelParams::from_config(cfg, table);
  std::vector<double> ks{1e-4, 1e-3, 1e-2};
  auto m = make_manifest("kernel", cfg, 20, 200);
  std::ostringstream low;
  write_kernel_csv(low, p, ks, KernelBranch::LowTemp, m);
  std::istringstream in(low.str());
  std::string line;
  std::vector<std::string> rows;
  bool header = false;
  while (std::getline(in, line)) {
    if (line[0] == '#') continue;
    if (!header) {
      CHECK(line == "k_aB_inv,B_aB2,branch");
      header = true;
      continue;
    }
    rows.push_back(line);
  }
  REQUIRE(rows.size() == 3);
  CHECK(rows[1].find(",low_temp") != std::string::npos);
  CHECK(std::stod(rows[1].substr(rows[1].find(',') + 1)) == approx(b_low_temp(1e-3, p)).epsilon(1e-9));

  std::ostringstream none;
  CHECK_THROWS_AS(write_kernel_csv(none, p, ks, KernelBranch::General, m), CutoffRequired);
  CHECK(none.str().empty());
  cfg.e_max = -0.05;
  auto pe = KernelParams::from_config(cfg, table);
  std::ostringstream gen;
  write_kernel_csv(gen, pe, ks, KernelBranch::General, make_manifest("kernel", cfg, 20, 200));
  CHECK(gen.str().find(",general") != std::string::npos);
}
