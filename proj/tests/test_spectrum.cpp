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

#include <cmath>
#include <cstdio>
#include <filesystem>

#include "atomwall/errors.hpp"
#include "atomwall/spectrum.hpp"
#include "approx.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace atomwall;

TEST_CASE("n = 2 table holds the summed 2p strength") {
  auto t = build_spectrum(2, 0);
  REQUIRE(t.lines.size() == 1);
  CHECK(t.lines[0].delta_e == 0.375);
  double closed = std::pow(128.0 * std::sqrt(2.0) / 243.0, 2);
  CHECK(t.lines[0].strength == approx(closed).epsilon(1e-13));
  CHECK(t.lines[0].strength == approx(0.5549).epsilon(1e-4));
  CHECK(t.lines[0].strength == approx(oracle::dipole_strength(2)).epsilon(1e-10));
  CHECK(static_polarizability(t) == approx(2.960).epsilon(1e-3));
}

TEST_CASE("bound strengths agree with numerical radial integrals") {
  for (int n = 2; n <= 12; ++n) {
    CAPTURE(n);
    CHECK(bound_strength(n) == approx(oracle::dipole_strength(n)).epsilon(1e-9));
  }
  for (int n = 2; n < 6; ++n) CHECK(bound_strength(n + 1) < bound_strength(n));
  CHECK_THROWS_AS(bound_strength(1), ParameterError);
}

TEST_CASE("radial integrals agree with quadrature") {
  struct Case { int n, l, n2, l2, p; };
  for (auto c : {Case{1, 0, 1, 0, 2}, Case{2, 1, 3, 0, 1}, Case{4, 3, 5, 2, 1},
                 Case{3, 2, 3, 2, 0}, Case{5, 1, 2, 0, 1}}) {
    double num = oracle::integrate(
        [&](double r) {
          return oracle::radial_wavefunction(c.n, c.l, r) *
                 oracle::radial_wavefunction(c.n2, c.l2, r) * std::pow(r, 2 + c.p);
        },
        0.0, 300.0, 400);
    CHECK(radial_integral(c.n, c.l, c.n2, c.l2, c.p) == approx(num).epsilon(1e-10));
  }
}

TEST_CASE("every bound gap lies in (0, 0.5]") {
  auto t = build_spectrum(20, 0);
  CHECK(t.lines.size() == 19);
  for (const auto& l : t.lines) {
    CHECK(l.delta_e > 0.0);
    CHECK(l.delta_e <= 0.5);
  }
}

TEST_CASE("ground moment") {
  CHECK(ground_moment() == approx(1.0).epsilon(1e-14));
  CHECK(oracle::ground_r2() / 3.0 == approx(ground_moment()).epsilon(1e-12));
  CHECK(3.0 * ground_moment() == approx(oracle::ground_r2()).epsilon(1e-12));
}

TEST_CASE("Dalgarno-Lewis oracle recovers 9/2") {
  CHECK(oracle::dalgarno_lewis_polarizability() == approx(4.5).epsilon(1e-6));
}

TEST_CASE("static polarizability") {
  auto bound = build_spectrum(20, 0);
  CHECK(static_polarizability(bound) == approx(3.66).epsilon(0.01));
  CHECK(static_polarizability(bound) ==
        approx(oracle::bound_polarizability(20)).epsilon(1e-9));

  auto full = build_spectrum(kDefaultNMax, kDefaultContinuumBins);
  double dl = oracle::dalgarno_lewis_polarizability();
  CHECK(std::fabs(static_polarizability(full) / dl - 1.0) <= 5e-3);
}

TEST_CASE("completeness sum rule") {
  auto full = build_spectrum(20, 200);
  CHECK(std::fabs(full.strength_sum() - ground_moment()) <= 1e-3);
  CHECK(full.strength_sum() <= full.moment_x2 + 1e-3);
}

TEST_CASE("lines are sorted and polarizability grows with added lines") {
  auto t = build_spectrum(20, 200);
  for (std::size_t i = 1; i < t.lines.size(); ++i)
    CHECK(t.lines[i - 1].delta_e <= t.lines[i].delta_e);
  SpectrumTable partial = t;
  partial.lines.clear();
  double prev = 0.0;
  for (const auto& l : t.lines) {
    partial.lines.push_back(l);
    double a = static_polarizability(partial);
    CHECK(a >= prev);
    prev = a;
  }
}

TEST_CASE("apply_cutoff") {
  auto t = build_spectrum(20, 200);
  auto bound = apply_cutoff(t, 0.0);
  for (const auto& l : bound.lines) CHECK(bound.e0 + l.delta_e <= 0.0);
  CHECK(bound.lines.size() == 20);  // n = 2..20 plus the Rydberg tail line
  CHECK(bound.cutoff_applied == 0.0);

  CHECK(apply_cutoff(t, -0.2).lines.empty());

  auto same = apply_cutoff(t, kInf);
  CHECK(same.lines.size() == t.lines.size());

  auto once = apply_cutoff(t, 0.7);
  auto twice = apply_cutoff(once, 0.7);
  REQUIRE(once.lines.size() == twice.lines.size());
  for (std::size_t i = 0; i < once.lines.size(); ++i) {
    CHECK(once.lines[i].delta_e == twice.lines[i].delta_e);
    CHECK(once.lines[i].strength == twice.lines[i].strength);
  }
  CHECK_THROWS_AS(apply_cutoff(t, -0.6), ParameterError);
}

TEST_CASE("build_spectrum rejects bad parameters") {
  CHECK_THROWS_AS(build_spectrum(1, 0), ParameterError);
  CHECK_THROWS_AS(build_spectrum(5, -1), ParameterError);
}

TEST_CASE("spectrum CSV round trip") {
  auto t = apply_cutoff(build_spectrum(6, 20), 2.0);
  auto path = std::filesystem::temp_directory_path() / "atomwall_spectrum_rt.csv";
  write_spectrum_csv(t, path.string());
  auto back = read_spectrum_csv(path.string());
  std::filesystem::remove(path);
  REQUIRE(back.lines.size() == t.lines.size());
  for (std::size_t i = 0; i < t.lines.size(); ++i) {
    CHECK(back.lines[i].label == t.lines[i].label);
    CHECK(back.lines[i].delta_e == t.lines[i].delta_e);
    CHECK(back.lines[i].strength == t.lines[i].strength);
  }
  CHECK(back.n_max == 6);
  CHECK(back.continuum_bins == 20);
  CHECK(back.cutoff_applied == 2.0);
  CHECK_THROWS_AS(read_spectrum_csv("/nonexistent/spectrum.csv"), IoError);
}

TEST_CASE("level systems carry symmetric couplings") {
  auto lv = hydrogen_levels(4);
  REQUIRE(lv.size() == 4);
  for (std::size_t i = 0; i < lv.size(); ++i)
    for (std::size_t j = 0; j < lv.size(); ++j)
      CHECK(lv.pair_strength[i][j] == approx(lv.pair_strength[j][i]).epsilon(1e-14));
  auto g = lv.ground_table();
  REQUIRE(g.lines.size() == 3);
  for (int n = 2; n <= 4; ++n)
    CHECK(g.lines[n - 2].strength == approx(bound_strength(n)).epsilon(1e-12));
  CHECK_THROWS_AS(hydrogen_levels(6), ParameterError);
  CHECK(hydrogen_levels_below(-0.1).size() == 2);
}
