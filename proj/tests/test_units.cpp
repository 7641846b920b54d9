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
#include <random>
#include <vector>

#include "atomwall/errors.hpp"
#include "atomwall/units.hpp"
#include "approx.hpp"
#include "doctest.h"

using namespace atomwall;

namespace {

PhysicalConfig physical(double tau, double lambda_screen = kInf) {
  PhysicalConfig c;
  c.alpha_fs = 1.0 / 137.036;
  c.tau = tau;
  c.lambda_screen = lambda_screen;
  return c;
}

std::vector<Regime> sweep(const PhysicalConfig& cfg) {
  auto s = derive_scales(cfg);
  std::vector<Regime> seq;
  for (double lx = 1.0; lx < 12.0; lx += 0.01) {
    Regime r = classify_regime(std::pow(10.0, lx), s, cfg.lambda_screen);
    if (seq.empty() || seq.back() != r) seq.push_back(r);
  }
  return seq;
}

}  // namespace

TEST_CASE("derive_scales reproduces the characteristic lengths") {
  auto s = derive_scales(physical(1e-3));
  CHECK(s.a_b == 1.0);
  CHECK(s.lambda_at == approx(8.0 * 137.036 / 3.0).epsilon(1e-12));
  CHECK(s.lambda_at == approx(365.43).epsilon(1e-4));
  CHECK(s.lambda_c == approx(7.297e-3).epsilon(1e-3));

  auto hot = derive_scales(physical(0.01));
  CHECK(hot.lambda_ph == approx(100.0 * hot.lambda_at).epsilon(1e-15));
}

TEST_CASE("scale relations are exact for arbitrary constants") {
  std::mt19937_64 gen(11);
  std::uniform_real_distribution<double> la(-5.0, 0.0), lt(-6.0, 0.0);
  for (int i = 0; i < 200; ++i) {
    PhysicalConfig c;
    c.alpha_fs = std::pow(10.0, la(gen));
    c.tau = std::pow(10.0, lt(gen));
    auto s = derive_scales(c);
    CHECK(std::fabs(s.a_b / s.lambda_at - 0.375 * c.alpha_fs) <=
          4e-16 * c.alpha_fs);
    CHECK(std::fabs(s.lambda_at / s.lambda_ph - c.tau) <= 4e-16 * c.tau);
    CHECK(s.lambda_c == c.alpha_fs * s.a_b);
  }
}

TEST_CASE("validate_hierarchy accepts physical constants") {
  auto cfg = physical(0.01);
  auto rep = validate_hierarchy(derive_scales(cfg), cfg);
  CHECK(rep.passed());
  REQUIRE(rep.checks.size() == 3);
  for (const auto& c : rep.checks) CHECK(c.ratio <= 0.01);
}

TEST_CASE("validate_hierarchy names the violated pair") {
  auto warm = physical(0.5);
  try {
    validate_hierarchy(derive_scales(warm), warm);
    FAIL("expected HierarchyViolation");
  } catch (const HierarchyViolation& e) {
    CHECK(e.pair() == "(lambda_at, lambda_ph)");
    CHECK(e.ratio() == approx(0.5));
  }

  PhysicalConfig toy;
  toy.alpha_fs = 1.0;
  toy.tau = 1e-3;
  try {
    validate_hierarchy(derive_scales(toy), toy);
    FAIL("expected HierarchyViolation");
  } catch (const HierarchyViolation& e) {
    CHECK(e.pair() == "(lambda_c, a_b)");
    CHECK(e.ratio() == approx(1.0));
  }
}

TEST_CASE("classify_regime labels the spec examples") {
  auto cfg = physical(1e-3);
  auto s = derive_scales(cfg);
  CHECK(classify_regime(0.1 * s.lambda_at, s, kInf) == Regime::VdW);
  CHECK(classify_regime(10.0 * s.lambda_at, s, kInf) == Regime::CasimirPolder);
  CHECK(classify_regime(10.0 * s.lambda_ph, s, kInf) == Regime::ClassicalLifshitz);
  CHECK(classify_regime(5.0, s, kInf) == Regime::NearField);
  CHECK(classify_regime(10.0, s, kInf) == Regime::NearField);

  CHECK(classify_regime(3e4, s, 1e4) == Regime::ScreenedCP);
  CHECK(classify_regime(3e3, s, 1e4) == Regime::CasimirPolder);
  CHECK_THROWS_AS(classify_regime(0.0, s, kInf), DomainError);
}

TEST_CASE("crossover points take the larger-distance label") {
  auto s = derive_scales(physical(1e-3));
  CHECK(classify_regime(s.lambda_at, s, kInf) == Regime::CasimirPolder);
  CHECK(classify_regime(s.lambda_ph, s, kInf) == Regime::ClassicalLifshitz);
  CHECK(classify_regime(1e4, s, 1e4) == Regime::ScreenedCP);
}

TEST_CASE("regime sequences follow one of the four orderings") {
  using R = Regime;
  const std::vector<std::vector<R>> allowed = {
      {R::NearField, R::VdW, R::CasimirPolder, R::ClassicalLifshitz},
      {R::NearField, R::VdW, R::CasimirPolder, R::ClassicalLifshitz,
       R::ScreenedCancelled},
      {R::NearField, R::VdW, R::CasimirPolder, R::ScreenedCP,
       R::ScreenedCancelled},
      {R::NearField, R::VdW, R::ScreenedVdW, R::ScreenedCP,
       R::ScreenedCancelled},
  };
  std::mt19937_64 gen(5);
  std::uniform_real_distribution<double> lt(-5.0, -1.5), ls(1.3, 11.0);
  for (int i = 0; i < 100; ++i) {
    double screen = (i % 5 == 0) ? kInf : std::pow(10.0, ls(gen));
    auto seq = sweep(physical(std::pow(10.0, lt(gen)), screen));
    bool ok = false;
    for (const auto& a : allowed) ok = ok || a == seq;
    CHECK(ok);
    // monotone: no label is revisited
    for (std::size_t j = 0; j < seq.size(); ++j)
      for (std::size_t k = j + 1; k < seq.size(); ++k) CHECK(seq[j] != seq[k]);
  }
}

TEST_CASE("screen_ordering places lambda_screen") {
  auto s = derive_scales(physical(1e-3));
  CHECK(screen_ordering(s, kInf) == ScreenOrdering::Unscreened);
  CHECK(screen_ordering(s, 1e8) == ScreenOrdering::BeyondThermal);
  CHECK(screen_ordering(s, s.lambda_ph) == ScreenOrdering::BeyondThermal);
  CHECK(screen_ordering(s, 1e4) == ScreenOrdering::BetweenScales);
  CHECK(screen_ordering(s, 30.0) == ScreenOrdering::BelowAtomic);
}

TEST_CASE("config text parsing") {
  auto cfg = parse_config(
      "# comment line\n"
      "alpha_fs = 0.0073\n"
      "tau = 1e-2   # trailing comment\n"
      "lambda_screen = inf\n"
      "e_max = none\n"
      "rng_seed = 42\n");
  CHECK(cfg.alpha_fs == 0.0073);
  CHECK(cfg.tau == 0.01);
  CHECK_FALSE(cfg.screened());
  CHECK(std::isinf(cfg.e_max));
  CHECK(cfg.rng_seed == 42u);

  auto screened = parse_config("lambda_screen = 1e4\ne_max = 0\n");
  CHECK(screened.lambda_screen == 1e4);
  CHECK(screened.e_max == 0.0);
}

TEST_CASE("config rejects invalid input") {
  CHECK_THROWS_AS(parse_config("colour = blue\n"), ConfigError);
  CHECK_THROWS_AS(parse_config("tau 0.1\n"), ConfigError);
  CHECK_THROWS_AS(parse_config("tau = abc\n"), ConfigError);
  CHECK_THROWS_AS(parse_config("tau = -1\n"), ConfigError);
  CHECK_THROWS_AS(parse_config("alpha_fs = 0\n"), ConfigError);
  CHECK_THROWS_AS(parse_config("lambda_screen = -3\n"), ConfigError);
  CHECK_THROWS_AS(parse_config("e_max = -0.7\n"), ConfigError);
  CHECK_THROWS_AS(parse_config("rng_seed = -1\n"), ConfigError);
  CHECK_THROWS_AS(load_config("/nonexistent/atomwall.cfg"), ConfigError);
}

TEST_CASE("format_config round-trips") {
  PhysicalConfig c;
  c.alpha_fs = 1.0 / 137.036;
  c.tau = 3.3e-4;
  c.lambda_screen = 12345.678;
  c.e_max = 0.25;
  c.k_cut_scale = 2.0;
  c.rng_seed = 99;
  auto back = parse_config(format_config(c));
  CHECK(back.alpha_fs == c.alpha_fs);
  CHECK(back.tau == c.tau);
  CHECK(back.lambda_screen == c.lambda_screen);
  CHECK(back.e_max == c.e_max);
  CHECK(back.k_cut_scale == c.k_cut_scale);
  CHECK(back.rng_seed == c.rng_seed);
}
