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
#include <sstream>

#include "atomwall/potential.hpp"

namespace atomwall {

namespace {

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4e", v);
  return buf;
}

std::string num(double v) {
  if (std::isinf(v)) return "inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4g", v);
  return buf;
}

}  // namespace

RegimeTable regime_table(const PhysicalConfig& cfg, const SpectrumTable& table) {
  cfg.validate();
  auto s = derive_scales(cfg);
  RegimeTable t;
  t.ordering = screen_ordering(s, cfg.lambda_screen);
  double ls = cfg.lambda_screen;
  t.lambda_at = s.lambda_at;
  t.lambda_ph = s.lambda_ph;
  t.lambda_screen = ls;
  t.boundary = cfg.screened() &&
               (std::fabs(std::log10(ls / s.lambda_at)) < 1.0 ||
                std::fabs(std::log10(ls / s.lambda_ph)) < 1.0);

  double alpha_e = static_polarizability(table);
  double c = cfg.speed_of_light();
  std::string vdw = sci(-table.moment_x2 / 4.0) + " X^-3";
  std::string cp = sci(-3.0 * c * alpha_e / (8.0 * kPi)) + " X^-4";
  double cls = -cfg.kT() * alpha_e / 4.0;
  std::string classical = sci(cls) + " X^-3";
  std::string minus_class = " + " + sci(-cls) + " X^-3";

  auto row = [&](std::string range, std::string f, std::string law,
                 std::string coef) {
    t.rows.push_back({std::move(range), std::move(f), std::move(law),
                      std::move(coef)});
  };
  switch (t.ordering) {
    case ScreenOrdering::Unscreened:
      row("X << lambda_at", "vdW", "X^-3", vdw);
      row("lambda_at << X << lambda_ph", "CP", "X^-4", cp);
      row("X >> lambda_ph", "classical", "X^-3", classical);
      break;
    case ScreenOrdering::BeyondThermal:
      row("X << lambda_at", "vdW", "X^-3", vdw);
      row("lambda_at << X << lambda_ph", "CP", "X^-4", cp);
      row("lambda_ph << X << lambda_screen", "classical", "X^-3", classical);
      row("X >> lambda_screen", "~0", "cancelled", "0");
      break;
    case ScreenOrdering::BetweenScales:
      row("X << lambda_at", "vdW", "X^-3", vdw);
      row("lambda_at << X << lambda_screen", "CP", "X^-4", cp);
      row("lambda_screen << X << lambda_ph", "CP-class", "X^-4, X^-3",
          cp + minus_class);
      row("X >> lambda_ph", "~0", "cancelled", "0");
      break;
    case ScreenOrdering::BelowAtomic:
      row("X << lambda_screen", "vdW", "X^-3", vdw);
      row("lambda_screen << X << lambda_at", "vdW-class", "X^-3",
          vdw + minus_class);
      row("lambda_at << X << lambda_ph", "CP-class", "X^-4, X^-3",
          cp + minus_class);
      row("X >> lambda_ph", "~0", "cancelled", "0");
      break;
  }
  return t;
}

std::string format_regime_table(const RegimeTable& t) {
  std::ostringstream os;
  os << "ordering: " << ordering_name(t.ordering) << "\n";
  os << "lambda_at = " << num(t.lambda_at) << ", lambda_ph = "
     << num(t.lambda_ph) << ", lambda_screen = " << num(t.lambda_screen)
     << "\n";
  os << "boundary: " << (t.boundary ? "yes" : "no") << "\n";
  char buf[256];
  std::snprintf(buf, sizeof buf, "%-34s %-10s %-11s %s\n", "range", "formula",
                "law", "coefficient");
  os << buf;
  for (const auto& r : t.rows) {
    std::snprintf(buf, sizeof buf, "%-34s %-10s %-11s %s\n", r.range.c_str(),
                  r.formula.c_str(), r.law.c_str(), r.coefficient.c_str());
    os << buf;
  }
  return os.str();
}

}  // namespace atomwall
