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

#include "atomwall/units.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "atomwall/errors.hpp"

namespace atomwall {

namespace {

std::string_view trim(std::string_view s) {
  const char* ws = " \t\r\n";
  auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

bool is_infinite_word(std::string_view v) {
  return v == "inf" || v == "infinity" || v == "none" || v == "unscreened";
}

double parse_number(std::string_view key, std::string_view v) {
  std::string buf(v);
  char* end = nullptr;
  double d = std::strtod(buf.c_str(), &end);
  if (buf.empty() || end != buf.c_str() + buf.size() || !std::isfinite(d))
    throw ConfigError("invalid numeric value for " + std::string(key) + ": '" +
                      buf + "'");
  return d;
}

std::string fmt_double(double v) {
  if (std::isinf(v)) return "inf";
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

}  // namespace

void PhysicalConfig::validate() const {
  if (!(alpha_fs > 0) || !std::isfinite(alpha_fs))
    throw ConfigError("alpha_fs must be positive");
  if (!(tau > 0) || !std::isfinite(tau))
    throw ConfigError("tau must be positive");
  if (!(lambda_screen > 0)) throw ConfigError("lambda_screen must be positive");
  if (std::isnan(e_max)) throw ConfigError("e_max must be a number or none");
  if (e_max <= kGroundEnergy)
    throw ConfigError("e_max must lie above the ground energy -0.5 Hartree");
  if (!(k_cut_scale > 0) || !std::isfinite(k_cut_scale))
    throw ConfigError("k_cut_scale must be positive");
}

void set_config_value(PhysicalConfig& cfg, std::string_view key,
                      std::string_view value) {
  key = trim(key);
  value = trim(value);
  if (key == "alpha_fs") {
    cfg.alpha_fs = parse_number(key, value);
  } else if (key == "tau") {
    cfg.tau = parse_number(key, value);
  } else if (key == "lambda_screen") {
    cfg.lambda_screen = is_infinite_word(value) ? kInf : parse_number(key, value);
  } else if (key == "e_max") {
    cfg.e_max = is_infinite_word(value) ? kInf : parse_number(key, value);
  } else if (key == "k_cut_scale") {
    cfg.k_cut_scale = parse_number(key, value);
  } else if (key == "rng_seed" || key == "seed") {
    std::uint64_t s = 0;
    auto r = std::from_chars(value.data(), value.data() + value.size(), s);
    if (r.ec != std::errc() || r.ptr != value.data() + value.size())
      throw ConfigError("invalid rng_seed: '" + std::string(value) + "'");
    cfg.rng_seed = s;
  } else {
    throw ConfigError("unknown config key '" + std::string(key) + "'");
  }
}

PhysicalConfig parse_config(std::string_view text) {
  PhysicalConfig cfg;
  std::size_t pos = 0;
  int lineno = 0;
  while (pos <= text.size()) {
    auto nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    auto line = text.substr(pos, nl - pos);
    pos = nl + 1;
    ++lineno;
    if (auto h = line.find('#'); h != std::string_view::npos)
      line = line.substr(0, h);
    line = trim(line);
    if (line.empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string_view::npos)
      throw ConfigError("line " + std::to_string(lineno) +
                        ": expected key = value");
    set_config_value(cfg, line.substr(0, eq), line.substr(eq + 1));
  }
  cfg.validate();
  return cfg;
}

PhysicalConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

std::string format_config(const PhysicalConfig& cfg) {
  std::ostringstream os;
  os << "alpha_fs = " << fmt_double(cfg.alpha_fs) << "\n"
     << "tau = " << fmt_double(cfg.tau) << "\n"
     << "lambda_screen = " << fmt_double(cfg.lambda_screen) << "\n"
     << "e_max = " << (std::isinf(cfg.e_max) ? "none" : fmt_double(cfg.e_max))
     << "\n"
     << "k_cut_scale = " << fmt_double(cfg.k_cut_scale) << "\n"
     << "rng_seed = " << cfg.rng_seed << "\n";
  return os.str();
}

LengthScales derive_scales(const PhysicalConfig& cfg) {
  LengthScales s;
  s.a_b = 1.0;
  s.lambda_c = cfg.alpha_fs * s.a_b;
  s.lambda_at = s.a_b / (0.375 * cfg.alpha_fs);
  s.lambda_ph = s.lambda_at / cfg.tau;
  return s;
}

bool HierarchyReport::passed() const {
  for (const auto& c : checks)
    if (!c.ok) return false;
  return true;
}

HierarchyReport hierarchy_ratios(const LengthScales& s,
                                 const PhysicalConfig& cfg) {
  (void)cfg;
  HierarchyReport rep;
  auto add = [&](const char* name, double r) {
    rep.checks.push_back({name, r, r <= kHierarchyRatio});
  };
  add("(lambda_c, a_b)", s.lambda_c / s.a_b);
  add("(a_b, lambda_at)", s.a_b / s.lambda_at);
  add("(lambda_at, lambda_ph)", s.lambda_at / s.lambda_ph);
  return rep;
}

HierarchyReport validate_hierarchy(const LengthScales& s,
                                   const PhysicalConfig& cfg) {
  auto rep = hierarchy_ratios(s, cfg);
  for (const auto& c : rep.checks)
    if (!c.ok) throw HierarchyViolation(c.pair, c.ratio);
  return rep;
}

std::string_view regime_name(Regime r) {
  switch (r) {
    case Regime::NearField: return "NearField";
    case Regime::VdW: return "VdW";
    case Regime::CasimirPolder: return "CasimirPolder";
    case Regime::ClassicalLifshitz: return "ClassicalLifshitz";
    case Regime::ScreenedVdW: return "ScreenedVdW";
    case Regime::ScreenedCP: return "ScreenedCP";
    case Regime::ScreenedCancelled: return "ScreenedCancelled";
  }
  return "?";
}

std::string_view ordering_name(ScreenOrdering o) {
  switch (o) {
    case ScreenOrdering::Unscreened: return "unscreened";
    case ScreenOrdering::BeyondThermal: return "lambda_at << lambda_ph << lambda_screen";
    case ScreenOrdering::BetweenScales: return "lambda_at << lambda_screen << lambda_ph";
    case ScreenOrdering::BelowAtomic: return "lambda_screen << lambda_at << lambda_ph";
  }
  return "?";
}

ScreenOrdering screen_ordering(const LengthScales& s, double lambda_screen) {
  if (!(lambda_screen < kInf)) return ScreenOrdering::Unscreened;
  if (lambda_screen >= s.lambda_ph) return ScreenOrdering::BeyondThermal;
  if (lambda_screen >= s.lambda_at) return ScreenOrdering::BetweenScales;
  return ScreenOrdering::BelowAtomic;
}

Regime classify_regime(double x, const LengthScales& s, double lambda_screen) {
  if (!(x > 0)) throw DomainError("classify_regime requires x > 0");
  if (x <= kNearFieldLimit * s.a_b) return Regime::NearField;
  switch (screen_ordering(s, lambda_screen)) {
    case ScreenOrdering::Unscreened:
      if (x < s.lambda_at) return Regime::VdW;
      if (x < s.lambda_ph) return Regime::CasimirPolder;
      return Regime::ClassicalLifshitz;
    case ScreenOrdering::BeyondThermal:
      if (x < s.lambda_at) return Regime::VdW;
      if (x < s.lambda_ph) return Regime::CasimirPolder;
      if (x < lambda_screen) return Regime::ClassicalLifshitz;
      return Regime::ScreenedCancelled;
    case ScreenOrdering::BetweenScales:
      if (x < s.lambda_at) return Regime::VdW;
      if (x < lambda_screen) return Regime::CasimirPolder;
      if (x < s.lambda_ph) return Regime::ScreenedCP;
      return Regime::ScreenedCancelled;
    case ScreenOrdering::BelowAtomic:
      if (x < lambda_screen) return Regime::VdW;
      if (x < s.lambda_at) return Regime::ScreenedVdW;
      if (x < s.lambda_ph) return Regime::ScreenedCP;
      return Regime::ScreenedCancelled;
  }
  return Regime::NearField;
}

}  // namespace atomwall
