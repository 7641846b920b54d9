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

#ifndef ATOMWALL_UNITS_HPP
#define ATOMWALL_UNITS_HPP

// Hartree atomic units throughout: a_B = e = hbar = m = 1, c = 1/alpha_fs.

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace atomwall {

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kGroundEnergy = -0.5;
// E_1 - E_0 for hydrogen.
inline constexpr double kFirstGap = 0.375;
inline constexpr double kDefaultAlpha = 7.2973525693e-3;
inline constexpr double kInf = std::numeric_limits<double>::infinity();
// Closer than this (in a_B) the dipolar model is meaningless.
inline constexpr double kNearFieldLimit = 10.0;
inline constexpr double kHierarchyRatio = 0.1;

struct PhysicalConfig {
  double alpha_fs = kDefaultAlpha;
  double tau = 1e-3;
  double lambda_screen = kInf;  // infinite means unscreened
  double e_max = kInf;          // infinite means no spectral cutoff
  double k_cut_scale = 1.0;
  std::uint64_t rng_seed = 20260101;

  void validate() const;
  double speed_of_light() const { return 1.0 / alpha_fs; }
  double kT() const { return tau * kFirstGap; }
  double beta() const { return 1.0 / kT(); }
  bool screened() const { return lambda_screen < kInf; }
  double k_cut() const { return 1.0 / (k_cut_scale * alpha_fs); }
};

// Parses "key = value" lines; '#' starts a comment.
PhysicalConfig load_config(const std::string& path);
PhysicalConfig parse_config(std::string_view text);
// Applies one key/value pair; throws ConfigError on unknown keys or bad values.
void set_config_value(PhysicalConfig& cfg, std::string_view key,
                      std::string_view value);
std::string format_config(const PhysicalConfig& cfg);

struct LengthScales {
  double lambda_c;
  double a_b;
  double lambda_at;
  double lambda_ph;
};

LengthScales derive_scales(const PhysicalConfig& cfg);

struct HierarchyCheck {
  std::string pair;
  double ratio;
  bool ok;
};

struct HierarchyReport {
  std::vector<HierarchyCheck> checks;
  bool passed() const;
};

// Throws HierarchyViolation on the first ratio above kHierarchyRatio.
HierarchyReport validate_hierarchy(const LengthScales& s,
                                   const PhysicalConfig& cfg);
HierarchyReport hierarchy_ratios(const LengthScales& s,
                                 const PhysicalConfig& cfg);

enum class Regime {
  NearField,
  VdW,
  CasimirPolder,
  ClassicalLifshitz,
  ScreenedVdW,
  ScreenedCP,
  ScreenedCancelled,
};

// Position of lambda_screen among the atomic and thermal lengths.
enum class ScreenOrdering {
  Unscreened,        // lambda_screen infinite
  BeyondThermal,     // lambda_ph <= lambda_screen
  BetweenScales,     // lambda_at <= lambda_screen < lambda_ph
  BelowAtomic,       // lambda_screen < lambda_at
};

std::string_view regime_name(Regime r);
std::string_view ordering_name(ScreenOrdering o);
ScreenOrdering screen_ordering(const LengthScales& s, double lambda_screen);
Regime classify_regime(double x, const LengthScales& s, double lambda_screen);

}  // namespace atomwall

#endif
