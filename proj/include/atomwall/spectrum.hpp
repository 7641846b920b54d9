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

#ifndef ATOMWALL_SPECTRUM_HPP
#define ATOMWALL_SPECTRUM_HPP

#include <string>
#include <vector>

#include "atomwall/units.hpp"

namespace atomwall {

struct SpectralLine {
  std::string label;
  double delta_e;   // E_j - E_0, Hartree
  double strength;  // |<0|x|j>|^2 summed over the degenerate multiplet, a_B^2
};

struct SpectrumTable {
  std::vector<SpectralLine> lines;  // sorted by delta_e
  double e0 = kGroundEnergy;
  double moment_x2 = 1.0;
  double cutoff_applied = kInf;
  // Provenance only.
  int n_max = 0;
  int continuum_bins = 0;
  double k_max_continuum = 0.0;

  double strength_sum() const;
  // Sum of strength/delta_e; half the static polarizability.
  double inverse_moment() const;
};

inline constexpr double kDefaultContinuumKMax = 10.0;
inline constexpr int kDefaultNMax = 20;
inline constexpr int kDefaultContinuumBins = 200;

// Bound 1s->np lines for n <= n_max. With continuum_bins > 0 a single line
// carries the n > n_max Rydberg series and the 1s->kp continuum is binned
// uniformly in photoelectron momentum up to k_max_continuum.
SpectrumTable build_spectrum(int n_max, int continuum_bins,
                             double k_max_continuum = kDefaultContinuumKMax);

// <1s|x^2|1s>.
double ground_moment();

// 2 * sum strength/delta_e, a_B^3.
double static_polarizability(const SpectrumTable& table);

// Drops lines with E_0 + delta_e > e_max.
SpectrumTable apply_cutoff(const SpectrumTable& table, double e_max);

// |<1s|x|np>|^2 summed over m, closed form.
double bound_strength(int n);

// Oscillator-strength density df/dE of the 1s -> kp continuum, per Hartree.
double continuum_df_de(double k);

void write_spectrum_csv(const SpectrumTable& table, const std::string& path);
SpectrumTable read_spectrum_csv(const std::string& path);

// Hydrogen radial integral int R_{n l} R_{n' l'} r^(2+power) dr, n, n' <= 12.
double radial_integral(int n, int l, int n2, int l2, int power);

// Bound levels grouped by principal quantum number.
struct LevelSystem {
  std::vector<double> energy;       // Hartree
  std::vector<double> degeneracy;   // multiplicity entering Z
  // pair_strength[i][j] = sum over sublevels of |<i|x|j>|^2 (symmetric);
  // the diagonal holds degenerate intra-level couplings.
  std::vector<std::vector<double>> pair_strength;

  std::size_t size() const { return energy.size(); }
  // Lines from the lowest level, for comparison with the low-T kernel.
  SpectrumTable ground_table() const;
};

// Hydrogen n = 1..n_top (n_top <= 5) with exact x matrix elements.
LevelSystem hydrogen_levels(int n_top);
// Levels with E_n <= e_max among n <= 5.
LevelSystem hydrogen_levels_below(double e_max);
LevelSystem two_level_system(double gap, double strength);

}  // namespace atomwall

#endif
