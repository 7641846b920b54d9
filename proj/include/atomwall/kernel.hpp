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

#ifndef ATOMWALL_KERNEL_HPP
#define ATOMWALL_KERNEL_HPP

#include <functional>
#include <memory>
#include <vector>

#include "atomwall/spectrum.hpp"
#include "atomwall/units.hpp"

namespace atomwall {

// Half-width (Hartree) of the window where the resonant difference quotient
// is evaluated by quadrature instead of direct subtraction.
inline constexpr double kPoleWidth = 1e-3;

struct KernelParams {
  double beta = 0.0;
  double c = 1.0 / kDefaultAlpha;
  double lambda_ph = 0.0;
  bool drop_resonant = true;
  double e_max = kInf;  // only the finite-temperature branch uses it
  std::shared_ptr<const SpectrumTable> table;

  static KernelParams from_config(const PhysicalConfig& cfg,
                                  std::shared_ptr<const SpectrumTable> table,
                                  bool drop_resonant = true);
  double photon_energy(double k) const { return c * k; }
};

// eps * n_B(eps) = eps / (exp(beta eps) - 1).
double thermal_occupation_energy(double eps, double beta);

double g_factor(double delta_e, double eps_k, double beta, bool drop_resonant);

// Strength-weighted sum of g_factor over every line of the table. The
// cutoff e_max is ignored: only ground-state rows enter.
double b_low_temp(double k, const KernelParams& p);

// Closed-form time integrals for one ordered pair of levels, without 1/Z.
struct PairTerms {
  double i_term;
  double j_term;
};
PairTerms pair_terms(double e_i, double e_j, double eps, double beta);

// Pole-free evaluation of i_term + j_term.
double pair_integral(double e_i, double e_j, double eps, double beta);

double b_general(double k, double beta, double c, const LevelSystem& levels);
// Uses the hydrogen levels below p.e_max; throws CutoffRequired without one.
double b_general(double k, const KernelParams& p);

struct Plateau {
  enum class Kind { Constant, Linear };
  Kind kind;
  double value;  // a_B^2 for Constant, a_B^3 for Linear
};

Plateau b_plateau(Regime regime, const SpectrumTable& table, double kT,
                  double c);

// B(k) = plateau - sum_j weight_j * scale_j / (scale_j + k) + remainder(k).
struct RationalTail {
  double weight;
  double scale;
};

struct KernelSplit {
  double plateau = 0.0;
  std::vector<RationalTail> tails;
  std::function<double(double)> remainder;
  double remainder_support = kInf;  // remainder negligible beyond this k
  std::vector<double> breakpoints;  // k values where the remainder has structure

  double evaluate(double k) const;
};

KernelSplit low_temp_split(const KernelParams& p);

}  // namespace atomwall

#endif
