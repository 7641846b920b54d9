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

#include "atomwall/kernel.hpp"

#include <algorithm>
#include <cmath>

#include "atomwall/errors.hpp"

namespace atomwall {

namespace {

// 4-point Gauss-Legendre on [0, 1].
constexpr double kGl4x[4] = {0.0694318442029737, 0.3300094782075719,
                             0.6699905217924281, 0.9305681557970263};
constexpr double kGl4w[4] = {0.1739274225687269, 0.3260725774312731,
                             0.3260725774312731, 0.1739274225687269};

// d/d eps of eps * n_B(eps).
double thermal_occupation_slope(double eps, double beta) {
  double be = beta * eps;
  if (be > 700.0) return 0.0;
  if (std::fabs(be) < 1e-8) return -0.5 + be / 6.0;
  double em1 = std::expm1(be);
  return 1.0 / em1 - be * (em1 + 1.0) / (em1 * em1);
}

// (N(eps) - N(delta)) / (delta - eps) with N = eps * n_B.
double resonant_difference(double delta, double eps, double beta) {
  double d = eps - delta;
  if (std::fabs(d) >= kPoleWidth)
    return (thermal_occupation_energy(eps, beta) -
            thermal_occupation_energy(delta, beta)) /
           (delta - eps);
  double acc = 0.0;
  for (int i = 0; i < 4; ++i)
    acc += kGl4w[i] * thermal_occupation_slope(delta + kGl4x[i] * d, beta);
  return -acc;
}

// (a - 1 + exp(-a)) / a^2 scaled by w0 = exp(-x0), written as
// [w0 (a - 1) + w1] / a^2 with w1 = w0 * exp(-a) supplied by the caller.
double weighted_h(double a, double w0, double w1) {
  if (std::fabs(a) < 0.1) {
    // h(a) = sum_n (-a)^n / (n + 2)!
    double term = 0.5, sum = 0.5;
    for (int n = 1; n < 16; ++n) {
      term *= -a / (n + 2);
      sum += term;
    }
    return w0 * sum;
  }
  return (w0 * (a - 1.0) + w1) / (a * a);
}

double photon_prefactor(double eps, double beta) {
  // eps / (1 - exp(-beta eps))
  double be = beta * eps;
  if (be < 1e-12) return 1.0 / beta + 0.5 * eps;
  return eps / (-std::expm1(-be));
}

}  // namespace

KernelParams KernelParams::from_config(
    const PhysicalConfig& cfg, std::shared_ptr<const SpectrumTable> table,
    bool drop_resonant) {
  cfg.validate();
  KernelParams p;
  p.beta = cfg.beta();
  p.c = cfg.speed_of_light();
  p.lambda_ph = p.beta * p.c;
  p.drop_resonant = drop_resonant;
  p.e_max = cfg.e_max;
  p.table = std::move(table);
  return p;
}

double thermal_occupation_energy(double eps, double beta) {
  double be = beta * eps;
  if (be > 700.0) return 0.0;
  if (std::fabs(be) < 1e-12) return 1.0 / beta - 0.5 * eps;
  return eps / std::expm1(be);
}

double g_factor(double delta_e, double eps_k, double beta, bool drop_resonant) {
  if (!(delta_e > 0) || !(eps_k > 0) || !(beta > 0))
    throw DomainError("g_factor requires positive delta_e, eps_k, beta");
  double off = photon_prefactor(eps_k, beta) / (delta_e + eps_k);
  double res;
  if (drop_resonant) {
    res = resonant_difference(delta_e, eps_k, beta);
  } else {
    if (delta_e == eps_k)
      throw PoleError("g_factor: photon energy equals the transition energy");
    res = thermal_occupation_energy(eps_k, beta) / (delta_e - eps_k);
  }
  return off + res;
}

double b_low_temp(double k, const KernelParams& p) {
  if (!(k > 0)) throw DomainError("b_low_temp requires k > 0");
  if (!p.table) throw ParameterError("b_low_temp: kernel has no spectrum");
  double eps = p.photon_energy(k);
  double acc = 0.0;
  for (const auto& l : p.table->lines)
    acc += l.strength * g_factor(l.delta_e, eps, p.beta, p.drop_resonant);
  return acc;
}

PairTerms pair_terms(double e_i, double e_j, double eps, double beta) {
  double w = e_j - e_i;
  double plus = w + eps, minus = w - eps;
  if (plus == 0.0 || minus == 0.0)
    throw PoleError("pair_terms: resonant pair");
  double ei = std::exp(-beta * e_i);
  double ej = std::exp(-beta * e_j);
  double eie = std::exp(-beta * (e_i + eps));
  double eje = std::exp(-beta * (e_j + eps));
  PairTerms t;
  t.i_term = ei / plus + eie / minus;
  t.j_term = ((eje - ei) / (plus * plus) - (eie - ej) / (minus * minus)) / beta;
  return t;
}

double pair_integral(double e_i, double e_j, double eps, double beta) {
  double w = e_j - e_i;
  double a = beta * (w + eps);
  double b = beta * (w - eps);
  double t1 = weighted_h(a, std::exp(-beta * e_i), std::exp(-beta * (e_j + eps)));
  double t2 = weighted_h(b, std::exp(-beta * (e_i + eps)), std::exp(-beta * e_j));
  return beta * (t1 + t2);
}

double b_general(double k, double beta, double c, const LevelSystem& levels) {
  if (!(k > 0)) throw DomainError("b_general requires k > 0");
  if (levels.size() == 0) throw ParameterError("b_general: empty level set");
  double eps = c * k;
  double e_ref = *std::min_element(levels.energy.begin(), levels.energy.end());
  double z = 0.0;
  for (std::size_t i = 0; i < levels.size(); ++i)
    z += levels.degeneracy[i] * std::exp(-beta * (levels.energy[i] - e_ref));
  double acc = 0.0;
  for (std::size_t i = 0; i < levels.size(); ++i)
    for (std::size_t j = 0; j < levels.size(); ++j) {
      double w = levels.pair_strength[i][j];
      if (w == 0.0) continue;
      acc += w * pair_integral(levels.energy[i] - e_ref,
                               levels.energy[j] - e_ref, eps, beta);
    }
  return photon_prefactor(eps, beta) * acc / z;
}

double b_general(double k, const KernelParams& p) {
  if (!(p.e_max < kInf))
    throw CutoffRequired("b_general needs a finite e_max for the level sum");
  return b_general(k, p.beta, p.c, hydrogen_levels_below(p.e_max));
}

Plateau b_plateau(Regime regime, const SpectrumTable& table, double kT,
                  double c) {
  switch (regime) {
    case Regime::VdW:
      return {Plateau::Kind::Constant, table.moment_x2};
    case Regime::CasimirPolder:
      return {Plateau::Kind::Linear, c * table.inverse_moment()};
    case Regime::ClassicalLifshitz:
      return {Plateau::Kind::Constant, 2.0 * kT * table.inverse_moment()};
    default:
      throw ParameterError("b_plateau: regime has no closed-form kernel");
  }
}

double KernelSplit::evaluate(double k) const {
  double v = plateau;
  for (const auto& t : tails) v -= t.weight * t.scale / (t.scale + k);
  if (remainder && k < remainder_support) v += remainder(k);
  return v;
}

KernelSplit low_temp_split(const KernelParams& p) {
  if (!p.table) throw ParameterError("low_temp_split: kernel has no spectrum");
  const auto table = p.table;
  KernelSplit s;
  double resonant_scale = 0.0;
  for (const auto& l : table->lines) {
    s.plateau += l.strength;
    s.tails.push_back({l.strength, l.delta_e / p.c});
    resonant_scale = std::max(
        resonant_scale,
        l.strength * thermal_occupation_energy(l.delta_e, p.beta) / l.delta_e);
  }
  if (!p.drop_resonant && resonant_scale > 1e-14 * s.plateau)
    throw ParameterError(
        "oscillatory inversion requires drop_resonant when resonant "
        "residues are not negligible");
  double beta = p.beta, c = p.c;
  s.remainder = [table, beta, c](double k) {
    double eps = c * k;
    double n = thermal_occupation_energy(eps, beta);
    double acc = 0.0;
    for (const auto& l : table->lines)
      acc += l.strength *
             (n / (l.delta_e + eps) + resonant_difference(l.delta_e, eps, beta));
    return acc;
  };
  double thermal_k = 60.0 / p.lambda_ph;
  if (resonant_scale <= 1e-17 * s.plateau) {
    s.remainder_support = thermal_k;
  } else {
    s.remainder_support = kInf;
    for (const auto& l : table->lines) s.breakpoints.push_back(l.delta_e / c);
  }
  s.breakpoints.push_back(1.0 / p.lambda_ph);
  s.breakpoints.push_back(thermal_k);
  std::sort(s.breakpoints.begin(), s.breakpoints.end());
  return s;
}

}  // namespace atomwall
