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

#ifndef ATOMWALL_VERIFIER_HPP
#define ATOMWALL_VERIFIER_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace atomwall {

// Closed Wiener paths on the grid s_i = i / n_steps, three components each.
struct BridgeEnsemble {
  int n_paths = 0;
  int n_steps = 0;
  std::uint64_t seed = 0;
  std::vector<double> paths;  // [path][step][component]

  double at(int path, int step, int comp) const {
    return paths[(std::size_t(path) * (n_steps + 1) + step) * 3 + comp];
  }
};

BridgeEnsemble sample_bridges(int n_paths, int n_steps, std::uint64_t seed,
                              int threads = 0);

struct MomentEstimate {
  double mean;
  double std_err;
};

// Empirical <xi^c(s_i) xi^c(s_j)> with its standard error.
MomentEstimate bridge_covariance(const BridgeEnsemble& e, int i, int j,
                                 int comp = 0);
MomentEstimate bridge_mean(const BridgeEnsemble& e, int i, int comp = 0);

struct ModeSpec {
  double eps;
  double coupling = 0.0;
  double f_const = 1.0;
};

struct GaussianIdentityReport {
  double lhs;      // MC average of cos(int a R ds)
  double std_err;
  double rhs;      // exp(-1/2 a.C.a) on the same grid
  double deviation;
  int n_grid;
  bool passed;     // |lhs - rhs| <= 3 std_err
};

using TestFunction = std::function<double(double)>;
using CovarianceFn = std::function<double(double, double)>;

// Throws CovarianceNotPSD.
GaussianIdentityReport gaussian_identity_check(const TestFunction& a,
                                               const CovarianceFn& cov,
                                               int n_paths, std::uint64_t seed,
                                               int n_grid = 64,
                                               int threads = 0);

// Draws the oscillator process at n_grid midpoints and re-estimates
// <R(s_0) R(s_j)>; returns the worst deviation in units of standard error.
struct ProcessCovarianceReport {
  double max_sigma;
  double max_abs;
  bool passed;
};
ProcessCovarianceReport oscillator_process_check(double beta_eps, int n_paths,
                                                 std::uint64_t seed,
                                                 int n_grid = 16,
                                                 int threads = 0);

struct CoupledOscillatorReport {
  double exact;     // normal-mode result
  double path;      // discretized Gaussian path integral
  double deviation;  // |path/exact - 1|
  double free_trap;  // 1 / (2 sinh(beta omega / 2))
  int n_steps;
};

// Tr e^{-beta H} / Z_mode for H = (p - A)^2/2 + omega^2 q^2/2 + mode,
// A = g f sqrt(2 eps) X_mode.
double coupled_oscillator_exact(const ModeSpec& mode, double omega_trap,
                                double beta);
double coupled_oscillator_path(const ModeSpec& mode, double omega_trap,
                               double beta, int n_steps);
CoupledOscillatorReport coupled_oscillator_check(const ModeSpec& mode,
                                                 double omega_trap,
                                                 double beta, int n_steps);

struct ConvergenceReport {
  std::vector<int> n_steps;
  std::vector<double> deviations;
  std::vector<double> slopes;  // log2 of successive deviation ratios
  double order;                // slope on the finest pair
  double extrapolated;         // Richardson value from the two finest grids
};
// Throws DiscretizationError unless the deviations fall with order in
// [1.5, 2.5] on every refinement.
ConvergenceReport coupled_oscillator_convergence(
    const ModeSpec& mode, double omega_trap, double beta,
    const std::vector<int>& n_steps = {64, 128, 256, 512});

struct CorrelationPoint {
  double lag;
  double mc;
  double std_err;
  double exact;     // continuum operator formula
  double discrete;  // exact value for the sampled chain
};
struct CorrelationReport {
  std::vector<CorrelationPoint> points;
  double max_deviation;  // max |mc - exact|
  double max_sigma;      // max |mc - exact| / (std_err + |discrete - exact|)
  double stationarity_sigma;
  bool passed;
};

// Exact <x(0) x(tau beta)> for a thermal oscillator with m = hbar = 1.
double harmonic_correlation(double omega, double beta, double tau);

CorrelationReport correlation_check_harmonic(double omega_trap, double beta,
                                             int n_paths, std::uint64_t seed,
                                             int n_slices = 64,
                                             int threads = 0);

// Harmonic surrogate for the atomic weight on a_x.
struct AtomWeight {
  double omega = 0.5;
  double beta = 6.0;
};

// Fraction of weight whose path stays on the field side, x + a_x(s) > 0.
double geometric_constraint_estimate(double x, const BridgeEnsemble& ensemble,
                                     const AtomWeight& weight);
// 1 - geometric_constraint_estimate, without cancellation at large x.
double geometric_constraint_deficit(double x, const BridgeEnsemble& ensemble,
                                    const AtomWeight& weight);

// <a_x^2> in the hydrogen 1s state by direct sampling of |psi|^2.
MomentEstimate ground_state_moment_mc(int n_samples, std::uint64_t seed);

}  // namespace atomwall

#endif
