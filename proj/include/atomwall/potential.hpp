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

#ifndef ATOMWALL_POTENTIAL_HPP
#define ATOMWALL_POTENTIAL_HPP

#include <array>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "atomwall/kernel.hpp"
#include "atomwall/spectrum.hpp"
#include "atomwall/units.hpp"

namespace atomwall {

using Vec3 = std::array<double, 3>;

// Image-charge combination for a proton at (x,0,0) and electron at R + a.
// Returned without the -e^2 prefactor.
double image_potential(double x, const Vec3& a);
// Large-x dipolar form (a_x^2 + (a_y^2 + a_z^2)/2) / (2x)^3.
double image_dipole_asymptote(double x, const Vec3& a);

enum class CutoffShape { CosineTaper, SmoothStep };

// Mode cutoff g(k): 1 below k_cut/2, 0 above k_cut.
struct Cutoff {
  double k_cut;
  CutoffShape shape = CutoffShape::CosineTaper;
  double operator()(double k) const;
};

Cutoff cutoff_from_config(const PhysicalConfig& cfg,
                          CutoffShape shape = CutoffShape::CosineTaper);

// int_{-1}^{1} mu^2 cos(y mu) dmu.
double angular_weight(double y);
// Abel-regularized int_0^inf y^2 b/(b+y) angular_weight(y) dy.
double rational_tail_moment(double b);

// Change in the transform of a unit plateau caused by the cutoff taper.
// fourier_invert uses the untapered closed form -1/(4x^3); this measures
// what the taper would add.
double plateau_cutoff_correction(double x, const Cutoff& cutoff,
                                 double* err = nullptr);

struct FourierOptions {
  double rel_tol = 1e-10;
  double fail_tol = 1e-6;
  int max_panels = 20000;
};

struct FourierResult {
  double value = 0.0;
  double analytic_part = 0.0;
  double numeric_part = 0.0;
  double abs_err = 0.0;
  double rel_err = 0.0;
  int panels = 0;
};

// 4 pi int d^3k/(2 pi)^3 exp(-2 i k_x x) (k_x^2/k^2) B(k) g(k). Plateau and
// rational tails are transformed in closed form; the remainder is
// integrated numerically. Throws QuadratureFailure.
FourierResult fourier_invert(const KernelSplit& split, double x,
                             const Cutoff& cutoff,
                             const FourierOptions& opt = {});
// Generic kernel; the plateau is taken as b(k_cut) unless given.
FourierResult fourier_invert(const std::function<double(double)>& b, double x,
                             const Cutoff& cutoff,
                             std::optional<double> plateau = std::nullopt,
                             const FourierOptions& opt = {});

double phi_vdw(double x, const SpectrumTable& table);
double phi_cp(double x, const SpectrumTable& table, double c);
double phi_class(double x, const SpectrumTable& table, double kT);
double phi_asymptote(double x, Regime regime, const SpectrumTable& table,
                     double kT, double c);

struct CancellationReport {
  double image_coefficient;
  double radiation_coefficient;
  double sum;
  double relative;
  bool passed;
};
CancellationReport dipolar_cancellation_check(const SpectrumTable& table);
CancellationReport dipolar_cancellation_check(double moment);

// Equal-time and double-time imaginary-time moments of the atomic path.
struct PathMoments {
  double equal_time;   // int ds <a_x(s)^2>
  double double_time;  // int ds int dt <a_x(s) a_x(t)>
};
PathMoments atom_path_moments(const SpectrumTable& table, double beta);

struct ScreenedParts {
  double exp_part;
  double alg_part;
};
// Fourier-space screened Coulomb pieces for unit charges, k along x.
ScreenedParts screened_coulomb(double k, double kappa,
                               const PathMoments& moments);

enum class Method { Quadrature, Asymptote, Screened };
std::string_view method_name(Method m);

struct PhiResult {
  double x = 0.0;
  double phi = 0.0;
  Regime regime = Regime::NearField;
  Method method = Method::Quadrature;
  double rel_err = 0.0;
  double phi_unscreened = 0.0;
  // Set within a factor 3 of lambda_screen: the value of the other branch.
  std::optional<double> phi_alternate;
  Method alternate_method = Method::Quadrature;
};

class PotentialEngine {
 public:
  PotentialEngine(const PhysicalConfig& cfg,
                  std::shared_ptr<const SpectrumTable> table,
                  CutoffShape shape = CutoffShape::CosineTaper,
                  FourierOptions opt = {});

  // Throws DomainError for x <= 10 a_B and QuadratureFailure.
  PhiResult phi_total(double x) const;
  FourierResult unscreened(double x) const;

  const PhysicalConfig& config() const { return cfg_; }
  const LengthScales& scales() const { return scales_; }
  const SpectrumTable& table() const { return *table_; }
  const KernelParams& kernel() const { return params_; }
  const KernelSplit& split() const { return split_; }

 private:
  PhysicalConfig cfg_;
  LengthScales scales_;
  std::shared_ptr<const SpectrumTable> table_;
  KernelParams params_;
  KernelSplit split_;
  Cutoff cutoff_;
  FourierOptions opt_;
};

PhiResult phi_total(double x, const PhysicalConfig& cfg,
                    std::shared_ptr<const SpectrumTable> table);

struct CurvePoint {
  double x;
  double phi;
  Regime regime;
  Method method;
  double rel_err;
  std::optional<double> phi_alternate;
  Method alternate_method = Method::Quadrature;
};

struct PotentialCurve {
  std::vector<CurvePoint> points;
  PhysicalConfig config;
  int n_max = 0;
  int continuum_bins = 0;
};

std::vector<double> log_grid(double x_min, double x_max, int n);
// Evaluates points in parallel; output order follows xs.
PotentialCurve compute_curve(const PotentialEngine& engine,
                             const std::vector<double>& xs, int threads = 0);

struct RegimeRow {
  std::string range;
  std::string formula;
  std::string law;
  std::string coefficient;
};

struct RegimeTable {
  ScreenOrdering ordering;
  bool boundary;  // lambda_screen within a factor 10 of lambda_at or lambda_ph
  double lambda_at;
  double lambda_ph;
  double lambda_screen;
  std::vector<RegimeRow> rows;
};

RegimeTable regime_table(const PhysicalConfig& cfg, const SpectrumTable& table);
std::string format_regime_table(const RegimeTable& t);

}  // namespace atomwall

#endif
