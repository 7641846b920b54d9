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

#include "atomwall/potential.hpp"

#include <gsl/gsl_sf_expint.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <complex>
#include <exception>
#include <thread>

#include "atomwall/errors.hpp"
#include "atomwall/quadrature.hpp"

namespace atomwall {

namespace {

double norm3(double x, double y, double z) {
  return std::sqrt(x * x + y * y + z * z);
}

// Beyond this argument the tail moment uses its asymptotic series.
constexpr double kTailAsymptotic = 40.0;
constexpr double kCutoffCorrectionLimit = 2e4;

}  // namespace

double image_potential(double x, const Vec3& a) {
  if (!(x + a[0] > 0))
    throw WallContact("electron on or behind the wall plane");
  // R = (x,0,0), R* = (-x,0,0), r = R + a, r* = R* + (-a_x, a_y, a_z).
  double rr = 2.0 * x;
  double ee = norm3(2.0 * (x + a[0]), 0.0, 0.0);
  double pe = norm3(2.0 * x + a[0], -a[1], -a[2]);
  double ep = norm3(2.0 * x + a[0], a[1], a[2]);
  return 0.5 * (1.0 / rr + 1.0 / ee - 1.0 / pe - 1.0 / ep);
}

double image_dipole_asymptote(double x, const Vec3& a) {
  double d = 2.0 * x;
  return (a[0] * a[0] + 0.5 * (a[1] * a[1] + a[2] * a[2])) / (d * d * d);
}

double Cutoff::operator()(double k) const {
  double t = k / k_cut;
  if (t <= 0.5) return 1.0;
  if (t >= 1.0) return 0.0;
  double s = (t - 0.5) / 0.5;
  if (shape == CutoffShape::CosineTaper) return 0.5 * (1.0 + std::cos(kPi * s));
  return 1.0 - s * s * s * (10.0 - 15.0 * s + 6.0 * s * s);
}

Cutoff cutoff_from_config(const PhysicalConfig& cfg, CutoffShape shape) {
  return Cutoff{cfg.k_cut(), shape};
}

double angular_weight(double y) {
  double ay = std::fabs(y);
  if (ay < 1.0) {
    double y2 = y * y, term = 1.0, sum = 0.0;
    for (int n = 0; n < 20; ++n) {
      if (n > 0) term *= -y2 / ((2.0 * n - 1.0) * (2.0 * n));
      sum += 2.0 * term / (2.0 * n + 3.0);
    }
    return sum;
  }
  double s = std::sin(ay), c = std::cos(ay);
  return 2.0 * s / ay + 4.0 * c / (ay * ay) - 4.0 * s / (ay * ay * ay);
}

double rational_tail_moment(double b) {
  if (!(b > 0)) return 0.0;
  if (b > kTailAsymptotic) {
    // -2 pi + sum_m (-1)^m [2 (2m+2)! + 4 (2m+1)! + 4 (2m)!] b^-(2m+1)
    double sum = 0.0, fact2m = 1.0, inv = 1.0 / b, pw = inv, prev = kInf;
    for (int m = 0; m < 40; ++m) {
      if (m > 0) fact2m *= (2.0 * m - 1.0) * (2.0 * m);
      double coef = 2.0 * fact2m * (2.0 * m + 1.0) * (2.0 * m + 2.0) +
                    4.0 * fact2m * (2.0 * m + 1.0) + 4.0 * fact2m;
      double term = coef * pw;
      if (term > prev) break;
      sum += (m % 2 ? -term : term);
      if (term < 1e-18 * std::fabs(sum)) break;
      prev = term;
      pw *= inv * inv;
    }
    return -2.0 * kPi + sum;
  }
  double si = gsl_sf_Si(b) - 0.5 * kPi, ci = gsl_sf_Ci(b);
  double s = std::sin(b), c = std::cos(b);
  double f = ci * s - si * c;
  double g = -ci * c - si * s;
  return 2.0 * b - 2.0 * b * b * f + 4.0 * b * g - 2.0 * kPi + 4.0 * f;
}

double plateau_cutoff_correction(double x, const Cutoff& cutoff, double* err) {
  // (1/pi) int_{k_c/2}^inf k^2 (g(k) - 1) w(2kx) dk for a unit plateau. The
  // window is integrated with its phase measured from k_c, where the
  // boundary term cancels the closed-form tail (2Y + 6i) e^{iY} / (8 pi x^3).
  // Beyond 2 k_c x = kCutoffCorrectionLimit rounding in the window swamps the
  // correction, which is below 2 / (k_c x) there; it is then dropped.
  double kc = cutoff.k_cut;
  double y_top = 2.0 * kc * x;
  double x3 = x * x * x;
  if (err) *err = 0.0;
  if (y_top > kCutoffCorrectionLimit) return 0.0;
  auto amp = [&](double kappa) -> std::complex<double> {
    double k = kc + kappa;
    double y = 2.0 * k * x;
    std::complex<double> a(4.0 / (y * y), -2.0 / y + 4.0 / (y * y * y));
    return k * k * (cutoff(k) - 1.0) / kPi * a;
  };
  std::vector<double> edges;
  const int n = 64;
  for (int i = 0; i <= n; ++i) edges.push_back(-0.5 * kc + 0.5 * kc * i / n);
  edges.back() = 0.0;
  double big = (2.0 * y_top + 6.0) / (8.0 * kPi * x3);
  auto win = filon_integrate(amp, 2.0 * x, edges, 1e-15 * big, 4000);
  std::complex<double> tail(2.0 * y_top / (8.0 * kPi * x3), 6.0 / (8.0 * kPi * x3));
  std::complex<double> phase = std::polar(1.0, y_top);
  double si_tail = 0.5 * kPi - gsl_sf_Si(y_top);
  if (err) *err = win.abs_err;
  return (phase * (win.value - tail)).real() + 4.0 * si_tail / (8.0 * kPi * x3);
}

FourierResult fourier_invert(const KernelSplit& split, double x,
                             const Cutoff& cutoff, const FourierOptions& opt) {
  if (!(x > 0)) throw DomainError("fourier_invert requires x > 0");
  FourierResult r;
  double x3 = x * x * x;
  double analytic = -split.plateau / (4.0 * x3);
  double scale = std::fabs(analytic);
  double cut_err = 0.0;
  for (const auto& t : split.tails) {
    double v = -t.weight * rational_tail_moment(2.0 * x * t.scale) /
               (8.0 * kPi * x3);
    analytic += v;
    scale += std::fabs(v);
  }
  r.analytic_part = analytic;

  double k_hi = std::min(split.remainder_support, cutoff.k_cut);
  if (!split.remainder || !(k_hi > 0)) {
    r.value = analytic;
    r.abs_err = cut_err;
    r.rel_err = cut_err / std::max(std::fabs(analytic), 1e-300);
    return r;
  }
  const auto& rem = split.remainder;
  double k_switch = std::min(1.0 / x, k_hi);

  std::vector<double> marks{k_switch, k_hi};
  for (double b : split.breakpoints)
    if (b > 0 && b < k_hi) marks.push_back(b);
  if (0.5 * cutoff.k_cut < k_hi) marks.push_back(0.5 * cutoff.k_cut);
  double k_lo = *std::min_element(marks.begin(), marks.end()) * 1e-4;
  int per_decade = 6;
  int nlog = int(std::ceil(std::log10(k_hi / k_lo) * per_decade));
  for (int i = 0; i <= nlog; ++i)
    marks.push_back(k_lo * std::pow(k_hi / k_lo, double(i) / nlog));
  marks.push_back(0.0);
  std::sort(marks.begin(), marks.end());
  marks.erase(std::unique(marks.begin(), marks.end()), marks.end());

  std::vector<double> low, high;
  for (double m : marks) {
    if (m <= k_switch) low.push_back(m);
    if (m >= k_switch) high.push_back(m);
  }

  auto direct = [&](double k) -> std::complex<double> {
    if (k <= 0) return 0.0;
    return k * k * rem(k) * cutoff(k) * angular_weight(2.0 * k * x) / kPi;
  };
  auto oscill = [&](double k) -> std::complex<double> {
    double y = 2.0 * k * x;
    std::complex<double> a(4.0 / (y * y), -2.0 / y + 4.0 / (y * y * y));
    return k * k * rem(k) * cutoff(k) / kPi * a;
  };

  // Coarse pass to size the absolute tolerance.
  auto c1 = filon_integrate(direct, 0.0, low, kInf);
  auto c2 = filon_integrate(oscill, 2.0 * x, high, kInf);
  double coarse = std::fabs(c1.value.real()) + std::fabs(c2.value.real());
  scale = std::max(scale, coarse);
  if (scale == 0.0) scale = 1e-300;
  double tol = opt.rel_tol * scale;

  auto p1 = filon_integrate(direct, 0.0, low, 0.5 * tol, opt.max_panels);
  auto p2 = filon_integrate(oscill, 2.0 * x, high, 0.5 * tol, opt.max_panels);
  r.numeric_part = p1.value.real() + p2.value.real();
  r.abs_err = p1.abs_err + p2.abs_err + cut_err;
  r.panels = p1.panels + p2.panels;
  r.value = analytic + r.numeric_part;
  double denom = std::max(std::fabs(r.value), 1e-300);
  r.rel_err = r.abs_err / denom;
  if (r.abs_err > opt.fail_tol * std::max(std::fabs(r.value), scale * 1e-3))
    throw QuadratureFailure(
        x, [&] {
          char buf[160];
          std::snprintf(buf, sizeof buf,
                        "oscillatory quadrature did not converge at x = %.6g "
                        "(error estimate %.3g, value %.3g)",
                        x, r.abs_err, r.value);
          return std::string(buf);
        }());
  return r;
}

FourierResult fourier_invert(const std::function<double(double)>& b, double x,
                             const Cutoff& cutoff,
                             std::optional<double> plateau,
                             const FourierOptions& opt) {
  KernelSplit s;
  s.plateau = plateau ? *plateau : b(cutoff.k_cut);
  double c = s.plateau;
  s.remainder = [b, c](double k) { return b(k) - c; };
  s.remainder_support = cutoff.k_cut;
  return fourier_invert(s, x, cutoff, opt);
}

double phi_vdw(double x, const SpectrumTable& table) {
  return -table.moment_x2 / (4.0 * x * x * x);
}

double phi_cp(double x, const SpectrumTable& table, double c) {
  double alpha_e = static_polarizability(table);
  return -3.0 * c * alpha_e / (8.0 * kPi * x * x * x * x);
}

double phi_class(double x, const SpectrumTable& table, double kT) {
  return -kT * static_polarizability(table) / (4.0 * x * x * x);
}

double phi_asymptote(double x, Regime regime, const SpectrumTable& table,
                     double kT, double c) {
  switch (regime) {
    case Regime::VdW: return phi_vdw(x, table);
    case Regime::CasimirPolder: return phi_cp(x, table, c);
    case Regime::ClassicalLifshitz: return phi_class(x, table, kT);
    case Regime::ScreenedVdW: return phi_vdw(x, table) - phi_class(x, table, kT);
    case Regime::ScreenedCP: return phi_cp(x, table, c) - phi_class(x, table, kT);
    case Regime::ScreenedCancelled: return 0.0;
    case Regime::NearField: break;
  }
  throw ParameterError("phi_asymptote: no asymptote in the near field");
}

CancellationReport dipolar_cancellation_check(double moment) {
  CancellationReport r;
  r.image_coefficient = 4.0 * kPi * moment;
  r.radiation_coefficient = -4.0 * kPi * moment;
  r.sum = r.image_coefficient + r.radiation_coefficient;
  r.relative = r.image_coefficient != 0.0
                   ? std::fabs(r.sum) / std::fabs(r.image_coefficient)
                   : std::fabs(r.sum);
  r.passed = r.relative <= 1e-12;
  return r;
}

CancellationReport dipolar_cancellation_check(const SpectrumTable& table) {
  return dipolar_cancellation_check(table.moment_x2);
}

PathMoments atom_path_moments(const SpectrumTable& table, double beta) {
  PathMoments m{0.0, 0.0};
  for (const auto& l : table.lines) {
    m.equal_time += l.strength;
    double bd = beta * l.delta_e;
    m.double_time += 2.0 * l.strength * (-std::expm1(-bd)) / (beta * l.delta_e);
  }
  return m;
}

ScreenedParts screened_coulomb(double k, double kappa,
                               const PathMoments& moments) {
  if (!(k > 0) || !(kappa > 0))
    throw DomainError("screened_coulomb requires k > 0 and kappa > 0");
  ScreenedParts p;
  p.exp_part = 4.0 * kPi / (k * k + kappa * kappa);
  p.alg_part = 4.0 * kPi * (moments.equal_time - moments.double_time);
  return p;
}

std::string_view method_name(Method m) {
  switch (m) {
    case Method::Quadrature: return "quadrature";
    case Method::Asymptote: return "asymptote";
    case Method::Screened: return "screened";
  }
  return "?";
}

PotentialEngine::PotentialEngine(const PhysicalConfig& cfg,
                                 std::shared_ptr<const SpectrumTable> table,
                                 CutoffShape shape, FourierOptions opt)
    : cfg_(cfg), table_(std::move(table)), opt_(opt) {
  cfg_.validate();
  if (!table_ || table_->lines.empty())
    throw ParameterError("potential engine needs a non-empty spectrum");
  scales_ = derive_scales(cfg_);
  params_ = KernelParams::from_config(cfg_, table_, true);
  split_ = low_temp_split(params_);
  cutoff_ = cutoff_from_config(cfg_, shape);
}

FourierResult PotentialEngine::unscreened(double x) const {
  return fourier_invert(split_, x, cutoff_, opt_);
}

PhiResult PotentialEngine::phi_total(double x) const {
  if (!(x > kNearFieldLimit))
    throw DomainError("phi_total requires x > 10 a_B");
  PhiResult r;
  r.x = x;
  r.regime = classify_regime(x, scales_, cfg_.lambda_screen);
  auto f = unscreened(x);
  r.phi_unscreened = f.value;
  r.rel_err = f.rel_err;
  r.phi = f.value;
  r.method = Method::Quadrature;
  if (cfg_.screened()) {
    double ls = cfg_.lambda_screen;
    double screened = f.value - phi_class(x, *table_, cfg_.kT());
    if (x >= ls) {
      r.phi = screened;
      r.method = Method::Screened;
      if (x < 3.0 * ls) {
        r.phi_alternate = f.value;
        r.alternate_method = Method::Quadrature;
      }
    } else if (x > ls / 3.0) {
      r.phi_alternate = screened;
      r.alternate_method = Method::Screened;
    }
  }
  return r;
}

PhiResult phi_total(double x, const PhysicalConfig& cfg,
                    std::shared_ptr<const SpectrumTable> table) {
  return PotentialEngine(cfg, std::move(table)).phi_total(x);
}

std::vector<double> log_grid(double x_min, double x_max, int n) {
  if (!(x_min > 0) || !(x_max > x_min) || n < 2)
    throw ParameterError("log_grid requires 0 < x_min < x_max and n >= 2");
  std::vector<double> xs(n);
  double lr = std::log(x_max / x_min);
  for (int i = 0; i < n; ++i) xs[i] = x_min * std::exp(lr * i / (n - 1));
  xs.back() = x_max;
  return xs;
}

PotentialCurve compute_curve(const PotentialEngine& engine,
                             const std::vector<double>& xs, int threads) {
  for (std::size_t i = 1; i < xs.size(); ++i)
    if (!(xs[i] > xs[i - 1]))
      throw ParameterError("curve abscissae must be strictly increasing");
  PotentialCurve c;
  c.config = engine.config();
  c.n_max = engine.table().n_max;
  c.continuum_bins = engine.table().continuum_bins;
  std::size_t n = xs.size();
  std::vector<PhiResult> res(n);
  std::vector<std::exception_ptr> errs(n);
  unsigned nt = threads > 0 ? unsigned(threads)
                            : std::max(1u, std::thread::hardware_concurrency());
  nt = std::min<unsigned>(nt, std::max<std::size_t>(n, 1));
  auto work = [&](unsigned t) {
    for (std::size_t i = t; i < n; i += nt) {
      try {
        res[i] = engine.phi_total(xs[i]);
      } catch (...) {
        errs[i] = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < nt; ++t) pool.emplace_back(work, t);
  work(0);
  for (auto& th : pool) th.join();
  for (std::size_t i = 0; i < n; ++i)
    if (errs[i]) std::rethrow_exception(errs[i]);
  for (const auto& r : res)
    c.points.push_back({r.x, r.phi, r.regime, r.method, r.rel_err,
                        r.phi_alternate, r.alternate_method});
  return c;
}

}  // namespace atomwall
