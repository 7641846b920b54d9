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

#include "atomwall/verification.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <memory>

#include "atomwall/errors.hpp"
#include "atomwall/kernel.hpp"
#include "atomwall/potential.hpp"
#include "atomwall/propagator.hpp"
#include "atomwall/quadrature.hpp"
#include "atomwall/rng.hpp"
#include "atomwall/spectrum.hpp"
#include "atomwall/verifier.hpp"

namespace atomwall {

namespace {

class Recorder {
 public:
  explicit Recorder(std::vector<CheckRecord>& out) : out_(out) {}
  void group(std::string g) { group_ = std::move(g); }

  void abs(std::string name, double expected, double observed, double tol,
           double sigma = 0.0) {
    bool ok = std::fabs(observed - expected) <= tol;
    out_.push_back({group_, std::move(name), expected, observed, tol, sigma, ok});
  }
  void rel(std::string name, double expected, double observed, double rtol) {
    abs(std::move(name), expected, observed, rtol * std::fabs(expected));
  }
  void sigma(std::string name, double expected, double observed, double se,
             double n_sigma = 3.0) {
    abs(std::move(name), expected, observed, n_sigma * se, se);
  }
  void flag(std::string name, bool ok) {
    abs(std::move(name), 1.0, ok ? 1.0 : 0.0, 0.0);
  }

 private:
  std::vector<CheckRecord>& out_;
  std::string group_;
};

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

// int_0^1 Q(u, s) ds on panels graded toward both ends.
double q_normalization(double u) {
  std::vector<double> edges = {0.0};
  for (int k = 14; k >= 1; --k) edges.push_back(0.5 * std::pow(10.0, -k));
  edges.push_back(0.5);
  std::size_t half = edges.size();
  for (std::size_t i = half - 1; i-- > 0;) edges.push_back(1.0 - edges[i]);
  const auto& g = gauss_legendre(30);
  double total = 0.0;
  for (std::size_t p = 0; p + 1 < edges.size(); ++p) {
    double a = edges[p], b = edges[p + 1], m = 0.5 * (a + b), h = 0.5 * (b - a);
    for (std::size_t i = 0; i < g.nodes.size(); ++i)
      total += h * g.weights[i] * q_propagator(u, m + h * g.nodes[i]);
  }
  return total;
}

void propagator_checks(Recorder& r) {
  r.group("propagator");
  for (double u : {0.0, 0.01, 1.0, 100.0, 1e4})
    r.abs("normalization u=" + fmt("%g", u), 1.0, q_normalization(u), 1e-10);
  double worst = 0.0;
  for (double u : {0.01, 1.0, 100.0, 1e4})
    for (double s : {0.0, 0.1, 0.25, 0.4})
      worst = std::max(worst, std::fabs(q_propagator(u, s) - q_propagator(u, 1.0 - s)));
  r.abs("reflection symmetry", 0.0, worst, 1e-12);
  for (double u : {0.01, 1.0, 100.0})
    for (double s : {0.2, 0.35}) {
      double h = std::min(1e-2, 1e-3 / u);
      double d2 = (q_propagator(u, s + h) - 2.0 * q_propagator(u, s) +
                   q_propagator(u, s - h)) / (h * h);
      double q = q_propagator(u, s);
      r.rel("second derivative u=" + fmt("%g", u) + " s=" + fmt("%g", s),
            u * u * q, d2, 1e-6);
    }
  r.abs("zero momentum limit", 1.0, q_propagator(0.0, 0.3), 1e-15);
}

void spectrum_checks(Recorder& r) {
  r.group("spectrum");
  auto full = build_spectrum(kDefaultNMax, kDefaultContinuumBins);
  r.rel("static polarizability", 4.5, static_polarizability(full), 5e-3);
  auto bound = build_spectrum(20, 0);
  r.rel("bound-only polarizability n<=20", 3.66, static_polarizability(bound), 1e-2);
  r.rel("single line n=2", 2.96, static_polarizability(build_spectrum(2, 0)), 1e-2);
  r.abs("completeness defect", 1.0, full.strength_sum(), 1e-3);
  r.abs("ground moment", 1.0, ground_moment(), 1e-12);
}

// B(k) = 2 int_0^1 (1 - tau) <a(tau) a(0)> Q(u, tau) dtau for a two-level atom.
double two_level_direct(double k, double beta, double c, double gap, double s) {
  double z = 1.0 + std::exp(-beta * gap);
  double u = beta * c * k;
  const auto& g = gauss_legendre(40);
  const int panels = 64;
  double total = 0.0;
  for (int p = 0; p < panels; ++p) {
    double a = double(p) / panels, b = double(p + 1) / panels;
    double m = 0.5 * (a + b), h = 0.5 * (b - a);
    for (std::size_t i = 0; i < g.nodes.size(); ++i) {
      double t = m + h * g.nodes[i];
      double corr = s * (std::exp(-t * beta * gap) +
                         std::exp(-(1.0 - t) * beta * gap)) / z;
      total += h * g.weights[i] * 2.0 * (1.0 - t) * corr * q_propagator(u, t);
    }
  }
  return total;
}

void kernel_checks(Recorder& r, const PhysicalConfig& cfg) {
  r.group("kernel");
  const double gap = kFirstGap, strength = 0.5;
  auto two = two_level_system(gap, strength);
  double c = cfg.speed_of_light();
  double beta = 4.0 / gap;
  for (double kk : {0.01, 0.3, 1.0, 3.0, 10.0}) {
    double k = kk * gap / c;
    double direct = two_level_direct(k, beta, c, gap, strength);
    r.rel("two-level kernel vs direct k=" + fmt("%g", kk) + " gap/c",
          direct, b_general(k, beta, c, two), 1e-8);
  }
  double worst = 0.0;
  for (double eps : {0.1, 0.7, 2.0}) {
    auto ij = pair_terms(0.0, gap, eps, beta);
    auto ji = pair_terms(gap, 0.0, eps, beta);
    worst = std::max(worst, std::fabs(ij.j_term + ji.j_term) /
                                std::max(std::fabs(ij.j_term), 1e-300));
  }
  r.abs("pair term antisymmetry", 0.0, worst, 1e-13);

  auto table = std::make_shared<const SpectrumTable>(two.ground_table());
  for (double bd : {5.0, 10.0, 20.0}) {
    KernelParams p;
    p.beta = bd / gap;
    p.c = c;
    p.table = table;
    double k = gap / c;
    double lt = b_low_temp(k, p);
    double gen = b_general(k, p.beta, c, two);
    r.abs("low temperature limit beta*gap=" + fmt("%g", bd), lt, gen,
          10.0 * std::exp(-bd) * std::fabs(lt));
  }
}

std::shared_ptr<const SpectrumTable> default_table() {
  static const auto t = std::make_shared<const SpectrumTable>(
      build_spectrum(kDefaultNMax, kDefaultContinuumBins));
  return t;
}

void potential_checks(Recorder& r, const PhysicalConfig& base) {
  r.group("potential");
  PhysicalConfig cfg = base;
  cfg.lambda_screen = kInf;
  auto table = default_table();
  PotentialEngine eng(cfg, table);
  const auto& s = eng.scales();
  double c = cfg.speed_of_light();
  struct Point {
    const char* name;
    double x;
    double expect;
  } pts[] = {
      {"van der Waals at 0.08 lambda_at", 0.08 * s.lambda_at,
       phi_vdw(0.08 * s.lambda_at, *table)},
      {"Casimir-Polder at 30 lambda_at", 30.0 * s.lambda_at,
       phi_cp(30.0 * s.lambda_at, *table, c)},
      {"classical at 30 lambda_ph", 30.0 * s.lambda_ph,
       phi_class(30.0 * s.lambda_ph, *table, cfg.kT())},
  };
  for (const auto& p : pts)
    r.rel(p.name, 1.0, eng.phi_total(p.x).phi / p.expect, 0.02);

  Cutoff cut = cutoff_from_config(cfg);
  for (double x : {50.0, 5e3}) {
    double cst = 0.7;
    auto f = fourier_invert([&](double) { return cst; }, x, cut, cst);
    r.rel("constant kernel x=" + fmt("%g", x), -cst / (4.0 * x * x * x), f.value,
          1e-8);
  }
  double taper = 0.0;
  PotentialEngine alt(cfg, table, CutoffShape::SmoothStep);
  Cutoff smooth = cutoff_from_config(cfg, CutoffShape::SmoothStep);
  for (const auto& p : pts) {
    double a = eng.phi_total(p.x).phi, b = alt.phi_total(p.x).phi;
    double plateau = eng.split().plateau;
    double da = plateau * plateau_cutoff_correction(p.x, cut);
    double db = plateau * plateau_cutoff_correction(p.x, smooth);
    taper = std::max(taper, std::fabs((a + da) / (b + db) - 1.0));
  }
  r.abs("cutoff shape insensitivity", 0.0, taper, 1e-3);
  r.abs("image potential a=0", 0.0, image_potential(100.0, {0.0, 0.0, 0.0}), 1e-18);
  r.rel("image dipole asymptote x=100", image_dipole_asymptote(100.0, {1.0, 0.0, 0.0}),
        image_potential(100.0, {1.0, 0.0, 0.0}), 0.03);
}

void screening_checks(Recorder& r, const PhysicalConfig& base) {
  r.group("screening");
  auto table = default_table();
  auto rep = dipolar_cancellation_check(*table);
  r.abs("dipolar cancellation", 0.0, rep.relative, 1e-12);

  PhysicalConfig cfg = base;
  cfg.lambda_screen = kInf;
  auto s = derive_scales(cfg);
  cfg.lambda_screen = 5.0 * s.lambda_ph;
  {
    PotentialEngine eng(cfg, table);
    double x = 30.0 * s.lambda_ph;
    double cls = phi_class(x, *table, cfg.kT());
    r.abs("thermal compensation beyond lambda_ph", 0.0,
          std::fabs(eng.phi_total(x).phi / cls), 0.02);
  }
  PhysicalConfig mid = base;
  mid.tau = 1e-4;
  mid.lambda_screen = 1e4;
  {
    PotentialEngine eng(mid, table);
    double x = 30.0 * mid.lambda_screen;
    double expect = phi_cp(x, *table, mid.speed_of_light()) -
                    phi_class(x, *table, mid.kT());
    r.rel("screened Casimir-Polder minus classical", 1.0,
          eng.phi_total(x).phi / expect, 0.03);
  }
  PathMoments none{0.0, 0.0};
  r.abs("classical charges carry no algebraic part", 0.0,
        screened_coulomb(0.1, 1.0, none).alg_part, 0.0);
  auto m = atom_path_moments(*table, cfg.beta());
  r.abs("strong screening removes exponential part", 0.0,
        screened_coulomb(0.1, 1e8, m).exp_part, 1e-14);
}

void fk_checks(Recorder& r, const SuiteOptions& opt) {
  r.group("fk");
  const int n_steps = 16;
  auto ens = sample_bridges(opt.n_paths, n_steps, opt.seed, opt.threads);
  bool pinned = true;
  for (int p = 0; p < ens.n_paths; ++p)
    for (int c = 0; c < 3; ++c)
      pinned = pinned && ens.at(p, 0, c) == 0.0 && ens.at(p, n_steps, c) == 0.0;
  r.flag("bridge endpoints pinned", pinned);
  auto mid = bridge_mean(ens, n_steps / 2);
  r.sigma("bridge mean at s=0.5", 0.0, mid.mean, mid.std_err);

  CounterRng pick(opt.seed, 0xB41D6E5ULL);
  for (int q = 0; q < 10; ++q) {
    int i = 1 + int(pick.next() % (n_steps - 1));
    int j = 1 + int(pick.next() % (n_steps - 1));
    double si = double(i) / n_steps, sj = double(j) / n_steps;
    auto cov = bridge_covariance(ens, i, j, int(q % 3));
    r.sigma("bridge covariance (" + fmt("%.4g", si) + "," + fmt("%.4g", sj) + ")",
            std::min(si, sj) - si * sj, cov.mean, cov.std_err);
  }

  auto proc = oscillator_process_check(1.0, opt.n_paths, opt.seed, 16, opt.threads);
  r.abs("oscillator process covariance (sigma units)", 0.0, proc.max_sigma, 3.0);

  CounterRng coef(opt.seed, 0x6A055ULL);
  for (int t = 0; t < 5; ++t) {
    double c0 = 4.0 * coef.uniform() - 2.0, c1 = 4.0 * coef.uniform() - 2.0;
    double c2 = 4.0 * coef.uniform() - 2.0;
    double be = 0.5 + 2.5 * coef.uniform();
    auto a = [=](double s) {
      return c0 + c1 * std::sin(2.0 * kPi * s) + c2 * std::cos(2.0 * kPi * s);
    };
    auto cov = [=](double s, double u) {
      return oscillator_covariance(be, std::fabs(s - u));
    };
    auto g = gaussian_identity_check(a, cov, opt.n_paths, opt.seed + 1 + t, 64,
                                     opt.threads);
    r.sigma("Gaussian identity function " + std::to_string(t + 1), g.rhs, g.lhs,
            g.std_err);
  }

  ModeSpec mode{1.5, 0.2, 1.0};
  auto co = coupled_oscillator_check(mode, 1.0, 1.0, 512);
  r.rel("coupled oscillator path vs normal modes n=512", co.exact, co.path, 1e-3);
  ModeSpec free_mode{1.5, 0.0, 1.0};
  r.rel("decoupled mode gives free trap",
        coupled_oscillator_check(free_mode, 1.0, 1.0, 64).free_trap,
        coupled_oscillator_exact(free_mode, 1.0, 1.0), 1e-13);
  double order = 0.0;
  try {
    order = coupled_oscillator_convergence(mode, 1.0, 1.0).order;
  } catch (const DiscretizationError&) {
    order = 0.0;
  }
  r.abs("coupled oscillator convergence order", 2.0, order, 0.5);

  auto corr = correlation_check_harmonic(1.0, 2.0, std::max(2, opt.n_paths / 5),
                                         opt.seed, 64, opt.threads);
  r.abs("harmonic correlation (sigma units)", 0.0, corr.max_sigma, 4.0);
  r.abs("harmonic stationarity (sigma units)", 0.0, corr.stationarity_sigma, 4.0);

  auto geo_ens = sample_bridges(std::max(2, opt.n_paths / 5), 64, opt.seed + 99,
                                opt.threads);
  AtomWeight w;
  std::vector<double> xs = {2.0, 4.0, 8.0, 16.0}, ys;
  bool mono = true;
  for (double x : xs) {
    ys.push_back(geometric_constraint_deficit(x, geo_ens, w));
    if (ys.size() > 1) mono = mono && ys.back() < ys[ys.size() - 2];
  }
  r.flag("wall constraint deficit falls with distance", mono && ys.back() > 0.0);
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    double ly = std::log(ys[i]);
    sx += xs[i];
    sy += ly;
    sxx += xs[i] * xs[i];
    sxy += xs[i] * ly;
  }
  double n = double(xs.size());
  double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  r.flag("wall constraint log-linear slope negative", slope < 0.0);
  r.flag("wall constraint below one at contact",
         geometric_constraint_estimate(0.0, geo_ens, w) < 1.0);

  auto gm = ground_state_moment_mc(opt.n_paths, opt.seed + 7);
  r.sigma("ground moment sampled vs spectral", default_table()->moment_x2,
          gm.mean, gm.std_err);
}

void regime_checks(Recorder& r, const PhysicalConfig& base) {
  r.group("regimes");
  auto table = default_table();
  PhysicalConfig cfg = base;
  cfg.lambda_screen = kInf;
  auto s = derive_scales(cfg);
  struct Case {
    const char* name;
    double ls;
    std::vector<std::string> rows;
  } cases[] = {
      {"unscreened", kInf, {"vdW", "CP", "classical"}},
      {"screen beyond lambda_ph", 100.0 * s.lambda_ph,
       {"vdW", "CP", "classical", "~0"}},
      {"screen between scales", std::sqrt(s.lambda_at * s.lambda_ph),
       {"vdW", "CP", "CP-class", "~0"}},
      {"screen below lambda_at", 0.01 * s.lambda_at,
       {"vdW", "vdW-class", "CP-class", "~0"}},
  };
  for (const auto& c : cases) {
    cfg.lambda_screen = c.ls;
    auto t = regime_table(cfg, *table);
    std::vector<std::string> got;
    for (const auto& row : t.rows) got.push_back(row.formula);
    r.flag(std::string("regime rows ") + c.name, got == c.rows);
  }
  cfg.lambda_screen = s.lambda_ph;
  r.flag("lambda_screen = lambda_ph flagged as boundary",
         regime_table(cfg, *table).boundary);
}

}  // namespace

const std::vector<std::string>& verification_groups() {
  static const std::vector<std::string> g = {
      "propagator", "spectrum", "kernel", "potential", "screening", "fk", "regimes"};
  return g;
}

std::vector<CheckRecord> run_verification(const PhysicalConfig& cfg,
                                          const SuiteOptions& opt) {
  cfg.validate();
  const auto& all = verification_groups();
  for (const auto& g : opt.only)
    if (std::find(all.begin(), all.end(), g) == all.end())
      throw ParameterError("unknown verification group: " + g);
  auto want = [&](const std::string& g) {
    return opt.only.empty() ||
           std::find(opt.only.begin(), opt.only.end(), g) != opt.only.end();
  };
  std::vector<CheckRecord> out;
  Recorder r(out);
  if (want("propagator")) propagator_checks(r);
  if (want("spectrum")) spectrum_checks(r);
  if (want("kernel")) kernel_checks(r, cfg);
  if (want("potential")) potential_checks(r, cfg);
  if (want("screening")) screening_checks(r, cfg);
  if (want("fk")) fk_checks(r, opt);
  if (want("regimes")) regime_checks(r, cfg);
  return out;
}

bool all_passed(const std::vector<CheckRecord>& records) {
  return std::all_of(records.begin(), records.end(),
                     [](const CheckRecord& c) { return c.passed; });
}

void write_report_text(std::ostream& os, const std::vector<CheckRecord>& records) {
  char buf[512];
  int fails = 0;
  for (const auto& c : records) {
    std::snprintf(buf, sizeof buf,
                  "%-4s %-11s %-50s expected % .6e observed % .6e tol %.2e sigma %.2e\n",
                  c.passed ? "PASS" : "FAIL", c.group.c_str(), c.name.c_str(),
                  c.expected, c.observed, c.tolerance, c.sigma);
    os << buf;
    if (!c.passed) ++fails;
  }
  os << records.size() - fails << "/" << records.size() << " checks passed\n";
}

void write_report_csv(std::ostream& os, const std::vector<CheckRecord>& records) {
  os << "group,check,expected,observed,tolerance,sigma,pass\n";
  char buf[512];
  for (const auto& c : records) {
    std::snprintf(buf, sizeof buf, "%s,\"%s\",%.17g,%.17g,%.17g,%.17g,%s\n",
                  c.group.c_str(), c.name.c_str(), c.expected, c.observed,
                  c.tolerance, c.sigma, c.passed ? "pass" : "fail");
    os << buf;
  }
}

}  // namespace atomwall
