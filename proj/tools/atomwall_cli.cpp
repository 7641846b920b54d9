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

// Command-line front end. Talks to the library only through atomwall.h.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "atomwall/atomwall.h"

namespace {

enum Exit { kOk = 0, kCheckFailed = 1, kConfig = 2, kQuadrature = 3, kRuntime = 4 };

struct Globals {
  std::string config_path;
  std::optional<std::string> alpha_fs, tau, lambda_screen, e_max, seed;
  std::string out;
  std::string in_units = "aB";
  int threads = 0;
};

struct CurveArgs {
  double x_min = 20.0;
  double x_max = 1e7;
  int points = 60;
  int n_max = 20;
  int continuum_bins = 200;
  std::string spectrum;
  bool plot = false;
};

struct VerifyArgs {
  std::vector<std::string> only;
  int n_paths = 100000;
  std::string csv;
};

struct SpectrumArgs {
  int n_max = 20;
  int continuum_bins = 200;
};

struct Config {
  aw_config* p = nullptr;
  ~Config() { aw_config_free(p); }
};
struct Spectrum {
  aw_spectrum* p = nullptr;
  ~Spectrum() { aw_spectrum_free(p); }
};
struct Engine {
  aw_engine* p = nullptr;
  ~Engine() { aw_engine_free(p); }
};
struct Curve {
  aw_curve* p = nullptr;
  ~Curve() { aw_curve_free(p); }
};
struct Report {
  aw_report* p = nullptr;
  ~Report() { aw_report_free(p); }
};
struct Text {
  char* p = nullptr;
  ~Text() { aw_string_free(p); }
};

int exit_for(aw_status s) {
  switch (s) {
    case AW_OK: return kOk;
    case AW_ERR_CONFIG:
    case AW_ERR_DOMAIN:
    case AW_ERR_HIERARCHY:
    case AW_ERR_PARAMETER:
    case AW_ERR_CUTOFF_REQUIRED:
      return kConfig;
    case AW_ERR_QUADRATURE: return kQuadrature;
    default: return kRuntime;
  }
}

int report(aw_status s) {
  if (s == AW_ERR_QUADRATURE)
    std::fprintf(stderr, "error: quadrature failed at x = %.10e a_B: %s\n",
                 aw_last_failure_x(), aw_last_error());
  else
    std::fprintf(stderr, "error: %s\n", aw_last_error());
  return exit_for(s);
}

std::string fmt17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

// Length in the requested unit, converted to a_B.
double unit_scale(const Globals& g, const aw_scales& s) {
  if (g.in_units == "lambda_at") return s.lambda_at;
  if (g.in_units == "lambda_ph") return s.lambda_ph;
  return 1.0;
}

aw_status build_config(const Globals& g, Config& cfg, double& scale) {
  aw_status s = aw_config_new(&cfg.p);
  if (s) return s;
  if (!g.config_path.empty() && (s = aw_config_load(cfg.p, g.config_path.c_str())))
    return s;
  auto set = [&](const char* key, const std::optional<std::string>& v) {
    return v ? aw_config_set(cfg.p, key, v->c_str()) : AW_OK;
  };
  if ((s = set("alpha_fs", g.alpha_fs)) || (s = set("tau", g.tau)) ||
      (s = set("e_max", g.e_max)) || (s = set("rng_seed", g.seed)))
    return s;
  aw_scales sc;
  if ((s = aw_config_scales(cfg.p, &sc))) return s;
  scale = unit_scale(g, sc);
  if (g.lambda_screen) {
    char* end = nullptr;
    double v = std::strtod(g.lambda_screen->c_str(), &end);
    std::string value = *g.lambda_screen;
    if (end != g.lambda_screen->c_str() && *end == '\0') value = fmt17(v * scale);
    if ((s = aw_config_set(cfg.p, "lambda_screen", value.c_str()))) return s;
  }
  if ((s = aw_config_validate(cfg.p))) return s;
  if (aw_config_check_hierarchy(cfg.p) == AW_ERR_HIERARCHY)
    std::fprintf(stderr, "warning: %s\n", aw_last_error());
  return AW_OK;
}

aw_status build_spectrum(const std::string& path, int n_max, int bins,
                         Spectrum& sp) {
  if (!path.empty()) return aw_spectrum_load_csv(path.c_str(), &sp.p);
  return aw_spectrum_build(n_max, bins, &sp.p);
}

int run_curve(const Globals& g, const CurveArgs& a) {
  Config cfg;
  double scale = 1.0;
  if (aw_status s = build_config(g, cfg, scale)) return report(s);
  double x_min = a.x_min * scale, x_max = a.x_max * scale;
  if (!(x_max > x_min) || a.points < 2) {
    std::fprintf(stderr, "error: empty x-range [%g, %g] with %d points\n", x_min,
                 x_max, a.points);
    return kConfig;
  }
  if (!(x_min > 10.0)) {
    std::fprintf(stderr, "error: x-min must exceed 10 a_B (got %g)\n", x_min);
    return kConfig;
  }
  Spectrum sp;
  if (aw_status s = build_spectrum(a.spectrum, a.n_max, a.continuum_bins, sp))
    return report(s);
  Engine eng;
  if (aw_status s = aw_engine_new(cfg.p, sp.p, &eng.p)) return report(s);
  std::vector<double> xs(a.points);
  if (aw_status s = aw_log_grid(x_min, x_max, a.points, xs.data())) return report(s);
  Curve curve;
  if (aw_status s = aw_curve_compute(eng.p, xs.data(), xs.size(), g.threads, &curve.p))
    return report(s);
  if (g.out.empty()) {
    size_t n = 0;
    aw_curve_size(curve.p, &n);
    std::printf("x_aB,phi_hartree,regime,method,rel_err_estimate\n");
    for (size_t i = 0; i < n; ++i) {
      aw_phi p;
      aw_curve_point(curve.p, i, &p);
      std::printf("%.10e,%.10e,%s,%s,%.3e\n", p.x, p.phi, aw_regime_name(p.regime),
                  aw_method_name(p.method), p.rel_err);
    }
    return kOk;
  }
  Text script;
  if (a.plot) {
    if (aw_status s = aw_plot_script_path(g.out.c_str(), &script.p)) return report(s);
  }
  if (aw_status s = aw_curve_write(curve.p, "curve", g.out.c_str(), script.p))
    return report(s);
  std::fprintf(stderr, "wrote %s%s%s\n", g.out.c_str(), script.p ? " and " : "",
               script.p ? script.p : "");
  return kOk;
}

int run_regimes(const Globals& g) {
  Config cfg;
  double scale = 1.0;
  if (aw_status s = build_config(g, cfg, scale)) return report(s);
  Spectrum sp;
  if (aw_status s = aw_spectrum_build(20, 200, &sp.p)) return report(s);
  Text t;
  int boundary = 0;
  if (aw_status s = aw_regime_table(cfg.p, sp.p, &t.p, &boundary)) return report(s);
  std::fputs(t.p, stdout);
  return kOk;
}

int run_verify(const Globals& g, const VerifyArgs& a) {
  Config cfg;
  double scale = 1.0;
  if (aw_status s = build_config(g, cfg, scale)) return report(s);
  double seed = 0.0;
  aw_config_get(cfg.p, "rng_seed", &seed);
  std::string groups;
  for (const auto& o : a.only) groups += (groups.empty() ? "" : ",") + o;
  Report rep;
  if (aw_status s = aw_verify_run(cfg.p, groups.c_str(), uint64_t(seed), a.n_paths,
                                  g.threads, &rep.p))
    return report(s);
  Text t;
  if (aw_status s = aw_report_text(rep.p, &t.p)) return report(s);
  std::printf("# rng: %s, seed %llu\n", aw_rng_name(),
              static_cast<unsigned long long>(seed));
  std::fputs(t.p, stdout);
  std::string csv = a.csv.empty() ? g.out : a.csv;
  if (!csv.empty())
    if (aw_status s = aw_report_write_csv(rep.p, csv.c_str())) return report(s);
  int ok = 0;
  aw_report_passed(rep.p, &ok);
  return ok ? kOk : kCheckFailed;
}

int run_polarizability(const Globals& g, const SpectrumArgs& a) {
  Config cfg;
  double scale = 1.0;
  if (aw_status s = build_config(g, cfg, scale)) return report(s);
  Spectrum full, bound;
  if (aw_status s = aw_spectrum_build(a.n_max, a.continuum_bins, &full.p))
    return report(s);
  if (aw_status s = aw_spectrum_build(a.n_max, 0, &bound.p)) return report(s);
  double af = 0, ab = 0, sum = 0, moment = 0;
  aw_spectrum_polarizability(full.p, &af);
  aw_spectrum_polarizability(bound.p, &ab);
  aw_spectrum_strength_sum(full.p, &sum);
  aw_spectrum_moment(full.p, &moment);
  std::printf("n_max = %d, continuum_bins = %d\n", a.n_max, a.continuum_bins);
  std::printf("alpha_E bound-only       = %.6f a_B^3\n", ab);
  std::printf("alpha_E bound+continuum  = %.6f a_B^3\n", af);
  std::printf("strength sum             = %.6f a_B^2\n", sum);
  std::printf("completeness defect      = %.3e a_B^2\n", sum - moment);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Atom-wall potential: van der Waals, Casimir-Polder and thermal regimes"};
  app.set_version_flag("--version", std::string(aw_version()));
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--config", g.config_path, "key = value configuration file");
  app.add_option("--alpha-fs", g.alpha_fs, "fine-structure constant");
  app.add_option("--tau", g.tau, "k_B T in units of E_1 - E_0");
  app.add_option("--lambda-screen", g.lambda_screen, "screening length (inf = none)");
  app.add_option("--e-max", g.e_max, "spectral energy cutoff in Hartree");
  app.add_option("--seed", g.seed, "random seed");
  app.add_option("--out", g.out, "output path");
  app.add_option("--in-units", g.in_units, "length unit of distance inputs")
      ->check(CLI::IsMember({"aB", "lambda_at", "lambda_ph"}));
  app.add_option("--threads", g.threads, "worker threads (0 = all cores)");

  CurveArgs ca;
  auto* curve = app.add_subcommand("curve", "potential over a log-spaced grid");
  curve->add_option("--x-min", ca.x_min, "smallest distance");
  curve->add_option("--x-max", ca.x_max, "largest distance");
  curve->add_option("--points", ca.points, "grid points");
  curve->add_option("--n-max", ca.n_max, "highest bound level");
  curve->add_option("--continuum-bins", ca.continuum_bins, "continuum bins");
  curve->add_option("--spectrum", ca.spectrum, "spectrum CSV instead of built-in");
  curve->add_flag("--plot", ca.plot, "emit a sibling gnuplot script");

  auto* regimes = app.add_subcommand("regimes", "regime map for the configuration");

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "run the verification suite");
  verify->add_option("--only", va.only, "restrict to groups")
      ->check(CLI::IsMember({"propagator", "spectrum", "kernel", "potential",
                             "screening", "fk", "regimes"}));
  verify->add_option("--n-paths", va.n_paths, "Monte Carlo paths");
  verify->add_option("--csv", va.csv, "CSV report path");

  SpectrumArgs sa;
  auto* pol = app.add_subcommand("polarizability", "static polarizability report");
  pol->add_option("--n-max", sa.n_max, "highest bound level");
  pol->add_option("--continuum-bins", sa.continuum_bins, "continuum bins");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kConfig;
  }
  if (*curve) return run_curve(g, ca);
  if (*regimes) return run_regimes(g);
  if (*verify) return run_verify(g, va);
  if (*pol) return run_polarizability(g, sa);
  return kConfig;
}
