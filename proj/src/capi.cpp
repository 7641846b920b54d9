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

#include "atomwall/atomwall.h"

#include <cmath>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <memory>
#include <new>
#include <sstream>
#include <string>

#include "atomwall/errors.hpp"
#include "atomwall/output.hpp"
#include "atomwall/potential.hpp"
#include "atomwall/rng.hpp"
#include "atomwall/spectrum.hpp"
#include "atomwall/verification.hpp"

struct aw_config {
  atomwall::PhysicalConfig cfg;
};

struct aw_spectrum {
  std::shared_ptr<const atomwall::SpectrumTable> table;
};

struct aw_engine {
  std::unique_ptr<atomwall::PotentialEngine> engine;
};

struct aw_curve {
  atomwall::PotentialCurve curve;
};

struct aw_report {
  std::vector<atomwall::CheckRecord> records;
};

namespace {

thread_local std::string last_error;
thread_local double last_failure_x = NAN;

aw_status fail(aw_status s, const std::string& msg) {
  last_error = msg;
  return s;
}

template <class Fn>
aw_status guard(Fn fn) {
  try {
    fn();
    last_error.clear();
    return AW_OK;
  } catch (const atomwall::QuadratureFailure& e) {
    last_failure_x = e.x();
    return fail(AW_ERR_QUADRATURE, e.what());
  } catch (const atomwall::Error& e) {
    return fail(static_cast<aw_status>(static_cast<int>(e.code())), e.what());
  } catch (const std::bad_alloc&) {
    return fail(AW_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(AW_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(AW_ERR_INTERNAL, "unknown error");
  }
}

char* dup_string(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (!p) throw std::bad_alloc();
  std::memcpy(p, s.data(), s.size() + 1);
  return p;
}

#define AW_REQUIRE(ptr)                                          \
  do {                                                           \
    if (!(ptr)) return fail(AW_ERR_NULL, #ptr " is null");       \
  } while (0)

void fill_phi(const atomwall::CurvePoint& p, aw_phi* out) {
  out->x = p.x;
  out->phi = p.phi;
  out->regime = static_cast<int>(p.regime);
  out->method = static_cast<int>(p.method);
  out->rel_err = p.rel_err;
  out->phi_unscreened = NAN;
  out->has_alternate = p.phi_alternate.has_value();
  out->phi_alternate = p.phi_alternate.value_or(NAN);
  out->alternate_method = static_cast<int>(p.alternate_method);
}

}  // namespace

extern "C" {

const char* aw_version(void) { return ATOMWALL_VERSION; }
const char* aw_last_error(void) { return last_error.c_str(); }
double aw_last_failure_x(void) { return last_failure_x; }
void aw_string_free(char* s) { std::free(s); }
const char* aw_rng_name(void) { return atomwall::kRngName; }

const char* aw_regime_name(int regime) {
  if (regime < 0 || regime > AW_REGIME_SCREENED_CANCELLED) return "unknown";
  return atomwall::regime_name(static_cast<atomwall::Regime>(regime)).data();
}

const char* aw_method_name(int method) {
  if (method < 0 || method > AW_METHOD_SCREENED) return "unknown";
  return atomwall::method_name(static_cast<atomwall::Method>(method)).data();
}

aw_status aw_config_new(aw_config** out) {
  AW_REQUIRE(out);
  return guard([&] { *out = new aw_config(); });
}

void aw_config_free(aw_config* cfg) { delete cfg; }

aw_status aw_config_load(aw_config* cfg, const char* path) {
  AW_REQUIRE(cfg);
  AW_REQUIRE(path);
  return guard([&] { cfg->cfg = atomwall::load_config(path); });
}

aw_status aw_config_set(aw_config* cfg, const char* key, const char* value) {
  AW_REQUIRE(cfg);
  AW_REQUIRE(key);
  AW_REQUIRE(value);
  return guard([&] { atomwall::set_config_value(cfg->cfg, key, value); });
}

aw_status aw_config_get(const aw_config* cfg, const char* key, double* out) {
  AW_REQUIRE(cfg);
  AW_REQUIRE(key);
  AW_REQUIRE(out);
  const auto& c = cfg->cfg;
  std::string k(key);
  if (k == "alpha_fs") *out = c.alpha_fs;
  else if (k == "tau") *out = c.tau;
  else if (k == "lambda_screen") *out = c.lambda_screen;
  else if (k == "e_max") *out = c.e_max;
  else if (k == "k_cut_scale") *out = c.k_cut_scale;
  else if (k == "rng_seed" || k == "seed") *out = double(c.rng_seed);
  else return fail(AW_ERR_CONFIG, "unknown configuration key: " + k);
  last_error.clear();
  return AW_OK;
}

aw_status aw_config_validate(const aw_config* cfg) {
  AW_REQUIRE(cfg);
  return guard([&] { cfg->cfg.validate(); });
}

aw_status aw_config_format(const aw_config* cfg, char** out) {
  AW_REQUIRE(cfg);
  AW_REQUIRE(out);
  return guard([&] { *out = dup_string(atomwall::format_config(cfg->cfg)); });
}

aw_status aw_config_scales(const aw_config* cfg, aw_scales* out) {
  AW_REQUIRE(cfg);
  AW_REQUIRE(out);
  return guard([&] {
    auto s = atomwall::derive_scales(cfg->cfg);
    *out = {s.lambda_c, s.a_b, s.lambda_at, s.lambda_ph};
  });
}

aw_status aw_config_check_hierarchy(const aw_config* cfg) {
  AW_REQUIRE(cfg);
  return guard([&] {
    atomwall::validate_hierarchy(atomwall::derive_scales(cfg->cfg), cfg->cfg);
  });
}

aw_status aw_spectrum_build(int n_max, int continuum_bins, aw_spectrum** out) {
  AW_REQUIRE(out);
  return guard([&] {
    auto t = std::make_shared<const atomwall::SpectrumTable>(
        atomwall::build_spectrum(n_max, continuum_bins));
    *out = new aw_spectrum{std::move(t)};
  });
}

aw_status aw_spectrum_load_csv(const char* path, aw_spectrum** out) {
  AW_REQUIRE(path);
  AW_REQUIRE(out);
  return guard([&] {
    auto t = std::make_shared<const atomwall::SpectrumTable>(
        atomwall::read_spectrum_csv(path));
    *out = new aw_spectrum{std::move(t)};
  });
}

aw_status aw_spectrum_save_csv(const aw_spectrum* sp, const char* path) {
  AW_REQUIRE(sp);
  AW_REQUIRE(path);
  return guard([&] { atomwall::write_spectrum_csv(*sp->table, path); });
}

void aw_spectrum_free(aw_spectrum* sp) { delete sp; }

aw_status aw_spectrum_polarizability(const aw_spectrum* sp, double* out) {
  AW_REQUIRE(sp);
  AW_REQUIRE(out);
  return guard([&] { *out = atomwall::static_polarizability(*sp->table); });
}

aw_status aw_spectrum_strength_sum(const aw_spectrum* sp, double* out) {
  AW_REQUIRE(sp);
  AW_REQUIRE(out);
  return guard([&] { *out = sp->table->strength_sum(); });
}

aw_status aw_spectrum_moment(const aw_spectrum* sp, double* out) {
  AW_REQUIRE(sp);
  AW_REQUIRE(out);
  return guard([&] { *out = sp->table->moment_x2; });
}

aw_status aw_spectrum_lines(const aw_spectrum* sp, size_t* out) {
  AW_REQUIRE(sp);
  AW_REQUIRE(out);
  *out = sp->table->lines.size();
  last_error.clear();
  return AW_OK;
}

aw_status aw_engine_new(const aw_config* cfg, const aw_spectrum* sp,
                        aw_engine** out) {
  AW_REQUIRE(cfg);
  AW_REQUIRE(sp);
  AW_REQUIRE(out);
  return guard([&] {
    auto e = std::make_unique<atomwall::PotentialEngine>(cfg->cfg, sp->table);
    *out = new aw_engine{std::move(e)};
  });
}

void aw_engine_free(aw_engine* eng) { delete eng; }

aw_status aw_engine_phi(const aw_engine* eng, double x, aw_phi* out) {
  AW_REQUIRE(eng);
  AW_REQUIRE(out);
  return guard([&] {
    auto r = eng->engine->phi_total(x);
    fill_phi({r.x, r.phi, r.regime, r.method, r.rel_err, r.phi_alternate,
              r.alternate_method},
             out);
    out->phi_unscreened = r.phi_unscreened;
  });
}

aw_status aw_log_grid(double x_min, double x_max, int n, double* out) {
  AW_REQUIRE(out);
  return guard([&] {
    auto xs = atomwall::log_grid(x_min, x_max, n);
    std::copy(xs.begin(), xs.end(), out);
  });
}

aw_status aw_curve_compute(const aw_engine* eng, const double* xs, size_t n,
                           int threads, aw_curve** out) {
  AW_REQUIRE(eng);
  AW_REQUIRE(xs);
  AW_REQUIRE(out);
  return guard([&] {
    std::vector<double> v(xs, xs + n);
    auto c = atomwall::compute_curve(*eng->engine, v, threads);
    *out = new aw_curve{std::move(c)};
  });
}

void aw_curve_free(aw_curve* curve) { delete curve; }

aw_status aw_curve_size(const aw_curve* curve, size_t* out) {
  AW_REQUIRE(curve);
  AW_REQUIRE(out);
  *out = curve->curve.points.size();
  last_error.clear();
  return AW_OK;
}

aw_status aw_curve_point(const aw_curve* curve, size_t i, aw_phi* out) {
  AW_REQUIRE(curve);
  AW_REQUIRE(out);
  if (i >= curve->curve.points.size())
    return fail(AW_ERR_PARAMETER, "curve index out of range");
  fill_phi(curve->curve.points[i], out);
  last_error.clear();
  return AW_OK;
}

aw_status aw_curve_write(const aw_curve* curve, const char* command,
                         const char* csv_path, const char* script_path) {
  AW_REQUIRE(curve);
  AW_REQUIRE(csv_path);
  return guard([&] {
    const auto& c = curve->curve;
    auto m = atomwall::make_manifest(command ? command : "curve", c.config,
                                     c.n_max, c.continuum_bins);
    atomwall::write_curve_csv(csv_path, c, m);
    if (script_path) {
      std::string csv(csv_path);
      auto slash = csv.find_last_of('/');
      std::string name = slash == std::string::npos ? csv : csv.substr(slash + 1);
      std::ofstream f(script_path, std::ios::binary);
      if (!f) throw atomwall::IoError(std::string("cannot open ") + script_path);
      f << atomwall::plot_script(name, c.config);
      if (!f) throw atomwall::IoError(std::string("write failed: ") + script_path);
    }
  });
}

aw_status aw_kernel_write(const aw_engine* eng, const double* ks, size_t n,
                          int general, const char* csv_path) {
  AW_REQUIRE(eng);
  AW_REQUIRE(ks);
  AW_REQUIRE(csv_path);
  return guard([&] {
    const auto& e = *eng->engine;
    const auto& p = e.kernel();
    auto m = atomwall::make_manifest("kernel", e.config(), 0, 0);
    if (p.table) {
      m.n_max = p.table->n_max;
      m.continuum_bins = p.table->continuum_bins;
    }
    atomwall::write_kernel_csv(
        csv_path, p, std::vector<double>(ks, ks + n),
        general ? atomwall::KernelBranch::General : atomwall::KernelBranch::LowTemp, m);
  });
}

aw_status aw_plot_script_path(const char* csv_path, char** out) {
  AW_REQUIRE(csv_path);
  AW_REQUIRE(out);
  return guard([&] { *out = dup_string(atomwall::plot_script_path(csv_path)); });
}

aw_status aw_regime_table(const aw_config* cfg, const aw_spectrum* sp,
                          char** text, int* boundary) {
  AW_REQUIRE(cfg);
  AW_REQUIRE(sp);
  AW_REQUIRE(text);
  return guard([&] {
    auto t = atomwall::regime_table(cfg->cfg, *sp->table);
    *text = dup_string(atomwall::format_regime_table(t));
    if (boundary) *boundary = t.boundary ? 1 : 0;
  });
}

aw_status aw_verify_run(const aw_config* cfg, const char* groups, uint64_t seed,
                        int n_paths, int threads, aw_report** out) {
  AW_REQUIRE(cfg);
  AW_REQUIRE(out);
  return guard([&] {
    atomwall::SuiteOptions opt;
    opt.seed = seed;
    if (n_paths > 0) opt.n_paths = n_paths;
    opt.threads = threads;
    if (groups) {
      std::stringstream ss(groups);
      for (std::string g; std::getline(ss, g, ',');)
        if (!g.empty()) opt.only.push_back(g);
    }
    auto rec = atomwall::run_verification(cfg->cfg, opt);
    *out = new aw_report{std::move(rec)};
  });
}

void aw_report_free(aw_report* rep) { delete rep; }

aw_status aw_report_size(const aw_report* rep, size_t* out) {
  AW_REQUIRE(rep);
  AW_REQUIRE(out);
  *out = rep->records.size();
  last_error.clear();
  return AW_OK;
}

aw_status aw_report_check(const aw_report* rep, size_t i, aw_check* out) {
  AW_REQUIRE(rep);
  AW_REQUIRE(out);
  if (i >= rep->records.size())
    return fail(AW_ERR_PARAMETER, "check index out of range");
  const auto& c = rep->records[i];
  *out = {c.group.c_str(), c.name.c_str(), c.expected, c.observed,
          c.tolerance, c.sigma, c.passed ? 1 : 0};
  last_error.clear();
  return AW_OK;
}

aw_status aw_report_passed(const aw_report* rep, int* out) {
  AW_REQUIRE(rep);
  AW_REQUIRE(out);
  *out = atomwall::all_passed(rep->records) ? 1 : 0;
  last_error.clear();
  return AW_OK;
}

aw_status aw_report_text(const aw_report* rep, char** out) {
  AW_REQUIRE(rep);
  AW_REQUIRE(out);
  return guard([&] {
    std::ostringstream os;
    atomwall::write_report_text(os, rep->records);
    *out = dup_string(os.str());
  });
}

aw_status aw_report_write_csv(const aw_report* rep, const char* path) {
  AW_REQUIRE(rep);
  AW_REQUIRE(path);
  return guard([&] {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw atomwall::IoError(std::string("cannot open ") + path);
    atomwall::write_report_csv(f, rep->records);
    if (!f) throw atomwall::IoError(std::string("write failed: ") + path);
  });
}

}  // extern "C"
