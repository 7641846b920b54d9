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

#include "atomwall/output.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <sstream>

#include "atomwall/errors.hpp"
#include "atomwall/rng.hpp"

namespace atomwall {

#ifndef ATOMWALL_VERSION
#define ATOMWALL_VERSION "0.0.0"
#endif

std::string_view tool_version() { return ATOMWALL_VERSION; }

std::string current_timestamp() {
  std::time_t t = std::time(nullptr);
  if (const char* env = std::getenv("SOURCE_DATE_EPOCH")) {
    char* end = nullptr;
    long long v = std::strtoll(env, &end, 10);
    if (end != env && *end == '\0') t = std::time_t(v);
  }
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

RunManifest make_manifest(std::string command, const PhysicalConfig& cfg,
                          int n_max, int continuum_bins) {
  RunManifest m;
  m.command = std::move(command);
  m.config = cfg;
  m.n_max = n_max;
  m.continuum_bins = continuum_bins;
  m.seed = cfg.rng_seed;
  m.version = std::string(tool_version());
  m.timestamp = current_timestamp();
  return m;
}

void write_manifest(std::ostream& os, const RunManifest& m) {
  os << "# atomwall " << m.version << "\n";
  os << "# command: " << m.command << "\n";
  os << "# timestamp: " << m.timestamp << "\n";
  std::istringstream cfg(format_config(m.config));
  for (std::string line; std::getline(cfg, line);) os << "# " << line << "\n";
  os << "# spectrum: n_max = " << m.n_max
     << ", continuum_bins = " << m.continuum_bins << "\n";
  os << "# seed: " << m.seed << " (" << kRngName << ")\n";
}

void write_curve_csv(std::ostream& os, const PotentialCurve& curve,
                     const RunManifest& m) {
  write_manifest(os, m);
  os << "x_aB,phi_hartree,regime,method,rel_err_estimate,phi_alternate,"
        "alternate_method\n";
  char buf[256];
  for (const auto& p : curve.points) {
    std::snprintf(buf, sizeof buf, "%.10e,%.10e,%s,%s,%.3e", p.x, p.phi,
                  std::string(regime_name(p.regime)).c_str(),
                  std::string(method_name(p.method)).c_str(), p.rel_err);
    os << buf;
    if (p.phi_alternate) {
      std::snprintf(buf, sizeof buf, ",%.10e,%s", *p.phi_alternate,
                    std::string(method_name(p.alternate_method)).c_str());
      os << buf << "\n";
    } else {
      os << ",,\n";
    }
  }
}

void write_curve_csv(const std::string& path, const PotentialCurve& curve,
                     const RunManifest& m) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot open " + path + " for writing");
  write_curve_csv(f, curve, m);
  if (!f) throw IoError("write failed: " + path);
}

void write_kernel_csv(std::ostream& os, const KernelParams& p,
                      const std::vector<double>& ks, KernelBranch branch,
                      const RunManifest& m) {
  bool general = branch == KernelBranch::General;
  std::vector<double> bs;
  bs.reserve(ks.size());
  for (double k : ks) bs.push_back(general ? b_general(k, p) : b_low_temp(k, p));
  write_manifest(os, m);
  os << "k_aB_inv,B_aB2,branch\n";
  char buf[128];
  for (std::size_t i = 0; i < ks.size(); ++i) {
    std::snprintf(buf, sizeof buf, "%.10e,%.10e,%s\n", ks[i], bs[i],
                  general ? "general" : "low_temp");
    os << buf;
  }
}

void write_kernel_csv(const std::string& path, const KernelParams& p,
                      const std::vector<double>& ks, KernelBranch branch,
                      const RunManifest& m) {
  std::ostringstream body;
  write_kernel_csv(body, p, ks, branch, m);
  std::ofstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot open " + path + " for writing");
  f << body.str();
  if (!f) throw IoError("write failed: " + path);
}

std::string plot_script_path(const std::string& csv_path) {
  auto dot = csv_path.find_last_of('.');
  auto slash = csv_path.find_last_of('/');
  if (dot == std::string::npos || (slash != std::string::npos && dot < slash))
    return csv_path + ".gp";
  return csv_path.substr(0, dot) + ".gp";
}

std::string plot_script(const std::string& csv_name, const PhysicalConfig& cfg) {
  auto s = derive_scales(cfg);
  auto ord = screen_ordering(s, cfg.lambda_screen);
  std::ostringstream os;
  char buf[256];
  os << "# atom-wall potential, ordering: " << ordering_name(ord) << "\n";
  os << "set datafile separator ','\n";
  os << "set datafile commentschars '#x'\n";
  os << "set logscale xy\n";
  os << "set format x '10^{%L}'\n";
  os << "set format y '10^{%L}'\n";
  os << "set xlabel 'X / a_B'\n";
  os << "set ylabel '|Phi| / Hartree'\n";
  os << "set key top right\n";
  auto mark = [&](const char* name, double v, int id) {
    std::snprintf(buf, sizeof buf,
                  "set arrow %d from %.6e, graph 0 to %.6e, graph 1 nohead dt 2\n"
                  "set label %d '%s' at %.6e, graph 0.95 offset 0.5,0\n",
                  id, v, v, id, name, v);
    os << buf;
  };
  mark("lambda_at", s.lambda_at, 1);
  mark("lambda_ph", s.lambda_ph, 2);
  if (cfg.screened()) mark("lambda_screen", cfg.lambda_screen, 3);
  os << "plot '" << csv_name << "' using 1:(abs($2)) with lines lw 2 "
     << "title '|Phi|'\n";
  return os.str();
}

}  // namespace atomwall
