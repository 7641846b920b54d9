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

#include "atomwall/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "atomwall/errors.hpp"

namespace atomwall {

namespace {

constexpr int kRydbergSumLimit = 200000;

double bound_gap(int n) { return 0.5 * (1.0 - 1.0 / (double(n) * n)); }

long double factorial(int n) {
  long double f = 1.0L;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

long double binomial(int n, int k) {
  if (k < 0 || k > n) return 0.0L;
  return factorial(n) / (factorial(k) * factorial(n - k));
}

// R_{nl}(r) = exp(-r/n) * sum_m coef[m] r^(l+m).
std::vector<long double> radial_poly(int n, int l) {
  if (n < 1 || l < 0 || l >= n || n > 12)
    throw ParameterError("radial_poly: unsupported (n, l)");
  int p = n - l - 1;
  int a = 2 * l + 1;
  long double x = 2.0L / n;
  long double norm = std::sqrt(x * x * x * factorial(p) /
                               (2.0L * n * factorial(n + l)));
  std::vector<long double> c(p + 1);
  for (int m = 0; m <= p; ++m) {
    long double lag = ((m % 2) ? -1.0L : 1.0L) * binomial(p + a, p - m) /
                      factorial(m);
    c[m] = norm * lag * std::pow(x, l + m);
  }
  return c;
}

std::string fmt17(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

}  // namespace

double SpectrumTable::strength_sum() const {
  double s = 0.0;
  for (const auto& l : lines) s += l.strength;
  return s;
}

double SpectrumTable::inverse_moment() const {
  double s = 0.0;
  for (const auto& l : lines) s += l.strength / l.delta_e;
  return s;
}

double bound_strength(int n) {
  if (n < 2) throw ParameterError("bound_strength requires n >= 2");
  double dn = n;
  double logs = std::log(256.0 / 3.0) + 7.0 * std::log(dn) +
                (2.0 * dn - 5.0) * std::log(dn - 1.0) -
                (2.0 * dn + 5.0) * std::log(dn + 1.0);
  return std::exp(logs);
}

double continuum_df_de(double k) {
  if (!(k > 0)) return 256.0 / 3.0 * std::exp(-4.0);
  double ratio = std::atan(k) / k;
  double kk = 1.0 + k * k;
  return 256.0 / 3.0 * std::exp(-4.0 * ratio) /
         (kk * kk * kk * kk * (-std::expm1(-2.0 * kPi / k)));
}

double ground_moment() {
  // <r^2>_{1s} / 3 from the exact radial integral.
  return radial_integral(1, 0, 1, 0, 2) / 3.0;
}

SpectrumTable build_spectrum(int n_max, int continuum_bins,
                             double k_max_continuum) {
  if (n_max < 2) throw ParameterError("build_spectrum requires n_max >= 2");
  if (continuum_bins < 0)
    throw ParameterError("build_spectrum requires continuum_bins >= 0");
  if (continuum_bins > 0 && !(k_max_continuum > 0))
    throw ParameterError("build_spectrum requires k_max_continuum > 0");
  SpectrumTable t;
  t.n_max = n_max;
  t.continuum_bins = continuum_bins;
  t.k_max_continuum = continuum_bins > 0 ? k_max_continuum : 0.0;
  t.moment_x2 = ground_moment();
  for (int n = 2; n <= n_max; ++n)
    t.lines.push_back({"n=" + std::to_string(n), bound_gap(n), bound_strength(n)});

  if (continuum_bins > 0) {
    double s = 0.0, inv = 0.0;
    int n = n_max + 1;
    for (; n <= kRydbergSumLimit; ++n) {
      double sn = bound_strength(n);
      s += sn;
      inv += sn / bound_gap(n);
    }
    // S_n ~ A n^-3 beyond the explicit sum.
    double a = bound_strength(n - 1) * std::pow(double(n - 1), 3);
    double rest = a / (2.0 * (n - 0.5) * (n - 0.5));
    s += rest;
    inv += rest / 0.5;
    t.lines.push_back({"n>" + std::to_string(n_max), s / inv, s});

    double dk = k_max_continuum / continuum_bins;
    for (int b = 0; b < continuum_bins; ++b) {
      double k = (b + 0.5) * dk;
      double de = 0.5 + 0.5 * k * k;
      double ds_dk = continuum_df_de(k) * k / (2.0 * de);
      t.lines.push_back({"k" + std::to_string(b), de, ds_dk * dk});
    }
  }
  std::stable_sort(t.lines.begin(), t.lines.end(),
                   [](const SpectralLine& a, const SpectralLine& b) {
                     return a.delta_e < b.delta_e;
                   });
  return t;
}

double static_polarizability(const SpectrumTable& table) {
  return 2.0 * table.inverse_moment();
}

SpectrumTable apply_cutoff(const SpectrumTable& table, double e_max) {
  if (!(e_max > table.e0))
    throw ParameterError("apply_cutoff requires e_max above the ground energy");
  SpectrumTable out = table;
  out.lines.clear();
  for (const auto& l : table.lines)
    if (table.e0 + l.delta_e <= e_max) out.lines.push_back(l);
  out.cutoff_applied = std::min(table.cutoff_applied, e_max);
  return out;
}

void write_spectrum_csv(const SpectrumTable& table, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write '" + path + "'");
  out << "# n_max = " << table.n_max << "\n"
      << "# continuum_bins = " << table.continuum_bins << "\n"
      << "# k_max_continuum = " << fmt17(table.k_max_continuum) << "\n"
      << "# moment_x2 = " << fmt17(table.moment_x2) << "\n";
  if (table.cutoff_applied < kInf)
    out << "# e_max = " << fmt17(table.cutoff_applied) << "\n";
  out << "label,delta_e_hartree,strength_aB2\n";
  for (const auto& l : table.lines)
    out << l.label << "," << fmt17(l.delta_e) << "," << fmt17(l.strength)
        << "\n";
}

SpectrumTable read_spectrum_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read '" + path + "'");
  SpectrumTable t;
  t.moment_x2 = ground_moment();
  std::string line;
  bool header = false;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line[0] == '#') {
      auto eq = line.find('=');
      if (eq == std::string::npos) continue;
      std::string key = line.substr(1, eq - 1);
      key.erase(0, key.find_first_not_of(' '));
      key.erase(key.find_last_not_of(' ') + 1);
      double v = std::stod(line.substr(eq + 1));
      if (key == "n_max") t.n_max = int(v);
      else if (key == "continuum_bins") t.continuum_bins = int(v);
      else if (key == "k_max_continuum") t.k_max_continuum = v;
      else if (key == "moment_x2") t.moment_x2 = v;
      else if (key == "e_max") t.cutoff_applied = v;
      continue;
    }
    if (!header) {
      header = true;
      if (line.rfind("label,", 0) == 0) continue;
    }
    std::stringstream ss(line);
    std::string lab, de, st;
    if (!std::getline(ss, lab, ',') || !std::getline(ss, de, ',') ||
        !std::getline(ss, st))
      throw IoError("malformed spectrum row: '" + line + "'");
    SpectralLine l{lab, std::stod(de), std::stod(st)};
    if (!(l.delta_e > 0) || !(l.strength >= 0))
      throw IoError("invalid spectrum row: '" + line + "'");
    t.lines.push_back(l);
  }
  std::stable_sort(t.lines.begin(), t.lines.end(),
                   [](const SpectralLine& a, const SpectralLine& b) {
                     return a.delta_e < b.delta_e;
                   });
  return t;
}

double radial_integral(int n, int l, int n2, int l2, int power) {
  auto c1 = radial_poly(n, l);
  auto c2 = radial_poly(n2, l2);
  long double s = 1.0L / n + 1.0L / n2;
  long double acc = 0.0L;
  for (std::size_t i = 0; i < c1.size(); ++i)
    for (std::size_t j = 0; j < c2.size(); ++j) {
      int a = l + l2 + int(i) + int(j) + 2 + power;
      acc += c1[i] * c2[j] * factorial(a) / std::pow(s, a + 1);
    }
  return double(acc);
}

SpectrumTable LevelSystem::ground_table() const {
  SpectrumTable t;
  t.e0 = energy.at(0);
  t.moment_x2 = 0.0;
  for (std::size_t j = 1; j < size(); ++j) {
    t.lines.push_back({"level" + std::to_string(j), energy[j] - energy[0],
                       pair_strength[0][j] / degeneracy[0]});
    t.moment_x2 += t.lines.back().strength;
  }
  return t;
}

LevelSystem hydrogen_levels(int n_top) {
  if (n_top < 1 || n_top > 5)
    throw ParameterError("hydrogen_levels supports 1 <= n <= 5");
  LevelSystem s;
  s.pair_strength.assign(n_top, std::vector<double>(n_top, 0.0));
  for (int n = 1; n <= n_top; ++n) {
    s.energy.push_back(-0.5 / (double(n) * n));
    s.degeneracy.push_back(double(n) * n);
  }
  for (int n = 1; n <= n_top; ++n)
    for (int m = 1; m <= n_top; ++m) {
      double w = 0.0;
      for (int l = 0; l < n; ++l)
        for (int l2 : {l - 1, l + 1}) {
          if (l2 < 0 || l2 >= m) continue;
          double r = radial_integral(n, l, m, l2, 1);
          w += std::max(l, l2) / 3.0 * r * r;
        }
      s.pair_strength[n - 1][m - 1] = w;
    }
  return s;
}

LevelSystem hydrogen_levels_below(double e_max) {
  int top = 0;
  for (int n = 1; n <= 5; ++n)
    if (-0.5 / (double(n) * n) <= e_max) top = n;
  if (top < 1) throw ParameterError("e_max excludes the ground state");
  return hydrogen_levels(top);
}

LevelSystem two_level_system(double gap, double strength) {
  if (!(gap > 0) || !(strength >= 0))
    throw ParameterError("two_level_system requires gap > 0, strength >= 0");
  LevelSystem s;
  s.energy = {0.0, gap};
  s.degeneracy = {1.0, 1.0};
  s.pair_strength = {{0.0, strength}, {strength, 0.0}};
  return s;
}

}  // namespace atomwall
