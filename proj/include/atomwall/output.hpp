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

#ifndef ATOMWALL_OUTPUT_HPP
#define ATOMWALL_OUTPUT_HPP

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "atomwall/kernel.hpp"
#include "atomwall/potential.hpp"
#include "atomwall/units.hpp"

namespace atomwall {

std::string_view tool_version();

struct RunManifest {
  std::string command;
  PhysicalConfig config;
  int n_max = 0;
  int continuum_bins = 0;
  std::uint64_t seed = 0;
  std::string version;
  std::string timestamp;  // UTC, ISO 8601
};

// Honors SOURCE_DATE_EPOCH so that reruns can be byte-identical.
std::string current_timestamp();
RunManifest make_manifest(std::string command, const PhysicalConfig& cfg,
                          int n_max, int continuum_bins);

// '#'-prefixed header lines.
void write_manifest(std::ostream& os, const RunManifest& m);

void write_curve_csv(std::ostream& os, const PotentialCurve& curve,
                     const RunManifest& m);
// Throws IoError.
void write_curve_csv(const std::string& path, const PotentialCurve& curve,
                     const RunManifest& m);

enum class KernelBranch { General, LowTemp };

// Columns k_aB_inv, B_aB2, branch. The general branch needs p.e_max and
// throws CutoffRequired without it.
void write_kernel_csv(std::ostream& os, const KernelParams& p,
                      const std::vector<double>& ks, KernelBranch branch,
                      const RunManifest& m);
// Throws IoError.
void write_kernel_csv(const std::string& path, const KernelParams& p,
                      const std::vector<double>& ks, KernelBranch branch,
                      const RunManifest& m);

// Gnuplot script drawing |phi| against x with the characteristic lengths.
std::string plot_script(const std::string& csv_name, const PhysicalConfig& cfg);
// Sibling path: "out.csv" -> "out.gp".
std::string plot_script_path(const std::string& csv_path);

}  // namespace atomwall

#endif
