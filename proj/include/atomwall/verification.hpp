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

#ifndef ATOMWALL_VERIFICATION_HPP
#define ATOMWALL_VERIFICATION_HPP

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "atomwall/units.hpp"

namespace atomwall {

struct CheckRecord {
  std::string group;
  std::string name;
  double expected;
  double observed;
  double tolerance;  // absolute bound on |observed - expected|
  double sigma;      // Monte Carlo standard error, 0 for deterministic checks
  bool passed;
};

struct SuiteOptions {
  std::vector<std::string> only;  // empty runs every group
  std::uint64_t seed = 20260101;
  int n_paths = 100000;
  int threads = 0;
};

// propagator, spectrum, kernel, potential, screening, fk, regimes.
const std::vector<std::string>& verification_groups();

// Throws ParameterError for an unknown group name.
std::vector<CheckRecord> run_verification(const PhysicalConfig& cfg,
                                          const SuiteOptions& opt);

bool all_passed(const std::vector<CheckRecord>& records);
void write_report_text(std::ostream& os, const std::vector<CheckRecord>& records);
void write_report_csv(std::ostream& os, const std::vector<CheckRecord>& records);

}  // namespace atomwall

#endif
