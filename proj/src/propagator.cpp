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

#include "atomwall/propagator.hpp"

#include <cmath>

#include "atomwall/errors.hpp"

namespace atomwall {

namespace {
constexpr double kSmallU = 1e-8;

double reduce_unit(double s) {
  double r = s - std::floor(s);
  return r >= 1.0 ? 0.0 : r;
}
}  // namespace

double q_propagator(double u, double s) {
  if (!(u >= 0)) throw DomainError("q_propagator requires u >= 0");
  double sb = reduce_unit(s);
  if (u < kSmallU) {
    double d = 0.5 - sb;
    return 1.0 + u * u * (0.5 * d * d - 1.0 / 24.0);
  }
  // Factor out exp(-u*m), m = distance to the nearest period edge.
  double m = std::min(sb, 1.0 - sb);
  double num = std::exp(-u * m) * (1.0 + std::exp(-u * (1.0 - 2.0 * m)));
  return 0.5 * u * num / (-std::expm1(-u));
}

double oscillator_covariance(double beta_eps, double s) {
  if (!(beta_eps > 0))
    throw DomainError("oscillator_covariance requires beta_eps > 0");
  if (!(s >= 0.0 && s <= 1.0))
    throw DomainError("oscillator_covariance requires s in [0, 1]");
  double m = std::min(s, 1.0 - s);
  double num = std::exp(-beta_eps * m) *
               (1.0 + std::exp(-beta_eps * (1.0 - 2.0 * m)));
  return num / (2.0 * beta_eps * (-std::expm1(-beta_eps)));
}

double q_cell_average(double u, double s0, double s1) {
  if (!(u >= 0)) throw DomainError("q_cell_average requires u >= 0");
  double h = s1 - s0;
  if (!(h > 0)) return q_propagator(u, s0);
  if (u < kSmallU) {
    // Cell mean of 0.5*(0.5-s)^2 - 1/24.
    auto c3 = [](double s) { double d = 0.5 - s; return -d * d * d / 6.0; };
    return 1.0 + u * u * ((c3(s1) - c3(s0)) / h - 1.0 / 24.0);
  }
  double e = -std::expm1(-u * h);
  double a = std::exp(-u * (1.0 - s1)) * e;
  double b = std::exp(-u * s0) * e;
  return 0.5 * (a + b) / (-std::expm1(-u)) / h;
}

}  // namespace atomwall
