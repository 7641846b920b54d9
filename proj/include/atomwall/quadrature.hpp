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

#ifndef ATOMWALL_QUADRATURE_HPP
#define ATOMWALL_QUADRATURE_HPP

#include <complex>
#include <functional>
#include <vector>

namespace atomwall {

struct GaussRule {
  std::vector<double> nodes;    // on [-1, 1]
  std::vector<double> weights;
};

// Cached Gauss-Legendre rule with n points.
const GaussRule& gauss_legendre(int n);

// Spherical Bessel j_0..j_lmax at x >= 0.
void spherical_bessel_array(int lmax, double x, double* out);

using ComplexFn = std::function<std::complex<double>(double)>;

struct OscillatoryResult {
  std::complex<double> value;
  double abs_err = 0.0;
  int panels = 0;
  bool converged = true;
};

// Adaptive Filon-Legendre rule for int_{edges.front()}^{edges.back()}
// amp(k) exp(i omega k) dk. The amplitude is interpolated on each panel by
// a Legendre expansion and the oscillatory moments are taken exactly.
// Panels are bisected, largest error first, until the summed error estimate
// falls below max(abs_tol, rounding floor) or max_panels is reached.
OscillatoryResult filon_integrate(const ComplexFn& amp, double omega,
                                  const std::vector<double>& edges,
                                  double abs_tol, int max_panels = 4000);

}  // namespace atomwall

#endif
