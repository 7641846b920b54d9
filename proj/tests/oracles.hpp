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

#ifndef ATOMWALL_TESTS_ORACLES_HPP
#define ATOMWALL_TESTS_ORACLES_HPP

// Reference computations used only by the tests. None of them call into the
// library's numerics; they use GSL special functions and plain composite
// Gauss-Legendre rules so that agreement is evidence, not tautology.

#include <functional>

namespace oracle {

// Composite Gauss-Legendre over [a, b] with `panels` equal panels.
double integrate(const std::function<double(double)>& f, double a, double b,
                 int panels, int order = 20);

// Q(u, s) from the hyperbolic form (u/2) cosh(u(1/2 - s)) / sinh(u/2).
double propagator(double u, double s);

// Hydrogen radial function R_{nl}(r) from associated Laguerre polynomials.
double radial_wavefunction(int n, int l, double r);

// Summed |<1s|x|np>|^2 from a numerical radial integral.
double dipole_strength(int n);

// 2 sum_{n=2}^{n_max} dipole_strength(n) / (1/2 - 1/(2n^2)).
double bound_polarizability(int n_max);

// int |R_10|^2 r^4 dr.
double ground_r2();

// Static polarizability from the first-order perturbed wavefunction, solved
// on a radial finite-difference grid and Richardson-extrapolated.
double dalgarno_lewis_polarizability();

// 2 int_0^1 ds int_0^s dt <a_x(s) a_x(t)> Q(u, s - t) for one line of gap
// `gap` and strength `strength` at inverse temperature beta, with the
// triangle covered by a tensor rule.
double two_level_kernel(double k, double beta, double c, double gap,
                        double strength);

// 4 pi int d^3k/(2 pi)^3 cos(2 k_x x) (k_x^2/k^2) B(|k|) in cylindrical
// coordinates, both integrals done numerically up to |k| <= k_max.
double direct_transform(const std::function<double(double)>& b, double x,
                        double k_max);

// Abel-regularized int_0^inf y^2 b/(b+y) w(y) dy via
// -2b + b^3 int_0^inf w(y)/(b+y) dy.
double tail_moment(double b);

// (1/pi) int_{k_c/2}^inf k^2 (g(k) - 1) w(2 k x) dk with the window done by
// Gauss-Legendre and the region beyond k_c in closed form.
double taper_correction(const std::function<double(double)>& g, double x,
                        double k_cut);

// int_0^1 int_0^1 a(s) C(s,t) a(t) on an n x n midpoint grid.
double quadratic_form(const std::function<double(double)>& a,
                      const std::function<double(double, double)>& cov, int n);

// Oscillator-process covariance (e^{-b(1-s)} + e^{-b s}) / (2b(1 - e^{-b})).
double oscillator_cov(double beta_eps, double s, double t);

}  // namespace oracle

#endif
