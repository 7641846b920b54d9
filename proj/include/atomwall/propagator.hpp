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

#ifndef ATOMWALL_PROPAGATOR_HPP
#define ATOMWALL_PROPAGATOR_HPP

namespace atomwall {

// Normalized periodic imaginary-time photon propagator; u = lambda_ph * k.
double q_propagator(double u, double s);

// Covariance of the periodic oscillator process at reduced energy beta*eps.
double oscillator_covariance(double beta_eps, double s);

// Exact average of q_propagator(u, .) over the interval [s0, s1], 0 <= s0 <= s1 <= 1.
double q_cell_average(double u, double s0, double s1);

}  // namespace atomwall

#endif
