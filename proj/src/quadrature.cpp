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

#include "atomwall/quadrature.hpp"

#include <gsl/gsl_integration.h>
#include <gsl/gsl_sf_bessel.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <memory>
#include <mutex>
#include <queue>

#include "atomwall/errors.hpp"

namespace atomwall {

namespace {

constexpr int kFilonOrder = 24;

struct Panel {
  double a, b;
  std::complex<double> value;
  double err;
  double noise;  // rounding floor of err
  bool operator<(const Panel& o) const { return err < o.err; }
};

// Legendre projections at the Gauss nodes, P_l(t_i) * w_i * (2l+1)/2.
struct Projector {
  std::vector<double> t;
  std::vector<std::vector<double>> proj;  // [l][i]
};

const Projector& projector() {
  static const Projector p = [] {
    Projector q;
    const auto& g = gauss_legendre(kFilonOrder);
    q.t = g.nodes;
    q.proj.assign(kFilonOrder, std::vector<double>(kFilonOrder));
    for (int i = 0; i < kFilonOrder; ++i) {
      double t = g.nodes[i], p0 = 1.0, p1 = t;
      for (int l = 0; l < kFilonOrder; ++l) {
        double pl;
        if (l == 0) pl = p0;
        else if (l == 1) pl = p1;
        else {
          pl = ((2.0 * l - 1.0) * t * p1 - (l - 1.0) * p0) / l;
          p0 = p1;
          p1 = pl;
        }
        q.proj[l][i] = pl * g.weights[i] * (2.0 * l + 1.0) / 2.0;
      }
    }
    return q;
  }();
  return p;
}

Panel eval_panel(const ComplexFn& amp, double omega, double a, double b) {
  const auto& pr = projector();
  double m = 0.5 * (a + b), h = 0.5 * (b - a);
  std::complex<double> f[kFilonOrder];
  for (int i = 0; i < kFilonOrder; ++i) f[i] = amp(m + h * pr.t[i]);
  std::complex<double> c[kFilonOrder];
  for (int l = 0; l < kFilonOrder; ++l) {
    std::complex<double> s = 0.0;
    for (int i = 0; i < kFilonOrder; ++i) s += pr.proj[l][i] * f[i];
    c[l] = s;
  }
  double theta = omega * h;
  double jl[kFilonOrder];
  spherical_bessel_array(kFilonOrder - 1, std::fabs(theta), jl);
  // int_{-1}^{1} P_l(t) e^{i theta t} dt = 2 i^l j_l(theta)
  std::complex<double> acc = 0.0;
  std::complex<double> il = 1.0;
  const std::complex<double> iu(0.0, theta >= 0 ? 1.0 : -1.0);
  for (int l = 0; l < kFilonOrder; ++l) {
    acc += c[l] * (2.0 * jl[l]) * il;
    il *= iu;
  }
  Panel p;
  p.a = a;
  p.b = b;
  p.value = h * std::polar(1.0, omega * m) * acc;
  double tail = std::abs(c[kFilonOrder - 1]) + std::abs(c[kFilonOrder - 2]) +
                std::abs(c[kFilonOrder - 3]);
  p.err = 2.0 * h * tail;
  double size = 0.0;
  for (int l = 0; l < kFilonOrder; ++l) size += std::abs(c[l]);
  p.noise = 2.0 * h * 64.0 * std::numeric_limits<double>::epsilon() * size;
  return p;
}

}  // namespace

const GaussRule& gauss_legendre(int n) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<GaussRule>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[n];
  if (!slot) {
    if (n < 1) throw ParameterError("gauss_legendre requires n >= 1");
    auto rule = std::make_unique<GaussRule>();
    gsl_integration_glfixed_table* t = gsl_integration_glfixed_table_alloc(n);
    for (int i = 0; i < n; ++i) {
      double x, w;
      gsl_integration_glfixed_point(-1.0, 1.0, i, &x, &w, t);
      rule->nodes.push_back(x);
      rule->weights.push_back(w);
    }
    gsl_integration_glfixed_table_free(t);
    slot = std::move(rule);
  }
  return *slot;
}

void spherical_bessel_array(int lmax, double x, double* out) {
  if (x > lmax + 1.0) {
    // Upward recurrence is stable for x > l.
    double s = std::sin(x), c = std::cos(x);
    out[0] = s / x;
    if (lmax >= 1) out[1] = s / (x * x) - c / x;
    for (int l = 2; l <= lmax; ++l)
      out[l] = (2.0 * l - 1.0) / x * out[l - 1] - out[l - 2];
    return;
  }
  if (x == 0.0) {
    out[0] = 1.0;
    for (int l = 1; l <= lmax; ++l) out[l] = 0.0;
    return;
  }
  gsl_sf_bessel_jl_steed_array(lmax, x, out);
}

OscillatoryResult filon_integrate(const ComplexFn& amp, double omega,
                                  const std::vector<double>& edges,
                                  double abs_tol, int max_panels) {
  OscillatoryResult r;
  if (edges.size() < 2) return r;
  std::priority_queue<Panel> heap;
  std::complex<double> total = 0.0;
  double err = 0.0, noise = 0.0;
  for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
    if (!(edges[i + 1] > edges[i])) continue;
    Panel p = eval_panel(amp, omega, edges[i], edges[i + 1]);
    total += p.value;
    err += p.err;
    noise += p.noise;
    heap.push(p);
  }
  int count = int(heap.size());
  while (err > std::max(abs_tol, noise) && count < max_panels && !heap.empty()) {
    Panel worst = heap.top();
    heap.pop();
    double mid = 0.5 * (worst.a + worst.b);
    if (!(mid > worst.a && mid < worst.b)) {
      // Panel cannot be split further in floating point.
      heap.push(worst);
      break;
    }
    Panel l = eval_panel(amp, omega, worst.a, mid);
    Panel u = eval_panel(amp, omega, mid, worst.b);
    total += l.value + u.value - worst.value;
    err += l.err + u.err - worst.err;
    noise += l.noise + u.noise - worst.noise;
    heap.push(l);
    heap.push(u);
    ++count;
  }
  // Recompute sums from the final panel set to shed accumulated rounding.
  total = 0.0;
  err = 0.0;
  noise = 0.0;
  std::vector<Panel> all;
  while (!heap.empty()) {
    all.push_back(heap.top());
    heap.pop();
  }
  std::sort(all.begin(), all.end(),
            [](const Panel& a, const Panel& b) { return a.a < b.a; });
  for (const auto& p : all) {
    total += p.value;
    err += p.err;
    noise += p.noise;
  }
  r.value = total;
  r.abs_err = err;
  r.panels = count;
  r.converged = err <= std::max(abs_tol, noise);
  return r;
}

}  // namespace atomwall
