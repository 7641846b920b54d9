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

#include "atomwall/verifier.hpp"

#include <Eigen/Cholesky>
#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <thread>

#include "atomwall/errors.hpp"
#include "atomwall/propagator.hpp"
#include "atomwall/rng.hpp"
#include "atomwall/units.hpp"

namespace atomwall {

double pairwise_sum(const double* v, std::size_t n) {
  if (n <= 16) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += v[i];
    return s;
  }
  std::size_t h = n / 2;
  return pairwise_sum(v, h) + pairwise_sum(v + h, n - h);
}

namespace {

int thread_count(int requested, int work) {
  int t = requested > 0 ? requested
                        : int(std::max(1u, std::thread::hardware_concurrency()));
  return std::max(1, std::min(t, work));
}

// Calls fn(i) for i in [0, n) on strided worker threads.
template <class Fn>
void parallel_for(int n, int threads, Fn fn) {
  int t = thread_count(threads, n);
  if (t == 1) {
    for (int i = 0; i < n; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  for (int w = 0; w < t; ++w)
    pool.emplace_back([&, w] {
      for (int i = w; i < n; i += t) fn(i);
    });
  for (auto& th : pool) th.join();
}

MomentEstimate mean_and_error(const std::vector<double>& v) {
  double n = double(v.size());
  double mean = pairwise_sum(v) / n;
  std::vector<double> d(v.size());
  for (std::size_t i = 0; i < v.size(); ++i)
    d[i] = (v[i] - mean) * (v[i] - mean);
  double var = pairwise_sum(d) / (n - 1.0);
  return {mean, std::sqrt(var / n)};
}

}  // namespace

BridgeEnsemble sample_bridges(int n_paths, int n_steps, std::uint64_t seed,
                              int threads) {
  if (n_steps < 2) throw ParameterError("sample_bridges requires n_steps >= 2");
  if (n_paths < 1) throw ParameterError("sample_bridges requires n_paths >= 1");
  BridgeEnsemble e;
  e.n_paths = n_paths;
  e.n_steps = n_steps;
  e.seed = seed;
  std::size_t stride = std::size_t(n_steps + 1) * 3;
  e.paths.assign(std::size_t(n_paths) * stride, 0.0);
  double h = 1.0 / n_steps;
  parallel_for(n_paths, threads, [&](int p) {
    CounterRng rng(seed, std::uint64_t(p));
    double* path = e.paths.data() + std::size_t(p) * stride;
    for (int c = 0; c < 3; ++c) {
      double prev = 0.0;
      for (int i = 1; i < n_steps; ++i) {
        // Condition on xi(s_{i-1}) and the pinned end xi(1) = 0.
        double rest_prev = 1.0 - (i - 1) * h;
        double rest = 1.0 - i * h;
        double mean = prev * rest / rest_prev;
        double var = h * rest / rest_prev;
        prev = mean + std::sqrt(var) * rng.normal();
        path[i * 3 + c] = prev;
      }
    }
  });
  return e;
}

MomentEstimate bridge_covariance(const BridgeEnsemble& e, int i, int j,
                                 int comp) {
  std::vector<double> v(e.n_paths);
  for (int p = 0; p < e.n_paths; ++p) v[p] = e.at(p, i, comp) * e.at(p, j, comp);
  return mean_and_error(v);
}

MomentEstimate bridge_mean(const BridgeEnsemble& e, int i, int comp) {
  std::vector<double> v(e.n_paths);
  for (int p = 0; p < e.n_paths; ++p) v[p] = e.at(p, i, comp);
  return mean_and_error(v);
}

GaussianIdentityReport gaussian_identity_check(const TestFunction& a,
                                               const CovarianceFn& cov,
                                               int n_paths, std::uint64_t seed,
                                               int n_grid, int threads) {
  if (n_grid < 1 || n_paths < 2)
    throw ParameterError("gaussian_identity_check needs n_grid >= 1, n_paths >= 2");
  double h = 1.0 / n_grid;
  Eigen::MatrixXd c(n_grid, n_grid);
  Eigen::VectorXd av(n_grid);
  for (int i = 0; i < n_grid; ++i) {
    double si = (i + 0.5) * h;
    av(i) = a(si) * h;
    for (int j = 0; j < n_grid; ++j) c(i, j) = cov(si, (j + 0.5) * h);
  }
  if (!c.isApprox(c.transpose(), 1e-12))
    throw CovarianceNotPSD("covariance matrix is not symmetric");
  Eigen::LLT<Eigen::MatrixXd> llt(c);
  if (llt.info() != Eigen::Success)
    throw CovarianceNotPSD("covariance matrix is not positive definite");
  Eigen::MatrixXd l = llt.matrixL();
  // Projection of the test function onto the sampling factor: the phase is
  // a.R = (L^T a).z with z standard normal.
  Eigen::VectorXd proj = l.transpose() * av;

  std::vector<double> samples(n_paths);
  parallel_for(n_paths, threads, [&](int p) {
    CounterRng rng(seed, std::uint64_t(p));
    double phase = 0.0;
    for (int i = 0; i < n_grid; ++i) phase += proj(i) * rng.normal();
    samples[p] = std::cos(phase);
  });
  auto m = mean_and_error(samples);
  GaussianIdentityReport r;
  r.lhs = m.mean;
  r.std_err = m.std_err;
  r.rhs = std::exp(-0.5 * av.dot(c * av));
  r.deviation = std::fabs(r.lhs - r.rhs);
  r.n_grid = n_grid;
  r.passed = r.deviation <= 3.0 * r.std_err || r.deviation == 0.0;
  return r;
}

ProcessCovarianceReport oscillator_process_check(double beta_eps, int n_paths,
                                                 std::uint64_t seed, int n_grid,
                                                 int threads) {
  if (!(beta_eps > 0.0)) throw DomainError("oscillator process needs beta*eps > 0");
  double h = 1.0 / n_grid;
  Eigen::MatrixXd c(n_grid, n_grid);
  for (int i = 0; i < n_grid; ++i)
    for (int j = 0; j < n_grid; ++j)
      c(i, j) = oscillator_covariance(beta_eps, std::fabs(i - j) * h);
  Eigen::LLT<Eigen::MatrixXd> llt(c);
  if (llt.info() != Eigen::Success)
    throw CovarianceNotPSD("oscillator covariance is not positive definite");
  Eigen::MatrixXd l = llt.matrixL();
  std::vector<int> lags = {0, n_grid / 4, n_grid / 2};
  std::vector<std::vector<double>> prod(lags.size(), std::vector<double>(n_paths));
  parallel_for(n_paths, threads, [&](int p) {
    CounterRng rng(seed, std::uint64_t(p));
    Eigen::VectorXd z(n_grid);
    for (int i = 0; i < n_grid; ++i) z(i) = rng.normal();
    Eigen::VectorXd r = l * z;
    for (std::size_t k = 0; k < lags.size(); ++k) prod[k][p] = r(0) * r(lags[k]);
  });
  ProcessCovarianceReport rep{0.0, 0.0, true};
  for (std::size_t k = 0; k < lags.size(); ++k) {
    auto m = mean_and_error(prod[k]);
    double d = std::fabs(m.mean - c(0, lags[k]));
    rep.max_abs = std::max(rep.max_abs, d);
    rep.max_sigma = std::max(rep.max_sigma, d / m.std_err);
  }
  rep.passed = rep.max_sigma <= 3.0;
  return rep;
}

double coupled_oscillator_exact(const ModeSpec& mode, double omega_trap,
                                double beta) {
  if (!(mode.eps > 0.0)) throw DomainError("mode energy must be positive");
  if (!(omega_trap > 0.0) || !(beta > 0.0))
    throw DomainError("trap frequency and beta must be positive");
  double a = mode.coupling * mode.f_const * std::sqrt(2.0 * mode.eps);
  // Quadratic form in (q, X, p, P).
  Eigen::Matrix4d hess = Eigen::Matrix4d::Zero();
  hess(0, 0) = omega_trap * omega_trap;
  hess(1, 1) = a * a + mode.eps * mode.eps;
  hess(2, 2) = 1.0;
  hess(3, 3) = 1.0;
  hess(1, 2) = hess(2, 1) = -a;
  Eigen::Matrix4d j = Eigen::Matrix4d::Zero();
  j(0, 2) = j(1, 3) = 1.0;
  j(2, 0) = j(3, 1) = -1.0;
  Eigen::EigenSolver<Eigen::Matrix4d> es(j * hess, false);
  std::vector<double> freq;
  for (int i = 0; i < 4; ++i) {
    double im = es.eigenvalues()(i).imag();
    if (im > 0.0) freq.push_back(im);
  }
  if (freq.size() != 2) throw DomainError("coupled system is not stable");
  double log_w = std::log(2.0 * std::sinh(0.5 * beta * mode.eps));
  for (double w : freq) log_w -= std::log(2.0 * std::sinh(0.5 * beta * w));
  return std::exp(log_w);
}

double coupled_oscillator_path(const ModeSpec& mode, double omega_trap,
                               double beta, int n_steps) {
  if (!(mode.eps > 0.0)) throw DomainError("mode energy must be positive");
  if (n_steps < 2) throw ParameterError("n_steps must be >= 2");
  const int n = n_steps;
  const double h = 1.0 / n;
  const double lam = std::sqrt(beta);
  const double g = mode.coupling * mode.f_const;
  // Variables (q, xi_1 .. xi_{n-1}); exponent -z.M.z / 2.
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
  for (int i = 1; i < n; ++i) {
    m(i, i) += 2.0 * n;
    if (i + 1 < n) m(i, i + 1) = m(i + 1, i) = -double(n);
  }
  // Trapezoidal potential term, beta omega^2 / 2 sum_i h (q + lam xi_i)^2.
  double vw = beta * omega_trap * omega_trap;
  m(0, 0) += vw;
  for (int i = 1; i < n; ++i) {
    m(0, i) += vw * lam * h;
    m(i, 0) += vw * lam * h;
    m(i, i) += vw * beta * h;
  }
  if (g != 0.0) {
    // (g^2 / eps) sum_ij dxi_i dxi_j Q(s_i - s_j) with dxi_i = xi_{i+1} - xi_i,
    // the propagator taken between cell midpoints.
    std::vector<double> qk(n);
    for (int k = 0; k < n; ++k) qk[k] = q_propagator(beta * mode.eps, k * h);
    Eigen::MatrixXd cq(n, n);
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k) cq(i, k) = qk[std::abs(i - k)];
    Eigen::MatrixXd d = Eigen::MatrixXd::Zero(n, n - 1);
    for (int i = 0; i < n; ++i) {
      if (i + 1 <= n - 1) d(i, i) += 1.0;  // xi_{i+1}
      if (i >= 1) d(i, i - 1) -= 1.0;       // xi_i
    }
    m.bottomRightCorner(n - 1, n - 1) +=
        (2.0 * g * g / mode.eps) * d.transpose() * cq * d;
  }
  Eigen::LLT<Eigen::MatrixXd> llt(m);
  if (llt.info() != Eigen::Success)
    throw CovarianceNotPSD("path-integral quadratic form is not positive definite");
  double logdet = 0.0;
  Eigen::MatrixXd l = llt.matrixL();
  for (int i = 0; i < n; ++i) logdet += 2.0 * std::log(l(i, i));
  // Bridge normalization det(n tridiag(2,-1)) = n^n.
  return std::exp(0.5 * n * std::log(double(n)) - 0.5 * logdet) / lam;
}

CoupledOscillatorReport coupled_oscillator_check(const ModeSpec& mode,
                                                 double omega_trap, double beta,
                                                 int n_steps) {
  CoupledOscillatorReport r;
  r.exact = coupled_oscillator_exact(mode, omega_trap, beta);
  r.path = coupled_oscillator_path(mode, omega_trap, beta, n_steps);
  r.deviation = std::fabs(r.path / r.exact - 1.0);
  r.free_trap = 1.0 / (2.0 * std::sinh(0.5 * beta * omega_trap));
  r.n_steps = n_steps;
  return r;
}

ConvergenceReport coupled_oscillator_convergence(const ModeSpec& mode,
                                                 double omega_trap, double beta,
                                                 const std::vector<int>& n_steps) {
  if (n_steps.size() < 2) throw ParameterError("need at least two grids");
  ConvergenceReport r;
  r.n_steps = n_steps;
  double exact = coupled_oscillator_exact(mode, omega_trap, beta);
  std::vector<double> path;
  for (int n : n_steps) {
    path.push_back(coupled_oscillator_path(mode, omega_trap, beta, n));
    r.deviations.push_back(std::fabs(path.back() / exact - 1.0));
  }
  for (std::size_t i = 1; i < n_steps.size(); ++i) {
    double ratio = double(n_steps[i]) / n_steps[i - 1];
    r.slopes.push_back(std::log(r.deviations[i - 1] / r.deviations[i]) /
                       std::log(ratio));
  }
  r.order = r.slopes.back();
  std::size_t k = n_steps.size() - 1;
  double q = std::pow(double(n_steps[k]) / n_steps[k - 1], 2.0);
  r.extrapolated = (q * path[k] - path[k - 1]) / (q - 1.0);
  for (double s : r.slopes)
    if (!(s >= 1.5 && s <= 2.5))
      throw DiscretizationError("path-integral deviation does not converge at "
                                "second order (slope " + std::to_string(s) + ")");
  return r;
}

double harmonic_correlation(double omega, double beta, double tau) {
  double t = std::fabs(tau);
  t -= std::floor(t);
  return std::cosh(beta * omega * (0.5 - t)) /
         (2.0 * omega * std::sinh(0.5 * beta * omega));
}

CorrelationReport correlation_check_harmonic(double omega_trap, double beta,
                                             int n_paths, std::uint64_t seed,
                                             int n_slices, int threads) {
  if (!(omega_trap > 0.0) || !(beta > 0.0))
    throw DomainError("trap frequency and beta must be positive");
  if (n_slices < 4) throw ParameterError("n_slices must be >= 4");
  const int n = n_slices;
  const double dt = beta / n;
  // Periodic chain precision (1/dt) circ(2,-1) + dt omega^2.
  Eigen::MatrixXd prec = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    prec(i, i) = 2.0 / dt + dt * omega_trap * omega_trap;
    prec(i, (i + 1) % n) -= 1.0 / dt;
    prec((i + 1) % n, i) -= 1.0 / dt;
  }
  Eigen::LLT<Eigen::MatrixXd> llt(prec);
  if (llt.info() != Eigen::Success)
    throw CovarianceNotPSD("chain precision is not positive definite");
  Eigen::MatrixXd cov = llt.solve(Eigen::MatrixXd::Identity(n, n));
  Eigen::MatrixXd upper = llt.matrixU();

  const int n_lag = n / 2 + 1;
  const int shift = n / 4;
  std::vector<std::vector<double>> avg(n_lag, std::vector<double>(n_paths));
  std::vector<std::vector<double>> diff(n_lag, std::vector<double>(n_paths));
  parallel_for(n_paths, threads, [&](int p) {
    CounterRng rng(seed, std::uint64_t(p));
    Eigen::VectorXd z(n);
    for (int i = 0; i < n; ++i) z(i) = rng.normal();
    // prec = U^T U, so x = U^{-1} z has covariance prec^{-1}.
    Eigen::VectorXd x = upper.triangularView<Eigen::Upper>().solve(z);
    for (int k = 0; k < n_lag; ++k) {
      double s = 0.0;
      for (int i = 0; i < n; ++i) s += x(i) * x((i + k) % n);
      avg[k][p] = s / n;
      diff[k][p] = x(0) * x(k) - x(shift) * x((shift + k) % n);
    }
  });
  CorrelationReport r;
  r.max_deviation = 0.0;
  r.max_sigma = 0.0;
  r.stationarity_sigma = 0.0;
  for (int k = 0; k < n_lag; ++k) {
    auto m = mean_and_error(avg[k]);
    CorrelationPoint pt;
    pt.lag = double(k) / n;
    pt.mc = m.mean;
    pt.std_err = m.std_err;
    pt.exact = harmonic_correlation(omega_trap, beta, pt.lag);
    pt.discrete = cov(0, k);
    double dev = std::fabs(pt.mc - pt.exact);
    r.max_deviation = std::max(r.max_deviation, dev);
    r.max_sigma = std::max(
        r.max_sigma,
        dev / (pt.std_err + std::fabs(pt.discrete - pt.exact)));
    auto d = mean_and_error(diff[k]);
    if (d.std_err > 0.0)
      r.stationarity_sigma =
          std::max(r.stationarity_sigma, std::fabs(d.mean) / d.std_err);
    r.points.push_back(pt);
  }
  r.passed = r.max_sigma <= 4.0 && r.stationarity_sigma <= 4.0;
  return r;
}

double geometric_constraint_deficit(double x, const BridgeEnsemble& ensemble,
                                    const AtomWeight& weight) {
  if (!(x >= 0.0)) throw DomainError("geometric constraint needs x >= 0");
  if (ensemble.n_paths < 1) throw ParameterError("empty bridge ensemble");
  if (std::isinf(x)) return 0.0;
  const int n = ensemble.n_steps;
  const double lam = std::sqrt(weight.beta);
  const double bw2 = weight.beta * weight.omega * weight.omega;
  // Per path, the start point is Gaussian under the harmonic weight and is
  // integrated out exactly.
  std::vector<double> logw(ensemble.n_paths), miss(ensemble.n_paths);
  for (int p = 0; p < ensemble.n_paths; ++p) {
    double s1 = 0.0, s2 = 0.0, lo = 0.0;
    for (int i = 0; i < n; ++i) {
      double v = ensemble.at(p, i, 0);
      s1 += v;
      s2 += v * v;
      lo = std::min(lo, v);
    }
    double mean = s1 / n;
    double var = s2 / n - mean * mean;
    logw[p] = -0.5 * bw2 * lam * lam * var;
    double edge = -x - lam * lo;  // the path stays clear iff start > edge
    miss[p] = 0.5 * std::erfc(-(edge + lam * mean) * std::sqrt(0.5 * bw2));
  }
  double top = *std::max_element(logw.begin(), logw.end());
  std::vector<double> w(ensemble.n_paths), wm(ensemble.n_paths);
  for (int p = 0; p < ensemble.n_paths; ++p) {
    w[p] = std::exp(logw[p] - top);
    wm[p] = w[p] * miss[p];
  }
  return std::clamp(pairwise_sum(wm) / pairwise_sum(w), 0.0, 1.0);
}

double geometric_constraint_estimate(double x, const BridgeEnsemble& ensemble,
                                     const AtomWeight& weight) {
  return 1.0 - geometric_constraint_deficit(x, ensemble, weight);
}

MomentEstimate ground_state_moment_mc(int n_samples, std::uint64_t seed) {
  if (n_samples < 2) throw ParameterError("need at least two samples");
  std::vector<double> v(n_samples);
  for (int i = 0; i < n_samples; ++i) {
    CounterRng rng(seed, std::uint64_t(i));
    // r^2 e^{-2r}: sum of three exponentials of rate 2.
    double r = -0.5 * (std::log(rng.uniform()) + std::log(rng.uniform()) +
                       std::log(rng.uniform()));
    double mu = 2.0 * rng.uniform() - 1.0;
    v[i] = r * r * mu * mu;
  }
  return mean_and_error(v);
}

}  // namespace atomwall
