// Copyright 2026 The dunkl-sd Authors
// SPDX-License-Identifier: Apache-2.0

#include "dunkl/quadrature.hpp"

#include <cmath>
#include <numeric>

#include "dunkl/errors.hpp"
#include "dunkl/tridiagonal.hpp"

namespace dunkl {

namespace {

constexpr double kScale = 1e150;
constexpr double kInvScale = 1e-150;

struct NodeEval {
  double value = 0.0;       // degree-n polynomial (unnormalized leading term)
  double derivative = 0.0;
  double sum_sq = 0.0;      // sum_{k<n} p_k^2, divided by kScale^(2*scalings)
  int scalings = 0;
};

// Orthonormal recurrence with p_0 = 1, i.e. p_k = sqrt(mu0) * (orthonormal p_k).
NodeEval evaluate_at(const std::vector<double>& a, const std::vector<double>& b, double x) {
  const std::size_t n = a.size();
  NodeEval out;
  double p_prev = 0.0, p = 1.0;
  double d_prev = 0.0, d = 0.0;
  out.sum_sq = 1.0;
  for (std::size_t k = 0; k < n; ++k) {
    const double sb = k == 0 ? 0.0 : std::sqrt(b[k]);
    double p_next = (x - a[k]) * p - sb * p_prev;
    double d_next = (x - a[k]) * d + p - sb * d_prev;
    if (k + 1 < n) {
      const double norm = std::sqrt(b[k + 1]);
      p_next /= norm;
      d_next /= norm;
      out.sum_sq += p_next * p_next;
    }
    p_prev = p;
    p = p_next;
    d_prev = d;
    d = d_next;
    if (std::fabs(p) > kScale) {
      p *= kInvScale;
      p_prev *= kInvScale;
      d *= kInvScale;
      d_prev *= kInvScale;
      out.sum_sq *= kInvScale * kInvScale;
      ++out.scalings;
    }
  }
  out.value = p;
  out.derivative = d;
  return out;
}

GaussRule half_gaussian_discretization(double gamma, int n) {
  // composite rule for r^gamma e^{-r^2}: Gauss-Jacobi on the first panel to absorb
  // the r^gamma singularity, Gauss-Legendre panels beyond
  constexpr int kPanelPoints = 24;
  constexpr double kWidth = 0.5;
  const double r_end = std::sqrt(2.0 * n + std::max(gamma, 0.0) + 1.0) + 12.0;
  const int panels = static_cast<int>(std::ceil(r_end / kWidth));

  GaussRule out;
  const GaussRule first = gauss_jacobi(kPanelPoints, 0.0, gamma);
  const double half = 0.5 * kWidth;
  for (std::size_t i = 0; i < first.nodes.size(); ++i) {
    const double r = half * (1.0 + first.nodes[i]);
    out.nodes.push_back(r);
    out.weights.push_back(first.weights[i] * std::pow(half, gamma + 1.0) * std::exp(-r * r));
  }
  const GaussRule gl = gauss_legendre(kPanelPoints);
  for (int p = 1; p < panels; ++p) {
    const double mid = (p + 0.5) * kWidth;
    for (std::size_t i = 0; i < gl.nodes.size(); ++i) {
      const double r = mid + half * gl.nodes[i];
      out.nodes.push_back(r);
      out.weights.push_back(gl.weights[i] * half * std::pow(r, gamma) * std::exp(-r * r));
    }
  }
  return out;
}

}  // namespace

double GaussRule::integrate(const std::function<double(double)>& f) const {
  double s = 0.0;
  for (std::size_t i = 0; i < nodes.size(); ++i) s += weights[i] * f(nodes[i]);
  return s;
}

GaussRule gauss_from_recurrence(const std::vector<double>& a, const std::vector<double>& b, double mu0) {
  const std::size_t n = a.size();
  if (n == 0 || b.size() < n) throw DomainError("gauss_from_recurrence: need n >= 1 coefficients");

  SymmetricTridiagonal jac;
  jac.diag = a;
  jac.off.resize(n - 1);
  for (std::size_t k = 1; k < n; ++k) jac.off[k - 1] = std::sqrt(b[k]);
  std::vector<double> x = jac.smallest_eigenvalues(n);

  GaussRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    double xi = x[i];
    bool converged = false;
    for (int it = 0; it < 20; ++it) {
      const NodeEval e = evaluate_at(a, b, xi);
      if (e.derivative == 0.0) break;
      const double step = e.value / e.derivative;
      xi -= step;
      if (std::fabs(step) <= 4.0 * 2.2e-16 * std::max(1.0, std::fabs(xi))) {
        converged = true;
        break;
      }
    }
    if (!converged && std::fabs(xi - x[i]) > 1e-8 * std::max(1.0, std::fabs(x[i]))) {
      throw ConvergenceError("gauss_from_recurrence: Newton polish failed");
    }
    const NodeEval e = evaluate_at(a, b, xi);
    rule.nodes[i] = xi;
    const double log_w = std::log(mu0) - std::log(e.sum_sq) - 2.0 * e.scalings * std::log(kScale);
    rule.weights[i] = std::exp(log_w);
  }
  return rule;
}

GaussRule gauss_jacobi(int npoints, double alpha, double beta) {
  if (npoints < 1) throw DomainError("gauss_jacobi: npoints must be positive");
  if (!(alpha > -1.0) || !(beta > -1.0)) throw DomainError("gauss_jacobi: alpha, beta must exceed -1");
  const std::size_t n = static_cast<std::size_t>(npoints);
  std::vector<double> a(n), b(n, 0.0);
  const double ab = alpha + beta;
  for (std::size_t k = 0; k < n; ++k) {
    const double s = 2.0 * k + ab;
    a[k] = k == 0 ? (beta - alpha) / (ab + 2.0) : (beta * beta - alpha * alpha) / (s * (s + 2.0));
  }
  if (n > 1) b[1] = 4.0 * (1.0 + alpha) * (1.0 + beta) / ((ab + 2.0) * (ab + 2.0) * (ab + 3.0));
  for (std::size_t k = 2; k < n; ++k) {
    const double s = 2.0 * k + ab;
    b[k] = 4.0 * k * (k + alpha) * (k + beta) * (k + ab) / (s * s * (s + 1.0) * (s - 1.0));
  }
  const double mu0 = std::exp((ab + 1.0) * std::log(2.0) + std::lgamma(alpha + 1.0) +
                              std::lgamma(beta + 1.0) - std::lgamma(ab + 2.0));
  return gauss_from_recurrence(a, b, mu0);
}

GaussRule gauss_legendre(int npoints) { return gauss_jacobi(npoints, 0.0, 0.0); }

void discretized_stieltjes(const GaussRule& measure, int n, std::vector<double>& a, std::vector<double>& b) {
  const std::size_t m = measure.nodes.size();
  if (n < 1 || static_cast<std::size_t>(n) > m) {
    throw DomainError("discretized_stieltjes: need 1 <= n <= number of support points");
  }
  a.assign(static_cast<std::size_t>(n), 0.0);
  b.assign(static_cast<std::size_t>(n), 0.0);
  const double mu0 = std::accumulate(measure.weights.begin(), measure.weights.end(), 0.0);
  b[0] = mu0;

  std::vector<std::vector<double>> basis;
  std::vector<double> v(m);
  for (std::size_t i = 0; i < m; ++i) v[i] = std::sqrt(measure.weights[i] / mu0);
  std::vector<double> prev(m, 0.0);
  const auto& x = measure.nodes;
  for (int k = 0; k < n; ++k) {
    double ak = 0.0;
    for (std::size_t i = 0; i < m; ++i) ak += x[i] * v[i] * v[i];
    a[static_cast<std::size_t>(k)] = ak;
    basis.push_back(v);
    if (k + 1 == n) break;
    const double sb = k == 0 ? 0.0 : std::sqrt(b[static_cast<std::size_t>(k)]);
    std::vector<double> r(m);
    for (std::size_t i = 0; i < m; ++i) r[i] = (x[i] - ak) * v[i] - sb * prev[i];
    for (int pass = 0; pass < 2; ++pass) {
      for (const auto& q : basis) {
        double dot = 0.0;
        for (std::size_t i = 0; i < m; ++i) dot += q[i] * r[i];
        for (std::size_t i = 0; i < m; ++i) r[i] -= dot * q[i];
      }
    }
    double norm2 = 0.0;
    for (double ri : r) norm2 += ri * ri;
    const double norm = std::sqrt(norm2);
    if (!(norm > 0.0)) throw ConvergenceError("discretized_stieltjes: breakdown");
    b[static_cast<std::size_t>(k + 1)] = norm2;
    prev = v;
    for (std::size_t i = 0; i < m; ++i) v[i] = r[i] / norm;
  }
}

QuadratureRule build_quadrature(double gamma, WeightKind kind, int npoints) {
  if (!(gamma > -1.0)) throw DomainError("build_quadrature: gamma must exceed -1");
  if (npoints < 1) throw DomainError("build_quadrature: npoints must be positive");
  const std::size_t n = static_cast<std::size_t>(npoints);
  QuadratureRule out;
  out.kind = kind;
  out.weight_exponent = gamma;
  if (kind == WeightKind::exp_r) {
    std::vector<double> a(n), b(n, 0.0);
    for (std::size_t k = 0; k < n; ++k) {
      a[k] = 2.0 * k + gamma + 1.0;
      b[k] = k * (k + gamma);
    }
    out.rule = gauss_from_recurrence(a, b, std::exp(std::lgamma(gamma + 1.0)));
  } else {
    const GaussRule fine = half_gaussian_discretization(gamma, npoints);
    std::vector<double> a, b;
    discretized_stieltjes(fine, npoints, a, b);
    out.rule = gauss_from_recurrence(a, b, 0.5 * std::exp(std::lgamma(0.5 * (gamma + 1.0))));
  }
  return out;
}

}  // namespace dunkl
