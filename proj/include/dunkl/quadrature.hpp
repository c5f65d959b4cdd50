// Copyright 2026 The dunkl-sd Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file quadrature.hpp
 * @brief Gaussian quadrature on the half line and on [-1, 1].
 *
 * Rules are built by the Golub-Welsch construction from three-term recurrence
 * coefficients. Nodes come from Sturm bisection on the Jacobi matrix and are
 * polished by Newton steps; weights use mu0 / sum_k p_k(x)^2 over orthonormal
 * polynomials so that tiny weights in the tail keep full relative accuracy.
 */

#pragma once

#include <functional>
#include <vector>

namespace dunkl {

enum class WeightKind {
  exp_r,   ///< r^gamma e^{-r} on (0, inf)
  exp_r2,  ///< r^gamma e^{-r^2} on (0, inf)
};

/// Nodes and weights of an n-point Gauss rule.
struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;

  double integrate(const std::function<double(double)>& f) const;
};

/// Gauss rule for the weight r^gamma w(r) on (0, inf); exact for polynomials of
/// degree <= 2 * npoints - 1.
struct QuadratureRule {
  WeightKind kind = WeightKind::exp_r;
  double weight_exponent = 0.0;
  GaussRule rule;

  int exactness_degree() const { return 2 * static_cast<int>(rule.nodes.size()) - 1; }
  const std::vector<double>& nodes() const { return rule.nodes; }
  const std::vector<double>& weights() const { return rule.weights; }
  double integrate(const std::function<double(double)>& f) const { return rule.integrate(f); }
};

/// Throws DomainError for gamma <= -1 or npoints < 1, ConvergenceError if the
/// node iteration fails.
QuadratureRule build_quadrature(double gamma, WeightKind kind, int npoints);

/// Gauss-Jacobi rule on [-1, 1] for (1-x)^alpha (1+x)^beta.
GaussRule gauss_jacobi(int npoints, double alpha, double beta);

/// Gauss-Legendre rule on [-1, 1].
GaussRule gauss_legendre(int npoints);

/**
 * Gauss rule from the monic recurrence p_{k+1} = (x - a_k) p_k - b_k p_{k-1}.
 * a has n entries, b has n entries with b[0] ignored; mu0 is the total mass.
 */
GaussRule gauss_from_recurrence(const std::vector<double>& a, const std::vector<double>& b, double mu0);

/// Recurrence coefficients (a_k, b_k), k < n, of the polynomials orthogonal
/// on a discrete measure, by Stieltjes' procedure with reorthogonalization.
void discretized_stieltjes(const GaussRule& measure, int n, std::vector<double>& a, std::vector<double>& b);

}  // namespace dunkl
