// Copyright 2026 The dunkl-sd Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file polar.hpp
 * @brief Angular eigenfunctions Theta_j, separation constants lambda_k^2 and
 * the total angular constant varpi^2.
 *
 * With e_j = (1 - s_j)/2 and u = cos(2 theta):
 *
 *   Theta_1 = cos^{e_1} sin^{e_2} P_{l_1 - (e_1+e_2)/2}^{(mu_2+e_2-1/2, mu_1+e_1-1/2)}(u)
 *   Theta_j = cos^{e_{j+1}} sin^{2 L_{j-1}} P_{l_j - e_{j+1}/2}^{((j-2)/2 + 2 L_{j-1} + sum_{i<=j} mu_i,
 *                                                          mu_{j+1}+e_{j+1}-1/2)}(u),  j >= 2
 *
 * where L_k = l_1 + ... + l_k. Each Theta_j has unit norm under
 *   j = 1:  |cos|^{2 mu_1} |sin|^{2 mu_2} on [0, 2 pi)
 *   j >= 2: |cos|^{2 mu_{j+1}} |sin|^{j - 1 + 2 sum_{i<=j} mu_i} on [0, pi].
 */

#pragma once

#include <vector>

#include "dunkl/core.hpp"

namespace dunkl {

/// Quantum numbers l_1..l_{d-1} (stored doubled) and the parity of all d axes.
class AngularState {
 public:
  /// Checks sizes and the integrality of every Jacobi index; throws DomainError.
  AngularState(std::vector<int> two_ell, ParityVector parity);

  /// All l_k = 0, all s_j = +1.
  static AngularState ground(int d);

  int dimension() const { return parity_.size(); }
  const std::vector<int>& two_ell() const { return two_ell_; }
  const ParityVector& parity() const { return parity_; }
  /// l_k, 1-based.
  HalfInteger ell(int k) const;
  /// L_k = l_1 + ... + l_k; L_0 = 0.
  HalfInteger ell_sum(int k) const;
  /// L = L_{d-1}.
  HalfInteger total() const { return ell_sum(dimension() - 1); }
  /// Degree of the Jacobi polynomial in Theta_j.
  int jacobi_degree(int j) const;

 private:
  std::vector<int> two_ell_;
  ParityVector parity_;
};

/// e_j = (1 - s_j)/2.
std::vector<int> parity_offsets(const ParityVector& parity);

struct AngularSolution {
  int level = 1;
  int degree = 0;        ///< Jacobi degree
  double alpha = 0.0;    ///< first Jacobi parameter
  double beta = 0.0;     ///< second Jacobi parameter
  int cos_power = 0;
  int sin_power = 0;
  double eigenvalue = 0.0;  ///< lambda_j^2, or varpi^2 at j = d-1
  double norm_constant = 1.0;
  double weight_cos_exponent = 0.0;  ///< exponent of |cos| in the angular weight
  double weight_sin_exponent = 0.0;  ///< exponent of |sin| in the angular weight
};

/// Throws std::out_of_range for j outside [1, d-1].
AngularSolution angular_solution(int j, const AngularState& state, const DeformationParams& params);

double theta_eigenfunction(const AngularSolution& sol, double theta);
double theta_eigenfunction(int j, const AngularState& state, const DeformationParams& params, double theta);

/// Weight under which angular_solution(j, ...) is normalized.
double angular_weight(const AngularSolution& sol, double theta);

/**
 * Inner product of two level-j solutions over the full angular range by
 * Gauss-Jacobi quadrature in u. Both must share prefactor powers (same sector
 * and same lower L); throws DomainError otherwise.
 */
double angular_overlap(const AngularSolution& a, const AngularSolution& b);

/// lambda_k^2 = 4 L_k (L_k + sum_{i<=k+1} mu_i + (k-1)/2), k in [1, d-2].
double lambda_sq(int k, const AngularState& state, const DeformationParams& params);

/// varpi^2 = 4 L (L + sum mu + (d-2)/2).
double varpi_sq(const AngularState& state, const DeformationParams& params);

}  // namespace dunkl
