// Copyright 2026 The dunkl-sd Authors
// SPDX-License-Identifier: Apache-2.0

#include "dunkl/polar.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "dunkl/errors.hpp"
#include "dunkl/quadrature.hpp"
#include "dunkl/specfun.hpp"

namespace dunkl {

namespace {

void check_level(int j, int d) {
  if (j < 1 || j > d - 1) {
    throw std::out_of_range("angular level " + std::to_string(j) + " outside [1, " + std::to_string(d - 1) + "]");
  }
}

// integer power that keeps the sign of a negative base
double ipow(double x, int k) {
  double r = 1.0;
  for (int i = 0; i < k; ++i) r *= x;
  return r;
}

// Full-range integral of the product of two solutions sharing prefactors.
// On a quarter period the substitution u = cos 2 theta turns
//   cos^{2p} sin^{2q} d theta  into  2^{-(p+q)-1} (1-u)^{q-1/2} (1+u)^{p-1/2} du.
double jacobi_product_integral(const AngularSolution& a, const AngularSolution& b) {
  const double p = 0.5 * a.weight_cos_exponent + a.cos_power;
  const double q = 0.5 * a.weight_sin_exponent + a.sin_power;
  const int npoints = (a.degree + b.degree) / 2 + 2;
  const GaussRule rule = gauss_jacobi(npoints, q - 0.5, p - 0.5);
  double s = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    const double u = rule.nodes[i];
    s += rule.weights[i] * specfun::jacobi(a.degree, a.alpha, a.beta, u) * specfun::jacobi(b.degree, b.alpha, b.beta, u);
  }
  const double quarters = a.level == 1 ? 4.0 : 2.0;
  return quarters * std::exp2(-(p + q) - 1.0) * s;
}

}  // namespace

AngularState::AngularState(std::vector<int> two_ell, ParityVector parity)
    : two_ell_(std::move(two_ell)), parity_(std::move(parity)) {
  if (parity_.size() < 2) throw DomainError("AngularState: need d >= 2 parity entries");
  if (static_cast<int>(two_ell_.size()) != parity_.size() - 1) {
    throw DomainError("AngularState: expected d-1 angular quantum numbers for d = " + std::to_string(parity_.size()));
  }
  for (int t : two_ell_) {
    if (t < 0) throw DomainError("AngularState: quantum numbers l_k must be non-negative");
  }
  for (int j = 1; j < parity_.size(); ++j) jacobi_degree(j);
}

AngularState AngularState::ground(int d) {
  return AngularState(std::vector<int>(static_cast<std::size_t>(d - 1), 0), ParityVector::all_even(d));
}

HalfInteger AngularState::ell(int k) const {
  check_level(k, dimension());
  return HalfInteger::from_twice(two_ell_[static_cast<std::size_t>(k - 1)]);
}

HalfInteger AngularState::ell_sum(int k) const {
  if (k < 0 || k > dimension() - 1) throw std::out_of_range("AngularState::ell_sum: index out of range");
  int t = 0;
  for (int i = 0; i < k; ++i) t += two_ell_[static_cast<std::size_t>(i)];
  return HalfInteger::from_twice(t);
}

int AngularState::jacobi_degree(int j) const {
  check_level(j, dimension());
  const std::vector<int> e = parity_offsets(parity_);
  const int offset = j == 1 ? e[0] + e[1] : e[static_cast<std::size_t>(j)];
  const int twice_index = two_ell_[static_cast<std::size_t>(j - 1)] - offset;
  if (twice_index < 0 || twice_index % 2 != 0) {
    throw DomainError("AngularState: l_" + std::to_string(j) + " = " + ell(j).to_string() +
                      " is incompatible with the parity sector (Jacobi index must be a non-negative integer)");
  }
  return twice_index / 2;
}

std::vector<int> parity_offsets(const ParityVector& parity) {
  std::vector<int> e;
  e.reserve(static_cast<std::size_t>(parity.size()));
  for (int s : parity.values()) e.push_back((1 - s) / 2);
  return e;
}

AngularSolution angular_solution(int j, const AngularState& state, const DeformationParams& params) {
  const int d = params.dimension();
  if (state.dimension() != d) throw DomainError("angular_solution: state and parameters disagree on d");
  check_level(j, d);
  const std::vector<int> e = parity_offsets(state.parity());

  AngularSolution sol;
  sol.level = j;
  sol.degree = state.jacobi_degree(j);
  if (j == 1) {
    sol.alpha = params.mu(2) + e[1] - 0.5;
    sol.beta = params.mu(1) + e[0] - 0.5;
    sol.cos_power = e[0];
    sol.sin_power = e[1];
    sol.weight_cos_exponent = 2.0 * params.mu(1);
    sol.weight_sin_exponent = 2.0 * params.mu(2);
  } else {
    const int two_lower = state.ell_sum(j - 1).twice;
    const int ej = e[static_cast<std::size_t>(j)];
    sol.alpha = 0.5 * (j - 2) + two_lower + params.partial_sum(j);
    sol.beta = params.mu(j + 1) + ej - 0.5;
    sol.cos_power = ej;
    sol.sin_power = two_lower;
    sol.weight_cos_exponent = 2.0 * params.mu(j + 1);
    sol.weight_sin_exponent = j - 1 + 2.0 * params.partial_sum(j);
  }
  sol.eigenvalue = separation_constant(j, state.ell_sum(j), params);
  const double norm_sq = jacobi_product_integral(sol, sol);
  if (!(norm_sq > 0.0) || !std::isfinite(norm_sq)) {
    throw ConvergenceError("angular_solution: normalization integral is not positive");
  }
  sol.norm_constant = 1.0 / std::sqrt(norm_sq);
  return sol;
}

double theta_eigenfunction(const AngularSolution& sol, double theta) {
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  return sol.norm_constant * ipow(c, sol.cos_power) * ipow(s, sol.sin_power) *
         specfun::jacobi(sol.degree, sol.alpha, sol.beta, std::cos(2.0 * theta));
}

double theta_eigenfunction(int j, const AngularState& state, const DeformationParams& params, double theta) {
  return theta_eigenfunction(angular_solution(j, state, params), theta);
}

double angular_weight(const AngularSolution& sol, double theta) {
  return std::pow(std::fabs(std::cos(theta)), sol.weight_cos_exponent) *
         std::pow(std::fabs(std::sin(theta)), sol.weight_sin_exponent);
}

double angular_overlap(const AngularSolution& a, const AngularSolution& b) {
  if (a.level != b.level || a.cos_power != b.cos_power || a.sin_power != b.sin_power ||
      a.weight_cos_exponent != b.weight_cos_exponent || a.weight_sin_exponent != b.weight_sin_exponent) {
    throw DomainError("angular_overlap: solutions do not share a sector and prefactors");
  }
  return a.norm_constant * b.norm_constant * jacobi_product_integral(a, b);
}

double lambda_sq(int k, const AngularState& state, const DeformationParams& params) {
  if (k < 1 || k > params.dimension() - 2) {
    throw std::out_of_range("lambda_sq: level " + std::to_string(k) + " outside [1, d-2]");
  }
  return separation_constant(k, state.ell_sum(k), params);
}

double varpi_sq(const AngularState& state, const DeformationParams& params) {
  return separation_constant(params.dimension() - 1, state.total(), params);
}

}  // namespace dunkl
