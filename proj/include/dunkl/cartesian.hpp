// Copyright 2026 The dunkl-sd Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file cartesian.hpp
 * @brief Parity-resolved one-dimensional Dunkl oscillator and its product over
 * d axes.
 *
 *   eps_n^s = hbar omega (2n + mu + 1 - s/2)
 *   psi_n^s(x) = C exp(-m omega x^2 / 2 hbar) x^{(1-s)/2} L_n^{mu - s/2}(m omega x^2 / hbar)
 *
 * normalized under |x|^{2 mu} dx on the real line.
 */

#pragma once

#include <vector>

#include "dunkl/core.hpp"

namespace dunkl {

/// How radial quantum numbers are counted. With IndexBase::one the value n is
/// used as written and n = 0 is rejected; the formulas are unchanged.
enum class IndexBase { zero, one };

/// Per-axis quantum numbers n_j and parities s_j.
struct CartesianState {
  std::vector<int> n;
  ParityVector parity;

  CartesianState(std::vector<int> n_values, ParityVector p);
  int total_n() const;
};

/// Throws DomainError for mu <= -1/2, s not +-1, omega <= 0 or a negative n.
double energy_1d(int n, double mu, int s, double omega, const Units& units = {}, IndexBase base = IndexBase::zero);

/// A normalized 1D eigenfunction; the constant is computed once.
class Wavefunction1D {
 public:
  Wavefunction1D(int n, double mu, int s, double omega, const Units& units = {}, IndexBase base = IndexBase::zero);

  double operator()(double x) const;
  double energy() const { return energy_; }
  double norm_constant() const { return norm_; }
  int parity() const { return s_; }
  double mu() const { return mu_; }
  int n() const { return n_; }
  /// m omega / hbar
  double beta() const { return beta_; }

 private:
  int n_;
  double mu_;
  int s_;
  double beta_;  // m omega / hbar
  double norm_;
  double energy_;
};

double wavefunction_1d(int n, double mu, int s, double omega, double x, const Units& units = {},
                       IndexBase base = IndexBase::zero);

/// <f, g> = int f g |x|^{2 mu} dx over the real line for two 1D eigenfunctions
/// with the same mu and omega, by Gauss quadrature in t = sqrt(m omega / hbar) |x|.
double inner_product_1d(const Wavefunction1D& a, const Wavefunction1D& b);

/// Sum of energy_1d over the axes.
double total_energy(const CartesianState& state, const DeformationParams& params, double omega,
                    const Units& units = {}, IndexBase base = IndexBase::zero);

/// hbar omega [2 sum n_j + d + sum mu_j - sum s_j / 2].
double total_energy_closed_form(const CartesianState& state, const DeformationParams& params, double omega,
                                const Units& units = {}, IndexBase base = IndexBase::zero);

}  // namespace dunkl
