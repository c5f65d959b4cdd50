// Copyright 2026 The dunkl-sd Authors
// SPDX-License-Identifier: Apache-2.0

#include "dunkl/cartesian.hpp"

#include <cmath>
#include <string>

#include "dunkl/errors.hpp"
#include "dunkl/quadrature.hpp"
#include "dunkl/specfun.hpp"

namespace dunkl {

namespace {

void check_1d(int n, double mu, int s, double omega, const Units& units, IndexBase base) {
  if (n < 0) throw DomainError("quantum number n must be non-negative");
  if (base == IndexBase::one && n == 0) throw DomainError("n = 0 is not admitted with one-based counting");
  if (!(mu > -0.5)) throw DomainError("mu = " + std::to_string(mu) + " violates mu > -1/2");
  if (s != 1 && s != -1) throw DomainError("parity s must be +1 or -1");
  if (!(omega > 0.0)) throw DomainError("omega must be positive");
  if (!(units.hbar > 0.0) || !(units.mass > 0.0)) throw DomainError("hbar and mass must be positive");
}

// int_0^inf e^{-t^2} t^gamma L_a(t^2) L_b(t^2) dt with gamma = 2 mu + 1 - s
double half_line_overlap(int na, int nb, double mu, int s) {
  const double gamma = 2.0 * mu + 1.0 - s;
  const double alpha = mu - 0.5 * s;
  const QuadratureRule rule = build_quadrature(gamma, WeightKind::exp_r2, na + nb + 2);
  return rule.integrate([&](double t) {
    const double y = t * t;
    return specfun::laguerre(na, alpha, y) * specfun::laguerre(nb, alpha, y);
  });
}

}  // namespace

CartesianState::CartesianState(std::vector<int> n_values, ParityVector p) : n(std::move(n_values)), parity(std::move(p)) {
  if (static_cast<int>(n.size()) != parity.size()) {
    throw DomainError("CartesianState: n and parity must have one entry per axis");
  }
  for (int v : n) {
    if (v < 0) throw DomainError("CartesianState: n_j must be non-negative");
  }
}

int CartesianState::total_n() const {
  int t = 0;
  for (int v : n) t += v;
  return t;
}

double energy_1d(int n, double mu, int s, double omega, const Units& units, IndexBase base) {
  check_1d(n, mu, s, omega, units, base);
  return units.hbar * omega * (2.0 * n + mu + 1.0 - 0.5 * s);
}

Wavefunction1D::Wavefunction1D(int n, double mu, int s, double omega, const Units& units, IndexBase base)
    : n_(n), mu_(mu), s_(s), beta_(units.mass * omega / units.hbar) {
  energy_ = energy_1d(n, mu, s, omega, units, base);
  const double gamma = 2.0 * mu + 1.0 - s;
  const double integral = 2.0 * std::pow(beta_, -0.5 * (gamma + 1.0)) * half_line_overlap(n, n, mu, s);
  if (!(integral > 0.0) || !std::isfinite(integral)) {
    throw ConvergenceError("Wavefunction1D: normalization integral is not positive");
  }
  norm_ = 1.0 / std::sqrt(integral);
}

double Wavefunction1D::operator()(double x) const {
  const double y = beta_ * x * x;
  const double odd = s_ == 1 ? 1.0 : x;
  return norm_ * std::exp(-0.5 * y) * odd * specfun::laguerre(n_, mu_ - 0.5 * s_, y);
}

double wavefunction_1d(int n, double mu, int s, double omega, double x, const Units& units, IndexBase base) {
  return Wavefunction1D(n, mu, s, omega, units, base)(x);
}

double inner_product_1d(const Wavefunction1D& a, const Wavefunction1D& b) {
  if (a.mu() != b.mu() || a.beta() != b.beta()) throw DomainError("inner_product_1d: states must share mu and omega");
  // opposite parities integrate an odd function over the real line
  if (a.parity() != b.parity()) return 0.0;
  const int s = a.parity();
  const double gamma = 2.0 * a.mu() + 1.0 - s;
  return 2.0 * a.norm_constant() * b.norm_constant() * std::pow(a.beta(), -0.5 * (gamma + 1.0)) *
         half_line_overlap(a.n(), b.n(), a.mu(), s);
}

double total_energy(const CartesianState& state, const DeformationParams& params, double omega, const Units& units,
                    IndexBase base) {
  if (state.parity.size() != params.dimension()) throw DomainError("total_energy: state and parameters disagree on d");
  double e = 0.0;
  for (int j = 1; j <= params.dimension(); ++j) {
    e += energy_1d(state.n[static_cast<std::size_t>(j - 1)], params.mu(j), state.parity(j), omega, units, base);
  }
  return e;
}

double total_energy_closed_form(const CartesianState& state, const DeformationParams& params, double omega,
                                const Units& units, IndexBase base) {
  if (state.parity.size() != params.dimension()) {
    throw DomainError("total_energy_closed_form: state and parameters disagree on d");
  }
  for (int j = 1; j <= params.dimension(); ++j) {
    check_1d(state.n[static_cast<std::size_t>(j - 1)], params.mu(j), state.parity(j), omega, units, base);
  }
  return units.hbar * omega *
         (2.0 * state.total_n() + params.dimension() + params.sum_mu() - 0.5 * state.parity.sum());
}

}  // namespace dunkl
