// Copyright 2026 The dunkl-sd Authors
// SPDX-License-Identifier: Apache-2.0

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>
#include <random>

#include "dunkl/cartesian.hpp"
#include "dunkl/errors.hpp"

using namespace dunkl;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {

// int_R psi_a psi_b |x|^{2 mu} dx with x = y^p, p = 1/(1+2mu), which turns the
// weight into a constant; midpoint rule on [0, Y]
double brute_inner(const Wavefunction1D& a, const Wavefunction1D& b, double mu) {
  const double p = 1.0 / (1.0 + 2.0 * mu);
  const double y_max = std::pow(12.0, 1.0 / p);
  const int m = 400000;
  const double h = y_max / m;
  double s = 0.0;
  for (int i = 0; i < m; ++i) {
    const double y = (i + 0.5) * h;
    const double x = std::pow(y, p);
    s += a(x) * b(x) + a(-x) * b(-x);
  }
  return p * s * h;
}

// physicists' Hermite polynomials by recurrence
double hermite(int n, double x) {
  double h0 = 1.0, h1 = 2.0 * x;
  if (n == 0) return h0;
  for (int k = 1; k < n; ++k) {
    const double h2 = 2.0 * x * h1 - 2.0 * k * h0;
    h0 = h1;
    h1 = h2;
  }
  return h1;
}

}  // namespace

TEST_CASE("one-dimensional energies", "[cartesian]") {
  CHECK_THAT(energy_1d(0, 0.0, 1, 1.0), WithinAbs(0.5, 1e-15));
  CHECK_THAT(energy_1d(0, 0.4, 1, 1.0), WithinAbs(0.9, 1e-15));
  CHECK_THAT(energy_1d(1, 0.4, -1, 1.0), WithinAbs(3.9, 1e-15));
  CHECK_THAT(energy_1d(2, 0.1, 1, 2.0, Units{0.5, 3.0}), WithinAbs(0.5 * 2.0 * 4.6, 1e-14));
  CHECK_THROWS_AS(energy_1d(0, -0.5, 1, 1.0), DomainError);
  CHECK_THROWS_AS(energy_1d(-1, 0.0, 1, 1.0), DomainError);
  CHECK_THROWS_AS(energy_1d(0, 0.0, 0, 1.0), DomainError);
  CHECK_THROWS_AS(energy_1d(0, 0.0, 1, 0.0), DomainError);
}

TEST_CASE("one-based counting only rejects n = 0", "[cartesian]") {
  CHECK_THROWS_AS(energy_1d(0, 0.0, 1, 1.0, {}, IndexBase::one), DomainError);
  CHECK(energy_1d(2, 0.3, -1, 1.0, {}, IndexBase::one) == energy_1d(2, 0.3, -1, 1.0));
}

TEST_CASE("total energy examples", "[cartesian]") {
  const DeformationParams flat({0.0, 0.0, 0.0});
  CHECK_THAT(total_energy(CartesianState({0, 0, 0}, ParityVector::all_even(3)), flat, 1.0), WithinAbs(1.5, 1e-15));

  const DeformationParams p = DeformationParams::symmetric(3, 0.4);
  const CartesianState st({1, 0, 0}, ParityVector({1, 1, -1}));
  CHECK_THAT(total_energy(st, p, 1.0), WithinAbs(5.7, 1e-14));
  CHECK_THAT(total_energy_closed_form(st, p, 1.0), WithinAbs(5.7, 1e-14));
}

TEST_CASE("lowest total energy has every parity even", "[cartesian]") {
  const DeformationParams p({0.4, -0.3, 0.1});
  double best = 1e300;
  std::vector<int> arg;
  for (int mask = 0; mask < 8; ++mask) {
    std::vector<int> s = {mask & 1 ? -1 : 1, mask & 2 ? -1 : 1, mask & 4 ? -1 : 1};
    const double e = total_energy(CartesianState({0, 0, 0}, ParityVector(s)), p, 1.0);
    if (e < best) {
      best = e;
      arg = s;
    }
  }
  CHECK(arg == std::vector<int>{1, 1, 1});
}

TEST_CASE("additivity over a random sweep", "[cartesian]") {
  std::mt19937 rng(42);
  std::uniform_int_distribution<int> dim(2, 7), nq(0, 6), par(0, 1);
  std::uniform_real_distribution<double> mu(-0.49, 1.5), om(0.2, 3.0);
  for (int trial = 0; trial < 1000; ++trial) {
    const int d = dim(rng);
    std::vector<double> m(static_cast<std::size_t>(d));
    std::vector<int> n(static_cast<std::size_t>(d)), s(static_cast<std::size_t>(d));
    for (int j = 0; j < d; ++j) {
      m[static_cast<std::size_t>(j)] = mu(rng);
      n[static_cast<std::size_t>(j)] = nq(rng);
      s[static_cast<std::size_t>(j)] = par(rng) ? 1 : -1;
    }
    const double omega = om(rng);
    const DeformationParams p(m);
    const CartesianState st(n, ParityVector(s));
    double sum = 0.0;
    for (int j = 0; j < d; ++j) {
      sum += energy_1d(n[static_cast<std::size_t>(j)], m[static_cast<std::size_t>(j)], s[static_cast<std::size_t>(j)], omega);
    }
    CHECK_THAT(total_energy(st, p, omega), WithinAbs(sum, 1e-13 * std::fabs(sum)));
    CHECK_THAT(total_energy_closed_form(st, p, omega), WithinAbs(sum, 1e-13 * std::fabs(sum)));
  }
}

TEST_CASE("wavefunction parity", "[cartesian]") {
  std::mt19937 rng(5);
  std::uniform_real_distribution<double> u(0.01, 4.0);
  for (double mu : {-0.3, 0.0, 0.4}) {
    for (int n = 0; n < 4; ++n) {
      const Wavefunction1D even(n, mu, 1, 1.0), odd(n, mu, -1, 1.0);
      for (int i = 0; i < 20; ++i) {
        const double x = u(rng);
        CHECK(even(-x) == even(x));
        CHECK(odd(-x) == -odd(x));
      }
      CHECK(odd(0.0) == 0.0);
    }
  }
}

TEST_CASE("reflection acts as the parity label", "[cartesian]") {
  for (int s : {1, -1}) {
    const Wavefunction1D psi(2, 0.4, s, 1.3);
    // embed the 1D state on axis 2 of a 2D point
    CartesianFunction f = [&](const std::vector<double>& x) { return psi(x[1]); };
    const auto rf = apply_reflection(f, 2, 2);
    for (double x : {-1.7, -0.2, 0.6, 2.4}) CHECK(rf({0.3, x}) == s * f({0.3, x}));
  }
}

TEST_CASE("wavefunction normalization against brute-force integration", "[cartesian]") {
  for (double mu : {-0.3, 0.0, 0.4}) {
    for (int s : {1, -1}) {
      for (int n = 0; n < 3; ++n) {
        const Wavefunction1D psi(n, mu, s, 1.0);
        CHECK_THAT(inner_product_1d(psi, psi), WithinAbs(1.0, 1e-10));
        CHECK_THAT(brute_inner(psi, psi, mu), WithinAbs(1.0, 1e-6));
      }
    }
  }
}

TEST_CASE("distinct states are orthogonal", "[cartesian]") {
  for (double mu : {-0.3, 0.0, 0.4, 1.1}) {
    std::vector<Wavefunction1D> states;
    for (int s : {1, -1}) {
      for (int n = 0; n < 6; ++n) states.emplace_back(n, mu, s, 0.8);
    }
    for (std::size_t a = 0; a < states.size(); ++a) {
      for (std::size_t b = a + 1; b < states.size(); ++b) CHECK(std::fabs(inner_product_1d(states[a], states[b])) < 1e-9);
    }
  }
  const Wavefunction1D a(1, 0.4, 1, 1.0), b(2, 0.4, 1, 1.0);
  CHECK(std::fabs(brute_inner(a, b, 0.4)) < 1e-6);
}

TEST_CASE("undeformed limit is the Hermite oscillator", "[cartesian]") {
  for (int s : {1, -1}) {
    for (int n = 0; n < 5; ++n) {
      const int big_n = 2 * n + (1 - s) / 2;
      CHECK_THAT(energy_1d(n, 0.0, s, 1.0), WithinAbs(big_n + 0.5, 1e-15));
      const Wavefunction1D psi(n, 0.0, s, 1.0);
      double fact = 1.0;
      for (int k = 2; k <= big_n; ++k) fact *= k;
      const double norm = 1.0 / std::sqrt(std::pow(2.0, big_n) * fact * std::sqrt(std::numbers::pi));
      for (double x : {0.3, 1.1, 2.2}) {
        const double want = norm * hermite(big_n, x) * std::exp(-0.5 * x * x);
        CHECK_THAT(std::fabs(psi(x)), WithinAbs(std::fabs(want), 1e-12));
      }
    }
  }
}
