// Copyright 2026 The dunkl-sd Authors
// SPDX-License-Identifier: Apache-2.0

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <cmath>
#include <vector>

#include "dunkl/errors.hpp"
#include "dunkl/verify.hpp"

using namespace dunkl;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {

DeformationParams sym(int d, double mu) { return DeformationParams::symmetric(d, mu); }

// cyclic Jacobi rotations on a dense symmetric matrix
std::vector<double> dense_eigenvalues(std::vector<std::vector<double>> a) {
  const std::size_t n = a.size();
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) off += a[p][q] * a[p][q];
    }
    if (off < 1e-26) break;
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        if (a[p][q] == 0.0) continue;
        const double theta = 0.5 * (a[q][q] - a[p][p]) / a[p][q];
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0), s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = a[k][p], akq = a[k][q];
          a[k][p] = c * akp - s * akq;
          a[k][q] = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = a[p][k], aqk = a[q][k];
          a[p][k] = c * apk - s * aqk;
          a[q][k] = s * apk + c * aqk;
        }
      }
    }
  }
  std::vector<double> ev(n);
  for (std::size_t i = 0; i < n; ++i) ev[i] = a[i][i];
  std::sort(ev.begin(), ev.end());
  return ev;
}

double worst_rel(const std::vector<double>& got, const std::vector<double>& want) {
  double w = 0.0;
  for (std::size_t i = 0; i < want.size(); ++i) w = std::max(w, std::fabs(got[i] - want[i]) / std::fabs(want[i]));
  return w;
}

}  // namespace

TEST_CASE("radial oracle examples", "[verify]") {
  const auto osc = radial_eigenvalues(Oscillator{1.0}, sym(3, 0.0), AngularState::ground(3),
                                      DiscretizationConfig::oscillator_default(), 3);
  CHECK_THAT(osc[0], WithinAbs(1.5, 1e-5));
  CHECK_THAT(osc[1], WithinAbs(3.5, 1e-5));
  CHECK_THAT(osc[2], WithinAbs(5.5, 1e-5));

  const auto h = radial_eigenvalues(Coulomb{1.0}, sym(3, 0.0), AngularState::ground(3),
                                    DiscretizationConfig::coulomb_default(), 2);
  CHECK_THAT(h[0], WithinRel(-0.5, 1e-4));
  CHECK_THAT(h[1], WithinRel(-0.125, 1e-4));

  DiscretizationConfig cfg;
  cfg.points = 4000;
  cfg.r_max = 12.0;
  const AngularState st = sweep_state(4, HalfInteger::from_twice(2));
  const auto e = radial_eigenvalues(Oscillator{1.0}, sym(4, 0.4), st, cfg, 3);
  for (int n = 0; n < 3; ++n) CHECK_THAT(e[static_cast<std::size_t>(n)], WithinRel(oscillator_energy(n, st, sym(4, 0.4), 1.0), 1e-4));
}

TEST_CASE("one-dimensional oracle examples", "[verify]") {
  const auto cfg = DiscretizationConfig::oscillator_default();
  const auto even0 = cartesian_1d_eigenvalues(0.0, 1, 1.0, cfg, 3);
  CHECK_THAT(even0[0], WithinAbs(0.5, 1e-5));
  CHECK_THAT(even0[1], WithinAbs(2.5, 1e-5));
  CHECK_THAT(even0[2], WithinAbs(4.5, 1e-5));
  const auto even = cartesian_1d_eigenvalues(0.4, 1, 1.0, cfg, 2);
  CHECK_THAT(even[0], WithinRel(0.9, 1e-4));
  CHECK_THAT(even[1], WithinRel(2.9, 1e-4));
  const auto odd = cartesian_1d_eigenvalues(0.4, -1, 1.0, cfg, 2);
  CHECK_THAT(odd[0], WithinRel(1.9, 1e-4));
  CHECK_THAT(odd[1], WithinRel(3.9, 1e-4));
}

TEST_CASE("strongly singular even sector keeps the Dunkl branch", "[verify]") {
  // c = 2 mu = -0.6: both indicial roots are square integrable
  const auto e = cartesian_1d_eigenvalues(-0.3, 1, 1.0, DiscretizationConfig::oscillator_default(), 3);
  for (int n = 0; n < 3; ++n) CHECK_THAT(e[static_cast<std::size_t>(n)], WithinRel(energy_1d(n, -0.3, 1, 1.0), 1e-6));
  const auto r = radial_eigenvalues(Oscillator{1.0}, sym(3, -0.3), AngularState::ground(3),
                                    DiscretizationConfig::oscillator_default(), 2);
  CHECK_THAT(r[0], WithinRel(0.6, 1e-6));
}

TEST_CASE("discrete operator is symmetric and its spectrum matches a dense solver", "[verify]") {
  for (const auto& problem : {cartesian_problem(-0.3, 1, 1.0), cartesian_problem(0.4, -1, 1.0),
                              radial_problem(Coulomb{1.0}, sym(3, 0.2), AngularState::ground(3))}) {
    const GridKind grid = problem.potential[0].power < 0 ? GridKind::quadratic : GridKind::uniform;
    const double r_max = grid == GridKind::quadratic ? 40.0 : 8.0;
    const SymmetricTridiagonal t = assemble_operator(problem, r_max, 120, grid);
    const auto dense = t.to_dense();
    for (std::size_t i = 0; i < dense.size(); ++i) {
      for (std::size_t j = 0; j < dense.size(); ++j) CHECK(dense[i][j] == dense[j][i]);
    }
    const auto ref = dense_eigenvalues(dense);
    const auto got = t.smallest_eigenvalues(5);
    for (std::size_t i = 0; i < 5; ++i) CHECK_THAT(got[i], WithinAbs(ref[i], 1e-9 * std::max(1.0, std::fabs(ref[i]))));
  }
}

TEST_CASE("grid convergence is second order", "[verify]") {
  DiscretizationConfig cfg;
  cfg.points = 400;
  cfg.richardson = false;
  auto coul = DiscretizationConfig::coulomb_default();
  coul.points = 400;
  coul.richardson = false;
  for (double mu : {-0.3, 0.0, 0.4}) {
    for (int level : {0, 2}) {
      const double p1 = fitted_order(cartesian_problem(mu, 1, 1.0), cfg, level);
      const double p2 = fitted_order(cartesian_problem(mu, -1, 1.0), cfg, level);
      const double p3 = fitted_order(radial_problem(Oscillator{1.0}, sym(3, mu), AngularState::ground(3)), cfg, level);
      const double p4 = fitted_order(radial_problem(Coulomb{1.0}, sym(4, mu), AngularState::ground(4)), coul, level);
      for (double p : {p1, p2, p3, p4}) {
        CHECK(p >= 1.7);
        CHECK(p <= 2.3);
      }
    }
  }
}

TEST_CASE("coarse grids give much larger errors", "[verify]") {
  const AngularState st = AngularState::ground(3);
  std::vector<double> want;
  for (int n = 0; n < 3; ++n) want.push_back(oscillator_energy(n, st, sym(3, 0.4), 1.0));
  DiscretizationConfig fine;
  DiscretizationConfig coarse;
  coarse.points = 200;
  coarse.richardson = false;
  const double e_fine = worst_rel(radial_eigenvalues(Oscillator{1.0}, sym(3, 0.4), st, fine, 3), want);
  const double e_coarse = worst_rel(radial_eigenvalues(Oscillator{1.0}, sym(3, 0.4), st, coarse, 3), want);
  CHECK(e_coarse > 10.0 * e_fine);
  CHECK(e_coarse > 1e-5);
}

TEST_CASE("tail warning on a short domain", "[verify]") {
  DiscretizationConfig cfg;
  cfg.r_max = 3.0;
  const auto res = solve(radial_problem(Oscillator{1.0}, sym(3, 0.0), AngularState::ground(3)), cfg, 3);
  CHECK(res.tail_warning);
  cfg.r_max = 0.0;
  const auto ok = solve(radial_problem(Oscillator{1.0}, sym(3, 0.0), AngularState::ground(3)), cfg, 1);
  CHECK_FALSE(ok.tail_warning);
  CHECK(ok.fine.size() == 1);
  CHECK(ok.r_max > 5.0);
}

TEST_CASE("configuration validation", "[verify]") {
  DiscretizationConfig cfg;
  cfg.points = 99;
  CHECK_THROWS_AS(cfg.validate(), DomainError);
  cfg.points = 100;
  cfg.r_max = -1.0;
  CHECK_THROWS_AS(cfg.validate(), DomainError);
  CHECK_THROWS_AS(cartesian_problem(-0.5, 1, 1.0), DomainError);
}

TEST_CASE("closed-form residuals", "[verify]") {
  for (int d : {2, 3, 5}) {
    for (double mu : {-0.3, 0.0, 0.4}) {
      const DeformationParams p = sym(d, mu);
      for (int t : {0, 1, 2}) {
        const AngularState st = sweep_state(d, HalfInteger::from_twice(t));
        for (int n = 0; n < 3; ++n) CHECK(residual_check(Oscillator{1.0}, p, st, n) < 1e-6);
      }
    }
  }
  CHECK(residual_check(Coulomb{1.0}, sym(3, 0.0), AngularState::ground(3), 0) < 1e-6);
  CHECK(residual_check(Pseudoharmonic{8.0, 1.0}, sym(3, 0.0), AngularState::ground(3), 0) < 1e-5);
}

TEST_CASE("residual detects a wrong energy", "[verify]") {
  // the closed form solves its own operator; a perturbed scale breaks it
  ResidualGrid g;
  g.step = 1e-3;
  const double good = residual_check(Coulomb{1.0}, sym(4, 0.4), AngularState::ground(4), 1, g);
  CHECK(good < 1e-6);
  const double other_units = residual_check(Coulomb{1.0}, sym(4, 0.4), AngularState::ground(4), 1, g, Units{1.0, 2.0});
  CHECK(other_units < 1e-6);
}

TEST_CASE("Gram matrices are the identity", "[verify]") {
  const GramReport g = orthogonality_matrix(Oscillator{1.0}, sym(3, 0.4), AngularState::ground(3), 5);
  CHECK(g.max_off_diagonal < 1e-9);
  CHECK(g.max_diagonal_deviation < 1e-10);
  const GramReport c = orthogonality_matrix(Coulomb{1.0}, sym(3, 0.0), AngularState::ground(3), 6);
  CHECK(c.max_off_diagonal < 1e-9);
  CHECK(c.max_diagonal_deviation < 1e-10);
  const GramReport h = orthogonality_matrix(Pseudoharmonic{2.0, 1.0}, sym(4, 0.4), AngularState::ground(4), 5);
  CHECK(h.max_off_diagonal < 1e-9);
}

TEST_CASE("sweep cases run concurrently", "[verify]") {
  auto cases = cartesian_sweep();
  REQUIRE(cases.size() == 6);
  const OracleReport rep = run_sweep(cases, {}, 3);
  CHECK(rep.passed);
  for (const auto& c : rep.cases) {
    CHECK(c.analytic.size() == 3);
    CHECK(c.numeric.size() == 3);
    CHECK(c.error.empty());
  }
  OracleCase bad = cases[0];
  bad.mu = {-0.7};
  const auto r = run_case(bad);
  CHECK_FALSE(r.passed);
  CHECK_FALSE(r.error.empty());
}
