// Copyright 2026 The dunkl-sd Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file verify.hpp
 * @brief Numerical Sturm-Liouville oracle for the radial and 1D parity equations.
 *
 * The eigenproblem
 *
 *   -kappa [U'' + (c/r) U'] + [V(r) + kappa q / r^2] U = E U,   kappa = hbar^2 / 2m,
 *
 * is rewritten with U = r^k w, where k is a root of k (k + c - 1) = q: 2L for the
 * Dunkl problems (the smaller root when c + 4L < 1) and (1 - s)/2 in 1D.
 * The inverse-square term then cancels and w solves the self-adjoint form
 *
 *   -kappa r^{-B} (r^B w')' + V w = E w,   B = c + 2k,
 *
 * with w'(0) = 0 and w(r_max) = 0. This is discretized by cell-centred finite
 * volumes with exact cell masses int r^B dr, harmonic-mean face coefficients
 * kappa / int r^{-B} dr and exact cell integrals of V r^B. The symmetrized
 * matrix M^{-1/2} A M^{-1/2} is tridiagonal; its lowest eigenvalues come from
 * Sturm bisection. The zero-flux condition keeps the r^k branch even when both
 * roots are square integrable; a Dirichlet condition on u = r^{c/2} U at the
 * origin would select the other branch whenever c + 4L < 1.
 */

#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "dunkl/cartesian.hpp"
#include "dunkl/core.hpp"
#include "dunkl/polar.hpp"
#include "dunkl/spectra.hpp"
#include "dunkl/tridiagonal.hpp"

namespace dunkl {

/// Node placement r = r_max g(x) on cell centres x_i = (i - 1/2) dx, dx = 1/(N + 1/2).
enum class GridKind {
  uniform,    ///< g(x) = x
  quadratic,  ///< g(x) = x^2, refined near the origin
};

enum class Boundary { dirichlet_at_rmax };

struct DiscretizationConfig {
  double r_max = 0.0;  ///< <= 0 selects the turning-point rule
  int points = 4000;   ///< N, at least 100
  GridKind grid = GridKind::uniform;
  Boundary boundary = Boundary::dirichlet_at_rmax;
  bool richardson = true;  ///< extrapolate from N and 2N

  /// Throws DomainError on N < 100 or a negative r_max.
  void validate() const;

  static DiscretizationConfig oscillator_default() { return {}; }
  static DiscretizationConfig coulomb_default() { return {0.0, 8000, GridKind::quadratic, Boundary::dirichlet_at_rmax, true}; }
};

/// V(r) = sum_i coefficient_i r^power_i.
struct PowerTerm {
  double coefficient = 0.0;
  double power = 0.0;
};

/// One radial (or half-line) eigenproblem in the form documented above.
struct SturmLiouvilleProblem {
  double c = 0.0;            ///< first-derivative coefficient
  double centrifugal = 0.0;  ///< q
  double kinetic = 0.5;      ///< kappa = hbar^2 / 2m
  std::vector<PowerTerm> potential;
  std::optional<double> leading;  ///< k; unset: the larger indicial root

  double potential_at(double r) const;
  /// Indicial exponent k and the weight exponent B = c + 2k.
  double exponent() const;
  double weight_exponent() const { return c + 2.0 * exponent(); }
};

/// The radial equation for level data (no closed form is consulted).
SturmLiouvilleProblem radial_problem(const PotentialSpec& potential, const DeformationParams& params,
                                     const AngularState& state, const Units& units = {},
                                     PhoConvention convention = PhoConvention::as_published);

/// The half-line problem of a 1D parity sector: c = 2 mu, q = mu (1 - s).
SturmLiouvilleProblem cartesian_problem(double mu, int s, double omega, const Units& units = {});

/// The symmetrized N x N operator M^{-1/2} A M^{-1/2}.
SymmetricTridiagonal assemble_operator(const SturmLiouvilleProblem& problem, double r_max, int points, GridKind grid);

/// Lowest k eigenvalues of the discretization at fixed r_max and N.
std::vector<double> discrete_eigenvalues(const SturmLiouvilleProblem& problem, double r_max, int points,
                                         GridKind grid, int k);

struct EigenResult {
  std::vector<double> values;  ///< extrapolated if richardson, else the N-grid values
  std::vector<double> coarse;  ///< N grid
  std::vector<double> fine;    ///< 2N grid, empty without richardson
  double r_max = 0.0;
  int points = 0;
  GridKind grid = GridKind::uniform;
  bool richardson = false;
  double tail_estimate = 0.0;  ///< WKB estimate of the relative density at r_max for the top level
  bool tail_warning = false;   ///< tail_estimate above 1e-12
};

/// Full solve including the r_max rule and the post-hoc tail check.
/// Throws ConvergenceError if the r_max iteration does not settle.
EigenResult solve(const SturmLiouvilleProblem& problem, const DiscretizationConfig& cfg, int k);

std::vector<double> radial_eigenvalues(const PotentialSpec& potential, const DeformationParams& params,
                                       const AngularState& state, const DiscretizationConfig& cfg, int k,
                                       const Units& units = {}, PhoConvention convention = PhoConvention::as_published);

std::vector<double> cartesian_1d_eigenvalues(double mu, int s, double omega, const DiscretizationConfig& cfg, int k,
                                             const Units& units = {});

/// Observed order log2((E_N - E_2N) / (E_2N - E_4N)) for level index `level`,
/// without extrapolation, at the r_max chosen by the rule for N.
double fitted_order(const SturmLiouvilleProblem& problem, const DiscretizationConfig& cfg, int level);

struct ResidualGrid {
  double r_min = 0.0;  ///< <= 0: automatic
  double r_max = 0.0;  ///< <= 0: automatic
  int points = 200;
  double step = 0.0;   ///< <= 0: automatic finite-difference step
};

/**
 * max |L U - E U| / max(|kappa U''| + |kappa c U' / r| + |V_eff U| + |E U|)
 * over an interior grid, with derivatives of the closed-form U by 4th-order
 * central differences. For the pseudoharmonic oscillator the operator is the
 * harmonic-plus-inverse-square form with Omega and delta^2.
 */
double residual_check(const PotentialSpec& potential, const DeformationParams& params, const AngularState& state,
                      int n, const ResidualGrid& grid = {}, const Units& units = {},
                      PhoConvention convention = PhoConvention::as_published);

struct GramReport {
  std::vector<std::vector<double>> matrix;
  double max_off_diagonal = 0.0;
  double max_diagonal_deviation = 0.0;
};

/// Gram matrix of radial states n = 0..n_max-1 under r^c dr.
GramReport orthogonality_matrix(const PotentialSpec& potential, const DeformationParams& params,
                                const AngularState& state, int n_max, const Units& units = {},
                                PhoConvention convention = PhoConvention::as_published);

/// One configuration of the oracle sweep.
struct OracleCase {
  std::string kind;  ///< "oscillator", "coulomb", "pho" or "cartesian"
  PotentialSpec potential = Oscillator{};
  std::vector<double> mu;
  std::vector<int> two_ell;  ///< radial cases
  std::vector<int> parity;   ///< radial cases: d entries; cartesian: one entry
  int levels = 3;
  double tolerance = 1e-4;   ///< relative
  DiscretizationConfig cfg;
};

struct OracleCaseResult {
  OracleCase spec;
  std::vector<double> analytic;
  std::vector<double> numeric;
  std::vector<double> abs_error;
  std::vector<double> rel_error;
  double r_max = 0.0;
  int points = 0;
  bool tail_warning = false;
  bool passed = false;
  std::string error;  ///< set if the case threw
};

struct OracleReport {
  std::vector<OracleCaseResult> cases;
  bool passed = true;
  double seconds = 0.0;
};

/// Runs one case against the closed form.
OracleCaseResult run_case(const OracleCase& c, const Units& units = {});

/// Runs all cases, concurrently on up to `threads` workers (0: hardware concurrency).
OracleReport run_sweep(const std::vector<OracleCase>& cases, const Units& units = {}, unsigned threads = 0);

/// The oscillator, Coulomb, pseudoharmonic and 1D parity sweeps of the acceptance suite.
std::vector<OracleCase> oscillator_sweep();
std::vector<OracleCase> coulomb_sweep();
std::vector<OracleCase> pho_sweep();
std::vector<OracleCase> cartesian_sweep();
std::vector<OracleCase> default_sweep();

/// Angular state with l_1 = L and the remaining l_k = 0 in dimension d; a
/// half-integer L is placed in the s_2 = -1 sector.
AngularState sweep_state(int d, HalfInteger L);

}  // namespace dunkl
