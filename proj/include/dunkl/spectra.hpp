// Copyright 2026 The dunkl-sd Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file spectra.hpp
 * @brief Closed-form bound states of the radial Dunkl equation
 *
 *   -(hbar^2 / 2m) [U'' + (c/r) U'] + [V(r) + hbar^2 varpi^2 / (2 m r^2)] U = E U,
 *   c = d - 1 + 2 sum mu,
 *
 * for the isotropic oscillator, the pseudoharmonic oscillator and the Coulomb
 * potential. Radial functions are normalized under r^c dr.
 */

#pragma once

#include <string>
#include <variant>
#include <vector>

#include "dunkl/core.hpp"
#include "dunkl/polar.hpp"

namespace dunkl {

/// V = m omega^2 r^2 / 2.
struct Oscillator {
  double omega = 1.0;
};

/// V = D_e (r / r_e - r_e / r)^2.
struct Pseudoharmonic {
  double De = 1.0;
  double re = 1.0;
};

/// V = -e2 / r.
struct Coulomb {
  double e2 = 1.0;
};

using PotentialSpec = std::variant<Oscillator, Pseudoharmonic, Coulomb>;

/// "oscillator", "pho" or "coulomb".
std::string potential_name(const PotentialSpec& potential);

/// Throws DomainError unless every parameter is positive and finite.
void validate(const PotentialSpec& potential);

/// V(r) for the literal potential.
double potential_value(const PotentialSpec& potential, double r, const Units& units = {});

/**
 * Frequency convention for the pseudoharmonic oscillator.
 *
 * as_published uses Omega^2 = 4 D_e / (m r_e^2), the value behind the
 * closed-form spectrum. from_potential uses Omega^2 = 2 D_e / (m r_e^2), the
 * value obtained by expanding D_e (r/r_e - r_e/r)^2; the two spectra differ.
 */
enum class PhoConvention { as_published, from_potential };

/// Parameters of the pseudoharmonic radial equation
///   U'' + (c/r) U' - (m Omega / hbar)^2 r^2 U - (delta^2 / r^2) U + (2m / hbar^2) calE U = 0,
/// with delta^2 = varpi^2 + 2 m D_e r_e^2 / hbar^2 and calE = E + 2 D_e.
struct PhoParameters {
  double delta_sq = 0.0;
  double omega = 0.0;  ///< Omega
  double shift = 0.0;  ///< E = calE - shift, shift = 2 D_e
};

PhoParameters pho_parameters(const AngularState& state, const DeformationParams& params, double De, double re,
                             const Units& units = {}, PhoConvention convention = PhoConvention::as_published);

/// 2 hbar omega (n + L + (d + 2 sum mu) / 4).
double oscillator_energy(int n, const AngularState& state, const DeformationParams& params, double omega,
                         const Units& units = {});

/**
 * -2 D_e + 4 hbar sqrt(D_e / (m r_e^2)) [n + 1/2 + 1/2 sqrt(1 + (S + d/2)(S + d/2 - 2) + varpi^2 + 2 D_e m r_e^2 / hbar^2)]
 * with S = sum mu (as_published). With from_potential the frequency factor uses
 * Omega^2 = 2 D_e / (m r_e^2) instead.
 */
double pho_energy(int n, const AngularState& state, const DeformationParams& params, double De, double re,
                  const Units& units = {}, PhoConvention convention = PhoConvention::as_published);

/// -2 D_e + hbar Omega [2n + 1 + 1/2 sqrt((c-1)^2 + 4 delta^2)], the same spectrum
/// written through the radial-equation parameters.
double pho_energy_from_parameters(int n, const PhoParameters& pho, const DeformationParams& params,
                                  const Units& units = {});

/// -(m e2^2 / 2 hbar^2) / [n + 2L + sum mu + (d-1)/2]^2. Throws DomainError if the
/// bracket is not positive.
double coulomb_energy(int n, const AngularState& state, const DeformationParams& params, double e2,
                      const Units& units = {});

/// Energy of level n for any potential.
double energy(const PotentialSpec& potential, int n, const AngularState& state, const DeformationParams& params,
              const Units& units = {}, PhoConvention convention = PhoConvention::as_published);

/**
 * Large-d series -(2 m e2^2 / hbar^2) [1/d^2 - 4X/d^3 + ...], X = n + 2L + sum mu - 1/2,
 * truncated after `order` terms (1 or 2).
 */
double coulomb_large_d_expansion(int n, const AngularState& state, const DeformationParams& params, double e2,
                                 int order, const Units& units = {});

/// Magnitude of the first omitted term: (2 m e2^2 / hbar^2) 12 X^2 / d^4 for order 2,
/// (2 m e2^2 / hbar^2) 4 |X| / d^3 for order 1.
double coulomb_large_d_remainder(int n, const AngularState& state, const DeformationParams& params, double e2,
                                 int order, const Units& units = {});

/**
 * Bound state in one of two forms:
 *
 *   harmonic (oscillator, pho): U = C (sqrt(beta) r)^k e^{-beta r^2 / 2} M(-n, b, beta r^2)
 *   coulomb:                    U = C (2 eta r)^k e^{-eta r} M(-n, b, 2 eta r)
 *
 * with leading exponent k, the regular root of k (k + c - 1) = varpi^2 (or delta^2).
 */
struct RadialSolution {
  enum class Form { harmonic, coulomb };

  PotentialSpec potential;
  Form form = Form::harmonic;
  int n = 0;
  int dimension = 0;
  double measure_exponent = 0.0;  ///< c
  double exponent = 0.0;          ///< k
  double scale = 0.0;             ///< beta = m Omega / hbar, or eta
  double a = 0.0;                 ///< -n
  double b = 0.0;
  double energy = 0.0;
  double norm_constant = 1.0;
  double centrifugal = 0.0;       ///< varpi^2 (or delta^2 for pho)
  Units units;
};

/// Builds and normalizes level n. Throws DomainError when no bound state exists.
RadialSolution radial_solution(const PotentialSpec& potential, int n, const AngularState& state,
                               const DeformationParams& params, const Units& units = {},
                               PhoConvention convention = PhoConvention::as_published);

/// U(r) for either form.
double radial_wavefunction(const RadialSolution& sol, double r);
/// U(r); throws DomainError unless sol is a harmonic-form solution.
double oscillator_radial_wavefunction(const RadialSolution& sol, double r);
/// U(r); throws DomainError unless sol is a Coulomb solution.
double coulomb_radial_wavefunction(const RadialSolution& sol, double r);

/// |U(r)|^2 r^c.
double reduced_density(const RadialSolution& sol, double r);

/// int U_a U_b r^c dr by Gauss quadrature matched to the exponential factor.
/// Both solutions must come from the same potential and angular state.
double radial_overlap(const RadialSolution& a, const RadialSolution& b);

/// <r^p> in level sol, by the same quadrature with the weight exponent shifted by p.
/// Requires 2k + c + p > -1.
double radial_moment(const RadialSolution& sol, double p);

struct EnergyLevel {
  int n = 0;
  double energy = 0.0;
  std::string potential;
};

/// Levels n = 0..count-1 of one angular state, ascending.
std::vector<EnergyLevel> spectrum(const PotentialSpec& potential, const AngularState& state,
                                  const DeformationParams& params, int count, const Units& units = {},
                                  PhoConvention convention = PhoConvention::as_published);

}  // namespace dunkl
