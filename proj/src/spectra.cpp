// Copyright 2026 The dunkl-sd Authors
// SPDX-License-Identifier: Apache-2.0

#include "dunkl/spectra.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "dunkl/errors.hpp"
#include "dunkl/quadrature.hpp"
#include "dunkl/specfun.hpp"

namespace dunkl {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

void check_common(int n, const AngularState& state, const DeformationParams& params, const Units& units) {
  if (n < 0) throw DomainError("radial quantum number n must be non-negative");
  if (state.dimension() != params.dimension()) {
    throw DomainError("angular state and deformation parameters disagree on d");
  }
  if (!(units.hbar > 0.0) || !(units.mass > 0.0)) throw DomainError("hbar and mass must be positive");
}

void check_positive(double v, const char* name) {
  if (!(v > 0.0) || !std::isfinite(v)) throw DomainError(std::string(name) + " must be positive and finite");
}

// N = n + 2L + sum mu + (d - 1)/2
double coulomb_principal(int n, const AngularState& state, const DeformationParams& params) {
  return n + 2.0 * state.total().value() + params.sum_mu() + 0.5 * (params.dimension() - 1);
}

// X = n + 2L + sum mu - 1/2, so that N = d/2 + X
double coulomb_large_d_shift(int n, const AngularState& state, const DeformationParams& params) {
  return n + 2.0 * state.total().value() + params.sum_mu() - 0.5;
}

// regular root of k (k + c - 1) = q
double regular_exponent(double c, double q) {
  const double cm1 = c - 1.0;
  const double disc = cm1 * cm1 + 4.0 * q;
  if (disc < 0.0) throw DomainError("indicial equation has no real root");
  return 0.5 * (-cm1 + std::sqrt(disc));
}

// int U_a U_b r^{c + p} dr, including the normalization constants
double raw_overlap(const RadialSolution& a, const RadialSolution& b, double p) {
  if (a.form != b.form || a.measure_exponent != b.measure_exponent) {
    throw DomainError("radial_overlap: solutions belong to different problems");
  }
  const double c = a.measure_exponent;
  const double gamma = a.exponent + b.exponent + c + p;
  if (!(gamma > -1.0)) throw DomainError("radial moment diverges at the origin");
  if (a.form == RadialSolution::Form::harmonic) {
    const double sigma = 0.5 * (a.scale + b.scale);
    const double ra = a.scale / sigma, rb = b.scale / sigma;
    const QuadratureRule rule = build_quadrature(gamma, WeightKind::exp_r2, a.n + b.n + 2);
    const double integral = rule.integrate([&](double t) {
      const double t2 = t * t;
      return specfun::kummer_m(a.a, a.b, ra * t2) * specfun::kummer_m(b.a, b.b, rb * t2);
    });
    return a.norm_constant * b.norm_constant * std::pow(ra, 0.5 * a.exponent) * std::pow(rb, 0.5 * b.exponent) *
           std::pow(sigma, -0.5 * (c + p + 1.0)) * integral;
  }
  const double sigma = a.scale + b.scale;
  const double ra = 2.0 * a.scale / sigma, rb = 2.0 * b.scale / sigma;
  const QuadratureRule rule = build_quadrature(gamma, WeightKind::exp_r, (a.n + b.n) / 2 + 2);
  const double integral = rule.integrate([&](double z) {
    return specfun::kummer_m(a.a, a.b, ra * z) * specfun::kummer_m(b.a, b.b, rb * z);
  });
  return a.norm_constant * b.norm_constant * std::pow(ra, a.exponent) * std::pow(rb, b.exponent) *
         std::pow(sigma, -(c + p + 1.0)) * integral;
}

}  // namespace

std::string potential_name(const PotentialSpec& potential) {
  return std::visit(Overloaded{[](const Oscillator&) { return std::string("oscillator"); },
                               [](const Pseudoharmonic&) { return std::string("pho"); },
                               [](const Coulomb&) { return std::string("coulomb"); }},
                    potential);
}

void validate(const PotentialSpec& potential) {
  std::visit(Overloaded{[](const Oscillator& o) { check_positive(o.omega, "omega"); },
                        [](const Pseudoharmonic& p) {
                          check_positive(p.De, "D_e");
                          check_positive(p.re, "r_e");
                        },
                        [](const Coulomb& c) { check_positive(c.e2, "e2"); }},
             potential);
}

double potential_value(const PotentialSpec& potential, double r, const Units& units) {
  return std::visit(Overloaded{[&](const Oscillator& o) { return 0.5 * units.mass * o.omega * o.omega * r * r; },
                               [&](const Pseudoharmonic& p) {
                                 const double t = r / p.re - p.re / r;
                                 return p.De * t * t;
                               },
                               [&](const Coulomb& c) { return -c.e2 / r; }},
                    potential);
}

PhoParameters pho_parameters(const AngularState& state, const DeformationParams& params, double De, double re,
                             const Units& units, PhoConvention convention) {
  check_common(0, state, params, units);
  check_positive(De, "D_e");
  check_positive(re, "r_e");
  PhoParameters out;
  const double m = units.mass, hbar = units.hbar;
  out.delta_sq = varpi_sq(state, params) + 2.0 * m * De * re * re / (hbar * hbar);
  const double factor = convention == PhoConvention::as_published ? 4.0 : 2.0;
  out.omega = std::sqrt(factor * De / (m * re * re));
  out.shift = 2.0 * De;
  return out;
}

double oscillator_energy(int n, const AngularState& state, const DeformationParams& params, double omega,
                         const Units& units) {
  check_common(n, state, params, units);
  check_positive(omega, "omega");
  return 2.0 * units.hbar * omega *
         (n + state.total().value() + (params.dimension() + 2.0 * params.sum_mu()) / 4.0);
}

double pho_energy(int n, const AngularState& state, const DeformationParams& params, double De, double re,
                  const Units& units, PhoConvention convention) {
  check_common(n, state, params, units);
  check_positive(De, "D_e");
  check_positive(re, "r_e");
  const double m = units.mass, hbar = units.hbar;
  const double s = params.sum_mu() + 0.5 * params.dimension();
  const double radicand = 1.0 + s * (s - 2.0) + varpi_sq(state, params) + 2.0 * De * m * re * re / (hbar * hbar);
  if (radicand < 0.0) throw DomainError("pho_energy: negative radicand");
  // 4 hbar sqrt(D_e / m r_e^2) = 2 hbar Omega with the published frequency
  const double prefactor = convention == PhoConvention::as_published ? 4.0 * hbar * std::sqrt(De / (m * re * re))
                                                                     : 2.0 * hbar * std::sqrt(2.0 * De / (m * re * re));
  return -2.0 * De + prefactor * (n + 0.5 + 0.5 * std::sqrt(radicand));
}

double pho_energy_from_parameters(int n, const PhoParameters& pho, const DeformationParams& params,
                                  const Units& units) {
  if (n < 0) throw DomainError("radial quantum number n must be non-negative");
  const double cm1 = params.measure_exponent() - 1.0;
  return -pho.shift + units.hbar * pho.omega * (2.0 * n + 1.0 + 0.5 * std::sqrt(cm1 * cm1 + 4.0 * pho.delta_sq));
}

double coulomb_energy(int n, const AngularState& state, const DeformationParams& params, double e2,
                      const Units& units) {
  check_common(n, state, params, units);
  check_positive(e2, "e2");
  const double big_n = coulomb_principal(n, state, params);
  if (!(big_n > 0.0)) {
    std::ostringstream os;
    os << "coulomb_energy: n + 2L + sum mu + (d-1)/2 = " << big_n << " is not positive; no bound state";
    throw DomainError(os.str());
  }
  const double hbar = units.hbar;
  return -(units.mass * e2 * e2 / (2.0 * hbar * hbar)) / (big_n * big_n);
}

double energy(const PotentialSpec& potential, int n, const AngularState& state, const DeformationParams& params,
              const Units& units, PhoConvention convention) {
  return std::visit(Overloaded{[&](const Oscillator& o) { return oscillator_energy(n, state, params, o.omega, units); },
                               [&](const Pseudoharmonic& p) {
                                 return pho_energy(n, state, params, p.De, p.re, units, convention);
                               },
                               [&](const Coulomb& c) { return coulomb_energy(n, state, params, c.e2, units); }},
                    potential);
}

double coulomb_large_d_expansion(int n, const AngularState& state, const DeformationParams& params, double e2,
                                 int order, const Units& units) {
  check_common(n, state, params, units);
  check_positive(e2, "e2");
  if (order != 1 && order != 2) throw DomainError("coulomb_large_d_expansion: order must be 1 or 2");
  const double d = params.dimension();
  const double pref = 2.0 * units.mass * e2 * e2 / (units.hbar * units.hbar);
  double series = 1.0 / (d * d);
  if (order == 2) series -= 4.0 * coulomb_large_d_shift(n, state, params) / (d * d * d);
  return -pref * series;
}

double coulomb_large_d_remainder(int n, const AngularState& state, const DeformationParams& params, double e2,
                                 int order, const Units& units) {
  check_common(n, state, params, units);
  check_positive(e2, "e2");
  if (order != 1 && order != 2) throw DomainError("coulomb_large_d_remainder: order must be 1 or 2");
  const double d = params.dimension();
  const double x = coulomb_large_d_shift(n, state, params);
  const double pref = 2.0 * units.mass * e2 * e2 / (units.hbar * units.hbar);
  // (1 + 2X/d)^{-2} = 1 - 4X/d + 12 X^2/d^2 - ...
  return order == 1 ? pref * 4.0 * std::fabs(x) / (d * d * d) : pref * 12.0 * x * x / (d * d * d * d);
}

RadialSolution radial_solution(const PotentialSpec& potential, int n, const AngularState& state,
                               const DeformationParams& params, const Units& units, PhoConvention convention) {
  check_common(n, state, params, units);
  validate(potential);
  RadialSolution sol;
  sol.potential = potential;
  sol.n = n;
  sol.dimension = params.dimension();
  sol.units = units;
  sol.a = -n;
  const double c = params.measure_exponent();
  sol.measure_exponent = c;
  const double hbar = units.hbar, m = units.mass;

  std::visit(Overloaded{[&](const Oscillator& o) {
                          sol.form = RadialSolution::Form::harmonic;
                          sol.centrifugal = varpi_sq(state, params);
                          sol.exponent = 2.0 * state.total().value();
                          sol.scale = m * o.omega / hbar;
                          sol.b = sol.exponent + 0.5 * (c + 1.0);
                          sol.energy = oscillator_energy(n, state, params, o.omega, units);
                        },
                        [&](const Pseudoharmonic& p) {
                          const PhoParameters pho = pho_parameters(state, params, p.De, p.re, units, convention);
                          sol.form = RadialSolution::Form::harmonic;
                          sol.centrifugal = pho.delta_sq;
                          sol.exponent = regular_exponent(c, pho.delta_sq);
                          sol.scale = m * pho.omega / hbar;
                          sol.b = sol.exponent + 0.5 * (c + 1.0);
                          sol.energy = pho_energy(n, state, params, p.De, p.re, units, convention);
                        },
                        [&](const Coulomb& q) {
                          sol.form = RadialSolution::Form::coulomb;
                          sol.centrifugal = varpi_sq(state, params);
                          sol.exponent = 2.0 * state.total().value();
                          sol.energy = coulomb_energy(n, state, params, q.e2, units);
                          sol.scale = std::sqrt(-2.0 * m * sol.energy) / hbar;
                          sol.b = 2.0 * sol.exponent + c;  // 4L + 2 sum mu + d - 1
                          if (specfun::is_nonpositive_integer(sol.b)) {
                            throw DomainError("coulomb radial solution: B = 4L + 2 sum mu + d - 1 is a non-positive integer");
                          }
                        }},
             potential);

  sol.norm_constant = 1.0;
  const double norm_sq = raw_overlap(sol, sol, 0.0);
  if (!(norm_sq > 0.0) || !std::isfinite(norm_sq)) {
    throw ConvergenceError("radial_solution: normalization integral is not positive");
  }
  sol.norm_constant = 1.0 / std::sqrt(norm_sq);
  return sol;
}

double radial_wavefunction(const RadialSolution& sol, double r) {
  if (sol.form == RadialSolution::Form::harmonic) {
    const double rho = sol.scale * r * r;
    return sol.norm_constant * std::pow(std::sqrt(sol.scale) * r, sol.exponent) * std::exp(-0.5 * rho) *
           specfun::kummer_m(sol.a, sol.b, rho);
  }
  const double zeta = 2.0 * sol.scale * r;
  return sol.norm_constant * std::pow(zeta, sol.exponent) * std::exp(-0.5 * zeta) *
         specfun::kummer_m(sol.a, sol.b, zeta);
}

double oscillator_radial_wavefunction(const RadialSolution& sol, double r) {
  if (sol.form != RadialSolution::Form::harmonic) {
    throw DomainError("oscillator_radial_wavefunction: solution is not of oscillator form");
  }
  return radial_wavefunction(sol, r);
}

double coulomb_radial_wavefunction(const RadialSolution& sol, double r) {
  if (sol.form != RadialSolution::Form::coulomb) {
    throw DomainError("coulomb_radial_wavefunction: solution is not of Coulomb form");
  }
  return radial_wavefunction(sol, r);
}

double reduced_density(const RadialSolution& sol, double r) {
  if (r < 0.0) return 0.0;
  if (r == 0.0) {
    // U ~ r^k at the origin, so the density behaves like r^{2k + c}
    const double p = 2.0 * sol.exponent + sol.measure_exponent;
    if (p > 0.0) return 0.0;
    if (p < 0.0) return std::numeric_limits<double>::infinity();
  }
  const double u = radial_wavefunction(sol, r);
  return u * u * std::pow(r, sol.measure_exponent);
}

double radial_overlap(const RadialSolution& a, const RadialSolution& b) { return raw_overlap(a, b, 0.0); }

double radial_moment(const RadialSolution& sol, double p) { return raw_overlap(sol, sol, p); }

std::vector<EnergyLevel> spectrum(const PotentialSpec& potential, const AngularState& state,
                                  const DeformationParams& params, int count, const Units& units,
                                  PhoConvention convention) {
  if (count < 0) throw DomainError("spectrum: level count must be non-negative");
  std::vector<EnergyLevel> levels;
  levels.reserve(static_cast<std::size_t>(count));
  for (int n = 0; n < count; ++n) {
    levels.push_back({n, energy(potential, n, state, params, units, convention), potential_name(potential)});
  }
  return levels;
}

}  // namespace dunkl
