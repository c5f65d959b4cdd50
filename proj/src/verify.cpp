// Copyright 2026 The dunkl-sd Authors
// SPDX-License-Identifier: Apache-2.0

#include "dunkl/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <limits>
#include <thread>

#include "dunkl/errors.hpp"
#include "dunkl/tridiagonal.hpp"

namespace dunkl {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

constexpr double kTailThreshold = 1e-12;

// int_lo^hi r^p dr for 0 <= lo < hi, accurate for narrow intervals
double power_integral(double lo, double hi, double p) {
  const double q = p + 1.0;
  if (lo == 0.0) {
    if (!(q > 0.0)) throw DomainError("power_integral: r^p is not integrable at the origin");
    return std::pow(hi, q) / q;
  }
  const double lr = std::log(hi / lo);
  if (std::fabs(q) < 1e-14) return lr;
  return std::pow(lo, q) * std::expm1(q * lr) / q;
}

double grid_map(GridKind grid, double x) { return grid == GridKind::uniform ? x : x * x; }

double grid_spacing(int points) { return 1.0 / (points + 0.5); }

double term_coefficient(const SturmLiouvilleProblem& p, double power) {
  double c = 0.0;
  for (const auto& t : p.potential) {
    if (t.power == power) c += t.coefficient;
  }
  return c;
}

double effective_potential(const SturmLiouvilleProblem& p, double r) {
  return p.potential_at(r) + p.kinetic * p.centrifugal / (r * r);
}

// WKB estimate of |U|^2 at r_max relative to its value at the outer turning point
double tail_estimate(const SturmLiouvilleProblem& p, double energy, double r_max) {
  if (effective_potential(p, r_max) <= energy) return 1.0;
  // outer turning point by scanning inward, then bisection
  const int scan = 2000;
  double lo = 0.0, hi = r_max;
  for (int i = scan - 1; i >= 1; --i) {
    const double r = r_max * i / scan;
    if (effective_potential(p, r) <= energy) {
      lo = r;
      hi = r_max * (i + 1) / scan;
      break;
    }
  }
  if (lo == 0.0) return 0.0;  // classically forbidden everywhere outside the first scan cell
  for (int it = 0; it < 100; ++it) {
    const double mid = 0.5 * (lo + hi);
    (effective_potential(p, mid) <= energy ? lo : hi) = mid;
  }
  const int steps = 2000;
  const double h = (r_max - hi) / steps;
  double action = 0.0;
  for (int i = 0; i <= steps; ++i) {
    const double r = hi + i * h;
    const double f = std::sqrt(std::max(0.0, (effective_potential(p, r) - energy) / p.kinetic));
    action += (i == 0 || i == steps) ? 0.5 * f : f;
  }
  action *= h;
  return std::exp(-2.0 * action);
}

enum class TailKind { gaussian, coulombic, other };

TailKind tail_kind(const SturmLiouvilleProblem& p) {
  if (term_coefficient(p, 2.0) > 0.0) return TailKind::gaussian;
  if (term_coefficient(p, -1.0) < 0.0) return TailKind::coulombic;
  return TailKind::other;
}

// the turning-point rule, iterated on the N grid until r_max settles
double choose_r_max(const SturmLiouvilleProblem& p, const DiscretizationConfig& cfg, int k) {
  const TailKind kind = tail_kind(p);
  if (kind == TailKind::other) return 20.0;
  double r_max = 0.0;
  if (kind == TailKind::gaussian) {
    const double beta = std::sqrt(term_coefficient(p, 2.0) / p.kinetic);
    r_max = std::sqrt((4.0 * k + p.weight_exponent() + 40.0) / beta);
  } else {
    const double bohr = 2.0 * p.kinetic / -term_coefficient(p, -1.0);
    r_max = 40.0 * bohr * k * k;
  }
  for (int it = 0; it < 40; ++it) {
    const double e = discrete_eigenvalues(p, r_max, cfg.points, cfg.grid, k).back();
    double next = r_max;
    if (kind == TailKind::gaussian) {
      const double a2 = term_coefficient(p, 2.0);
      const double a0 = term_coefficient(p, 0.0);
      const double beta = std::sqrt(a2 / p.kinetic);
      // r^2 - r_t^2 >= (r - r_t)^2 bounds the WKB decay below by e^{-40}
      const double rt = std::sqrt(std::max(0.0, (e - a0) / a2));
      next = rt + std::sqrt(40.0 / beta);
    } else {
      if (e >= 0.0) {
        r_max *= 2.0;
        continue;
      }
      const double rt = -term_coefficient(p, -1.0) / -e;
      const double eta = std::sqrt(-e / p.kinetic);
      next = std::max(6.0 * rt, rt + 20.0 / eta);
    }
    if (std::fabs(next - r_max) <= 0.02 * r_max) return next;
    r_max = next;
  }
  throw ConvergenceError("verify: the r_max turning-point iteration did not settle");
}

double regular_root(double c, double q) {
  const double cm1 = c - 1.0;
  const double disc = cm1 * cm1 + 4.0 * q;
  if (disc < 0.0) throw DomainError("verify: indicial equation has no real root");
  return 0.5 * (-cm1 + std::sqrt(disc));
}

AngularState state_from(const std::vector<int>& two_ell, const std::vector<int>& parity) {
  return AngularState(two_ell, ParityVector(parity));
}

}  // namespace

void DiscretizationConfig::validate() const {
  if (points < 100) throw DomainError("DiscretizationConfig: N must be at least 100");
  if (r_max < 0.0 || !std::isfinite(r_max)) throw DomainError("DiscretizationConfig: r_max must be positive");
}

double SturmLiouvilleProblem::potential_at(double r) const {
  double v = 0.0;
  for (const auto& t : potential) v += t.coefficient * std::pow(r, t.power);
  return v;
}

double SturmLiouvilleProblem::exponent() const {
  if (!leading) return regular_root(c, centrifugal);
  const double k = *leading;
  if (std::fabs(k * (k + c - 1.0) - centrifugal) > 1e-10 * (1.0 + std::fabs(centrifugal))) {
    throw DomainError("SturmLiouvilleProblem: leading exponent does not solve the indicial equation");
  }
  return k;
}

SturmLiouvilleProblem radial_problem(const PotentialSpec& potential, const DeformationParams& params,
                                     const AngularState& state, const Units& units, PhoConvention convention) {
  if (state.dimension() != params.dimension()) throw DomainError("radial_problem: state and parameters disagree on d");
  validate(potential);
  SturmLiouvilleProblem p;
  p.c = params.measure_exponent();
  p.kinetic = units.hbar * units.hbar / (2.0 * units.mass);
  p.centrifugal = varpi_sq(state, params);
  p.leading = 2.0 * state.total().value();
  std::visit(Overloaded{[&](const Oscillator& o) {
                          p.potential = {{0.5 * units.mass * o.omega * o.omega, 2.0}};
                        },
                        [&](const Pseudoharmonic& h) {
                          const PhoParameters pho = pho_parameters(state, params, h.De, h.re, units, convention);
                          p.centrifugal = pho.delta_sq;
                          p.leading.reset();
                          p.potential = {{0.5 * units.mass * pho.omega * pho.omega, 2.0}, {-pho.shift, 0.0}};
                        },
                        [&](const Coulomb& q) { p.potential = {{-q.e2, -1.0}}; }},
             potential);
  return p;
}

SturmLiouvilleProblem cartesian_problem(double mu, int s, double omega, const Units& units) {
  if (!(mu > -0.5)) throw DomainError("cartesian_problem: mu must exceed -1/2");
  if (s != 1 && s != -1) throw DomainError("cartesian_problem: parity must be +1 or -1");
  if (!(omega > 0.0)) throw DomainError("cartesian_problem: omega must be positive");
  SturmLiouvilleProblem p;
  // D^2 f = f'' + (2 mu / x) f' - mu (1 - s) f / x^2 on a parity-s function
  p.c = 2.0 * mu;
  p.centrifugal = mu * (1 - s);
  p.leading = 0.5 * (1 - s);
  p.kinetic = units.hbar * units.hbar / (2.0 * units.mass);
  p.potential = {{0.5 * units.mass * omega * omega, 2.0}};
  return p;
}

SymmetricTridiagonal assemble_operator(const SturmLiouvilleProblem& problem, double r_max, int points, GridKind grid) {
  if (points < 2) throw DomainError("assemble_operator: need at least two cells");
  if (!(r_max > 0.0)) throw DomainError("assemble_operator: r_max must be positive");
  const double bw = problem.weight_exponent();
  const std::size_t n = static_cast<std::size_t>(points);
  const double dx = grid_spacing(points);

  std::vector<double> face(n + 1), node(n + 1);  // node[i] is the centre of cell i+1; node[n] = r_max
  for (std::size_t i = 0; i <= n; ++i) face[i] = r_max * grid_map(grid, static_cast<double>(i) * dx);
  for (std::size_t i = 0; i <= n; ++i) node[i] = r_max * grid_map(grid, (static_cast<double>(i) + 0.5) * dx);

  std::vector<double> mass(n), diag(n, 0.0), flux(n);
  for (std::size_t i = 0; i < n; ++i) {
    mass[i] = power_integral(face[i], face[i + 1], bw);
    double v = 0.0;
    for (const auto& t : problem.potential) v += t.coefficient * power_integral(face[i], face[i + 1], bw + t.power);
    diag[i] = v;
    flux[i] = problem.kinetic / power_integral(node[i], node[i + 1], -bw);
  }
  SymmetricTridiagonal t;
  t.diag.resize(n);
  t.off.resize(n - 1);
  for (std::size_t i = 0; i < n; ++i) {
    const double left = i == 0 ? 0.0 : flux[i - 1];
    t.diag[i] = (diag[i] + left + flux[i]) / mass[i];
    if (i + 1 < n) t.off[i] = -flux[i] / std::sqrt(mass[i] * mass[i + 1]);
  }
  return t;
}

std::vector<double> discrete_eigenvalues(const SturmLiouvilleProblem& problem, double r_max, int points,
                                         GridKind grid, int k) {
  if (k < 1 || k > points) throw DomainError("discrete_eigenvalues: bad level count");
  return assemble_operator(problem, r_max, points, grid).smallest_eigenvalues(static_cast<std::size_t>(k));
}

EigenResult solve(const SturmLiouvilleProblem& problem, const DiscretizationConfig& cfg, int k) {
  cfg.validate();
  if (k < 1) throw DomainError("solve: need at least one level");
  EigenResult out;
  out.points = cfg.points;
  out.grid = cfg.grid;
  out.richardson = cfg.richardson;
  out.r_max = cfg.r_max > 0.0 ? cfg.r_max : choose_r_max(problem, cfg, k);
  out.coarse = discrete_eigenvalues(problem, out.r_max, cfg.points, cfg.grid, k);
  out.values = out.coarse;
  if (cfg.richardson) {
    out.fine = discrete_eigenvalues(problem, out.r_max, 2 * cfg.points, cfg.grid, k);
    const double hc = grid_spacing(cfg.points), hf = grid_spacing(2 * cfg.points);
    const double wc = hc * hc, wf = hf * hf;
    for (std::size_t i = 0; i < out.values.size(); ++i) {
      out.values[i] = (wc * out.fine[i] - wf * out.coarse[i]) / (wc - wf);
    }
  }
  out.tail_estimate = tail_estimate(problem, out.values.back(), out.r_max);
  out.tail_warning = out.tail_estimate > kTailThreshold;
  return out;
}

std::vector<double> radial_eigenvalues(const PotentialSpec& potential, const DeformationParams& params,
                                       const AngularState& state, const DiscretizationConfig& cfg, int k,
                                       const Units& units, PhoConvention convention) {
  return solve(radial_problem(potential, params, state, units, convention), cfg, k).values;
}

std::vector<double> cartesian_1d_eigenvalues(double mu, int s, double omega, const DiscretizationConfig& cfg, int k,
                                             const Units& units) {
  return solve(cartesian_problem(mu, s, omega, units), cfg, k).values;
}

double fitted_order(const SturmLiouvilleProblem& problem, const DiscretizationConfig& cfg, int level) {
  cfg.validate();
  const int k = level + 1;
  const double r_max = cfg.r_max > 0.0 ? cfg.r_max : choose_r_max(problem, cfg, k);
  const double e1 = discrete_eigenvalues(problem, r_max, cfg.points, cfg.grid, k).back();
  const double e2 = discrete_eigenvalues(problem, r_max, 2 * cfg.points, cfg.grid, k).back();
  const double e4 = discrete_eigenvalues(problem, r_max, 4 * cfg.points, cfg.grid, k).back();
  return std::log2((e1 - e2) / (e2 - e4));
}

double residual_check(const PotentialSpec& potential, const DeformationParams& params, const AngularState& state,
                      int n, const ResidualGrid& grid, const Units& units, PhoConvention convention) {
  const RadialSolution sol = radial_solution(potential, n, state, params, units, convention);
  const double kappa = units.hbar * units.hbar / (2.0 * units.mass);
  const double c = params.measure_exponent();

  std::function<double(double)> v_eff;
  double e = sol.energy;
  double length = 0.0, r_hi = 0.0;
  if (sol.form == RadialSolution::Form::harmonic) {
    length = 1.0 / std::sqrt(sol.scale);
    r_hi = 3.0 * std::sqrt(2.0 * n + sol.b) * length;
  } else {
    length = 1.0 / sol.scale;
    r_hi = (n + sol.b + 10.0) * 0.5 * length;
  }
  if (const auto* pho = std::get_if<Pseudoharmonic>(&potential)) {
    const PhoParameters pp = pho_parameters(state, params, pho->De, pho->re, units, convention);
    const double a2 = 0.5 * units.mass * pp.omega * pp.omega;
    const double q = pp.delta_sq;
    v_eff = [=](double r) { return a2 * r * r + kappa * q / (r * r); };
    e += pp.shift;
  } else {
    const double q = varpi_sq(state, params);
    v_eff = [=, &potential](double r) { return potential_value(potential, r, units) + kappa * q / (r * r); };
  }

  const double r_lo = grid.r_min > 0.0 ? grid.r_min : 0.05 * length;
  if (grid.r_max > 0.0) r_hi = grid.r_max;
  const double h = grid.step > 0.0 ? grid.step : 2e-3 * length;
  if (r_lo - 2.0 * h <= 0.0) throw DomainError("residual_check: finite-difference stencil crosses the origin");
  const int m = std::max(grid.points, 3);

  double worst = 0.0, scale = 0.0;
  for (int i = 0; i < m; ++i) {
    const double r = r_lo + (r_hi - r_lo) * i / (m - 1);
    const double u0 = radial_wavefunction(sol, r);
    const double up1 = radial_wavefunction(sol, r + h), um1 = radial_wavefunction(sol, r - h);
    const double up2 = radial_wavefunction(sol, r + 2.0 * h), um2 = radial_wavefunction(sol, r - 2.0 * h);
    const double d1 = (-up2 + 8.0 * up1 - 8.0 * um1 + um2) / (12.0 * h);
    const double d2 = (-up2 + 16.0 * up1 - 30.0 * u0 + 16.0 * um1 - um2) / (12.0 * h * h);
    const double kin2 = -kappa * d2, kin1 = -kappa * c * d1 / r;
    const double pot = v_eff(r) * u0, en = e * u0;
    worst = std::max(worst, std::fabs(kin2 + kin1 + pot - en));
    scale = std::max(scale, std::fabs(kin2) + std::fabs(kin1) + std::fabs(pot) + std::fabs(en));
  }
  return worst / scale;
}

GramReport orthogonality_matrix(const PotentialSpec& potential, const DeformationParams& params,
                                const AngularState& state, int n_max, const Units& units, PhoConvention convention) {
  if (n_max < 1) throw DomainError("orthogonality_matrix: n_max must be positive");
  std::vector<RadialSolution> sols;
  for (int n = 0; n < n_max; ++n) sols.push_back(radial_solution(potential, n, state, params, units, convention));
  GramReport out;
  out.matrix.assign(static_cast<std::size_t>(n_max), std::vector<double>(static_cast<std::size_t>(n_max), 0.0));
  for (std::size_t i = 0; i < sols.size(); ++i) {
    for (std::size_t j = 0; j < sols.size(); ++j) {
      const double g = radial_overlap(sols[i], sols[j]);
      out.matrix[i][j] = g;
      if (i == j) {
        out.max_diagonal_deviation = std::max(out.max_diagonal_deviation, std::fabs(g - 1.0));
      } else {
        out.max_off_diagonal = std::max(out.max_off_diagonal, std::fabs(g));
      }
    }
  }
  return out;
}

OracleCaseResult run_case(const OracleCase& c, const Units& units) {
  OracleCaseResult res;
  res.spec = c;
  try {
    EigenResult eig;
    if (c.kind == "cartesian") {
      const auto* osc = std::get_if<Oscillator>(&c.potential);
      if (osc == nullptr || c.mu.size() != 1 || c.parity.size() != 1) {
        throw DomainError("cartesian oracle case needs an oscillator, one mu and one parity");
      }
      for (int n = 0; n < c.levels; ++n) res.analytic.push_back(energy_1d(n, c.mu[0], c.parity[0], osc->omega, units));
      eig = solve(cartesian_problem(c.mu[0], c.parity[0], osc->omega, units), c.cfg, c.levels);
    } else {
      const DeformationParams params(c.mu);
      const AngularState state = state_from(c.two_ell, c.parity);
      for (int n = 0; n < c.levels; ++n) res.analytic.push_back(energy(c.potential, n, state, params, units));
      eig = solve(radial_problem(c.potential, params, state, units), c.cfg, c.levels);
    }
    res.numeric = eig.values;
    res.r_max = eig.r_max;
    res.points = eig.points;
    res.tail_warning = eig.tail_warning;
    res.passed = true;
    for (std::size_t i = 0; i < res.analytic.size(); ++i) {
      const double abs_err = std::fabs(res.numeric[i] - res.analytic[i]);
      const double rel_err = abs_err / std::fabs(res.analytic[i]);
      res.abs_error.push_back(abs_err);
      res.rel_error.push_back(rel_err);
      if (!(rel_err <= c.tolerance)) res.passed = false;
    }
  } catch (const std::exception& ex) {
    res.passed = false;
    res.error = ex.what();
  }
  return res;
}

OracleReport run_sweep(const std::vector<OracleCase>& cases, const Units& units, unsigned threads) {
  const auto start = std::chrono::steady_clock::now();
  OracleReport report;
  report.cases.resize(cases.size());
  unsigned workers = threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : threads;
  workers = std::min<unsigned>(workers, static_cast<unsigned>(std::max<std::size_t>(1, cases.size())));
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < cases.size(); i = next++) report.cases[i] = run_case(cases[i], units);
  };
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  for (const auto& c : report.cases) report.passed = report.passed && c.passed;
  report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

AngularState sweep_state(int d, HalfInteger L) {
  if (d < 2) throw DomainError("sweep_state: d must be at least 2");
  if (L.twice < 0) throw DomainError("sweep_state: L must be non-negative");
  std::vector<int> two_ell(static_cast<std::size_t>(d - 1), 0);
  two_ell[0] = L.twice;
  std::vector<int> parity(static_cast<std::size_t>(d), 1);
  if (!L.is_integer()) parity[1] = -1;
  return AngularState(two_ell, ParityVector(parity));
}

std::vector<OracleCase> oscillator_sweep() {
  std::vector<OracleCase> out;
  for (int d : {3, 4, 5}) {
    for (double mu : {-0.3, 0.0, 0.4}) {
      for (int two_l : {0, 1, 2}) {
        const AngularState s = sweep_state(d, HalfInteger::from_twice(two_l));
        OracleCase c;
        c.kind = "oscillator";
        c.potential = Oscillator{1.0};
        c.mu.assign(static_cast<std::size_t>(d), mu);
        c.two_ell = s.two_ell();
        c.parity = s.parity().values();
        c.levels = 4;
        c.tolerance = 1e-4;
        c.cfg = DiscretizationConfig::oscillator_default();
        out.push_back(c);
      }
    }
  }
  return out;
}

std::vector<OracleCase> coulomb_sweep() {
  std::vector<OracleCase> out;
  for (int d : {3, 4, 5}) {
    for (double mu : {-0.3, 0.0, 0.4}) {
      for (int two_l : {0, 1}) {
        const AngularState s = sweep_state(d, HalfInteger::from_twice(two_l));
        OracleCase c;
        c.kind = "coulomb";
        c.potential = Coulomb{1.0};
        c.mu.assign(static_cast<std::size_t>(d), mu);
        c.two_ell = s.two_ell();
        c.parity = s.parity().values();
        c.levels = 3;
        c.tolerance = 1e-3;
        c.cfg = DiscretizationConfig::coulomb_default();
        out.push_back(c);
      }
    }
  }
  return out;
}

std::vector<OracleCase> pho_sweep() {
  std::vector<OracleCase> out;
  for (double de : {2.0, 8.0}) {
    for (int d : {3, 4}) {
      for (double mu : {0.0, 0.4}) {
        const AngularState s = AngularState::ground(d);
        OracleCase c;
        c.kind = "pho";
        c.potential = Pseudoharmonic{de, 1.0};
        c.mu.assign(static_cast<std::size_t>(d), mu);
        c.two_ell = s.two_ell();
        c.parity = s.parity().values();
        c.levels = 2;
        c.tolerance = 1e-4;
        c.cfg = DiscretizationConfig::oscillator_default();
        out.push_back(c);
      }
    }
  }
  return out;
}

std::vector<OracleCase> cartesian_sweep() {
  std::vector<OracleCase> out;
  for (double mu : {-0.3, 0.0, 0.4}) {
    for (int s : {1, -1}) {
      OracleCase c;
      c.kind = "cartesian";
      c.potential = Oscillator{1.0};
      c.mu = {mu};
      c.parity = {s};
      c.levels = 3;
      c.tolerance = 1e-4;
      c.cfg = DiscretizationConfig::oscillator_default();
      out.push_back(c);
    }
  }
  return out;
}

std::vector<OracleCase> default_sweep() {
  std::vector<OracleCase> out;
  for (auto part : {oscillator_sweep(), coulomb_sweep(), pho_sweep(), cartesian_sweep()}) {
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

}  // namespace dunkl
