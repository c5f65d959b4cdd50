// Copyright 2026 The dunkl-sd Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file core.hpp
 * @brief Deformation parameters, parity labels, hyperspherical coordinates and
 * finite-difference application of Dunkl-type operators.
 *
 * Indices j that name a Cartesian axis or an angle follow the physics
 * convention and start at 1.
 */

#pragma once

#include <functional>
#include <string>
#include <vector>

namespace dunkl {

/// Unit system. Energies scale with hbar, lengths with hbar / (mass * ...).
struct Units {
  double hbar = 1.0;
  double mass = 1.0;
};

/// A half-integer stored as twice its value so that sums stay exact.
struct HalfInteger {
  int twice = 0;

  static HalfInteger from_twice(int t) { return HalfInteger{t}; }
  /// Accepts "3", "3/2", "1.5" or "-0.5". Throws DomainError otherwise.
  static HalfInteger parse(const std::string& text);
  /// Throws DomainError if 2 * v is not an integer.
  static HalfInteger from_double(double v);

  double value() const { return 0.5 * twice; }
  bool is_integer() const { return twice % 2 == 0; }
  std::string to_string() const;

  friend HalfInteger operator+(HalfInteger a, HalfInteger b) { return {a.twice + b.twice}; }
  friend bool operator==(HalfInteger a, HalfInteger b) { return a.twice == b.twice; }
};

/// Dimension d >= 2 and Wigner parameters mu_1..mu_d, each > -1/2.
class DeformationParams {
 public:
  /// Throws DomainError if mu.size() < 2 or some mu_j <= -1/2.
  explicit DeformationParams(std::vector<double> mu);

  /// All mu_j equal, the symmetric case.
  static DeformationParams symmetric(int d, double mu);

  int dimension() const { return static_cast<int>(mu_.size()); }
  const std::vector<double>& mu() const { return mu_; }
  /// mu_j, 1-based.
  double mu(int j) const;
  double sum_mu() const { return partial_sum(dimension()); }
  /// mu_1 + ... + mu_k; zero for k = 0.
  double partial_sum(int k) const;
  /// c = d - 1 + 2 sum mu, the exponent of the radial measure r^c.
  double measure_exponent() const { return dimension() - 1 + 2.0 * sum_mu(); }
  bool is_symmetric() const;

 private:
  std::vector<double> mu_;
};

/// Reflection eigenvalues s_j in {+1, -1}.
class ParityVector {
 public:
  explicit ParityVector(std::vector<int> s);
  static ParityVector all_even(int d) { return ParityVector(std::vector<int>(static_cast<std::size_t>(d), 1)); }

  int size() const { return static_cast<int>(s_.size()); }
  /// s_j, 1-based.
  int operator()(int j) const;
  const std::vector<int>& values() const { return s_; }
  int sum() const;

 private:
  std::vector<int> s_;
};

/// r > 0 and d - 1 angles; theta[0] is theta_1 in [0, 2 pi), the rest in [0, pi].
struct PolarPoint {
  double r = 0.0;
  std::vector<double> theta;
};

struct PolarInverse {
  PolarPoint point;
  /// Set when some sin(theta_j), j >= 2, vanishes and the lower angles are arbitrary.
  bool degenerate = false;
};

/// x_1 = r cos t1 sin t2 ... sin t_{d-1}, x_2 = r sin t1 sin t2 ... sin t_{d-1},
/// x_j = r cos t_{j-1} sin t_j ... sin t_{d-1} for j >= 3. For d = 2 this is (r cos t1, r sin t1).
std::vector<double> polar_to_cartesian(const PolarPoint& p, int d);

/// Throws DomainError for fewer than two coordinates or the origin.
PolarInverse cartesian_to_polar(const std::vector<double>& x);

using CartesianFunction = std::function<double(const std::vector<double>&)>;
using PolarFunction = std::function<double(const PolarPoint&)>;

/// Cartesian R_j: x_j -> -x_j. Throws std::out_of_range for j outside [1, d].
std::vector<double> reflect(const std::vector<double>& x, int j);
/// Polar R_j: t1 -> pi - t1 (j = 1), t1 -> -t1 (j = 2), t_{j-1} -> pi - t_{j-1} (j >= 3).
/// Angles are wrapped back into their ranges.
PolarPoint reflect(const PolarPoint& p, int j, int d);

CartesianFunction apply_reflection(CartesianFunction f, int j, int d);
PolarFunction apply_reflection(PolarFunction f, int j, int d);

/**
 * f'(x) + (mu / x) (f(x) - f(-x)), with f' by a central difference.
 * step <= 0 selects h = max(1e-6, 1e-6 |x|). Throws DomainError at x = 0.
 */
double dunkl_derivative_1d(const std::function<double(double)>& f, double mu, double x, double step = 0.0);

struct AngularOperatorOptions {
  double step = 1e-5;   ///< central-difference step in radians
  double guard = 1e-6;  ///< reject |cos| or |sin| below this
};

/**
 * Applies the angular operator J_j to theta_fn at theta.
 *
 * j = 1:  -T'' + 2(mu_1 tan - mu_2 cot) T' + mu_1 (1 - R_1) T / cos^2 + mu_2 (1 - R_2) T / sin^2,
 *         R_1: t -> pi - t, R_2: t -> -t.
 * j >= 2: -T'' - [(j - 1 + 2 sum_{i<=j} mu_i) cot - 2 mu_{j+1} tan] T' + mu_{j+1} (1 - R) T / cos^2
 *         + lambda_{j-1}^2 T / sin^2, R: t -> pi - t, where lambda_{j-1}^2 is computed from
 *         lower_ell_sum = l_1 + ... + l_{j-1}.
 *
 * Throws std::out_of_range for j outside [1, d-1], SingularityError inside the guard band.
 */
double apply_angular_operator(int j, const std::function<double(double)>& theta_fn, const DeformationParams& params,
                              HalfInteger lower_ell_sum, double theta, const AngularOperatorOptions& options = {});

/// lambda_k^2 = 4 L_k (L_k + sum_{i<=k+1} mu_i + (k - 1)/2) for partial sum L_k of the l's.
double separation_constant(int k, HalfInteger ell_sum, const DeformationParams& params);

}  // namespace dunkl
