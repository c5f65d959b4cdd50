// Copyright 2026 The dunkl-sd Authors
// SPDX-License-Identifier: Apache-2.0

#include "dunkl/core.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "dunkl/errors.hpp"

namespace dunkl {

namespace {

constexpr double kPi = std::numbers::pi;

double wrap_two_pi(double t) {
  double w = std::fmod(t, 2.0 * kPi);
  if (w < 0.0) w += 2.0 * kPi;
  if (w >= 2.0 * kPi) w -= 2.0 * kPi;
  return w;
}

void check_axis(int j, int lo, int hi, const char* what) {
  if (j < lo || j > hi) {
    throw std::out_of_range(std::string(what) + ": index " + std::to_string(j) + " outside [" +
                            std::to_string(lo) + ", " + std::to_string(hi) + "]");
  }
}

}  // namespace

// ---------------------------------------------------------------- HalfInteger

HalfInteger HalfInteger::from_double(double v) {
  const double t = 2.0 * v;
  if (!std::isfinite(t) || std::fabs(t - std::round(t)) > 1e-9) {
    throw DomainError("not a half-integer: " + std::to_string(v));
  }
  return HalfInteger{static_cast<int>(std::lround(t))};
}

HalfInteger HalfInteger::parse(const std::string& text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) {
      std::size_t used = 0;
      const double v = std::stod(text, &used);
      if (used != text.size()) throw DomainError("trailing characters");
      return from_double(v);
    }
    std::size_t used_num = 0, used_den = 0;
    const std::string num = text.substr(0, slash);
    const std::string den = text.substr(slash + 1);
    const long p = std::stol(num, &used_num);
    const long q = std::stol(den, &used_den);
    if (used_num != num.size() || used_den != den.size()) throw DomainError("trailing characters");
    if (q == 1) return HalfInteger{static_cast<int>(2 * p)};
    if (q == 2) return HalfInteger{static_cast<int>(p)};
  } catch (const std::logic_error&) {
    // std::invalid_argument, std::out_of_range and DomainError all land here
  }
  throw DomainError("cannot parse half-integer '" + text + "' (expected p/2 or a decimal)");
}

std::string HalfInteger::to_string() const {
  if (is_integer()) return std::to_string(twice / 2);
  return std::to_string(twice) + "/2";
}

// --------------------------------------------------------- DeformationParams

DeformationParams::DeformationParams(std::vector<double> mu) : mu_(std::move(mu)) {
  if (mu_.size() < 2) throw DomainError("DeformationParams: dimension d must be at least 2");
  for (std::size_t j = 0; j < mu_.size(); ++j) {
    if (!(mu_[j] > -0.5) || !std::isfinite(mu_[j])) {
      std::ostringstream os;
      os << "DeformationParams: mu_" << j + 1 << " = " << mu_[j] << " violates mu > -1/2";
      throw DomainError(os.str());
    }
  }
}

DeformationParams DeformationParams::symmetric(int d, double mu) {
  if (d < 2) throw DomainError("DeformationParams: dimension d must be at least 2");
  return DeformationParams(std::vector<double>(static_cast<std::size_t>(d), mu));
}

double DeformationParams::mu(int j) const {
  check_axis(j, 1, dimension(), "DeformationParams::mu");
  return mu_[static_cast<std::size_t>(j - 1)];
}

double DeformationParams::partial_sum(int k) const {
  check_axis(k, 0, dimension(), "DeformationParams::partial_sum");
  double s = 0.0;
  for (int i = 0; i < k; ++i) s += mu_[static_cast<std::size_t>(i)];
  return s;
}

bool DeformationParams::is_symmetric() const {
  return std::all_of(mu_.begin(), mu_.end(), [&](double m) { return m == mu_.front(); });
}

// -------------------------------------------------------------- ParityVector

ParityVector::ParityVector(std::vector<int> s) : s_(std::move(s)) {
  for (int v : s_) {
    if (v != 1 && v != -1) throw DomainError("ParityVector: entries must be +1 or -1");
  }
}

int ParityVector::operator()(int j) const {
  check_axis(j, 1, size(), "ParityVector");
  return s_[static_cast<std::size_t>(j - 1)];
}

int ParityVector::sum() const {
  int t = 0;
  for (int v : s_) t += v;
  return t;
}

// --------------------------------------------------------------- coordinates

std::vector<double> polar_to_cartesian(const PolarPoint& p, int d) {
  if (d < 2) throw DomainError("polar_to_cartesian: d must be at least 2");
  if (static_cast<int>(p.theta.size()) != d - 1) {
    throw DomainError("polar_to_cartesian: expected d-1 angles");
  }
  std::vector<double> x(static_cast<std::size_t>(d));
  // tail[j] = r sin t_{j+1} ... sin t_{d-1} (1-based angles), built from the top down
  double tail = p.r;
  for (int j = d; j >= 3; --j) {
    const double t = p.theta[static_cast<std::size_t>(j - 2)];
    x[static_cast<std::size_t>(j - 1)] = tail * std::cos(t);
    tail *= std::sin(t);
  }
  x[0] = tail * std::cos(p.theta[0]);
  x[1] = tail * std::sin(p.theta[0]);
  return x;
}

PolarInverse cartesian_to_polar(const std::vector<double>& x) {
  const int d = static_cast<int>(x.size());
  if (d < 2) throw DomainError("cartesian_to_polar: need at least two coordinates");
  PolarInverse out;
  out.point.theta.assign(static_cast<std::size_t>(d - 1), 0.0);
  std::vector<double> partial(static_cast<std::size_t>(d));  // partial[j-1] = |(x_1..x_j)|
  double acc = 0.0;
  for (int j = 0; j < d; ++j) {
    acc = std::hypot(acc, x[static_cast<std::size_t>(j)]);
    partial[static_cast<std::size_t>(j)] = acc;
  }
  const double r = partial.back();
  if (!(r > 0.0)) throw DomainError("cartesian_to_polar: the origin has no polar representation");
  out.point.r = r;
  for (int j = d; j >= 3; --j) {
    const double below = partial[static_cast<std::size_t>(j - 2)];
    out.point.theta[static_cast<std::size_t>(j - 2)] = std::atan2(below, x[static_cast<std::size_t>(j - 1)]);
    if (below <= 1e-14 * r) out.degenerate = true;
  }
  out.point.theta[0] = wrap_two_pi(std::atan2(x[1], x[0]));
  return out;
}

std::vector<double> reflect(const std::vector<double>& x, int j) {
  check_axis(j, 1, static_cast<int>(x.size()), "reflect");
  std::vector<double> y = x;
  y[static_cast<std::size_t>(j - 1)] = -y[static_cast<std::size_t>(j - 1)];
  return y;
}

PolarPoint reflect(const PolarPoint& p, int j, int d) {
  check_axis(j, 1, d, "reflect");
  PolarPoint q = p;
  if (j == 1) {
    q.theta[0] = wrap_two_pi(kPi - p.theta[0]);
  } else if (j == 2) {
    q.theta[0] = wrap_two_pi(-p.theta[0]);
  } else {
    q.theta[static_cast<std::size_t>(j - 2)] = kPi - p.theta[static_cast<std::size_t>(j - 2)];
  }
  return q;
}

CartesianFunction apply_reflection(CartesianFunction f, int j, int d) {
  check_axis(j, 1, d, "apply_reflection");
  return [f = std::move(f), j](const std::vector<double>& x) { return f(reflect(x, j)); };
}

PolarFunction apply_reflection(PolarFunction f, int j, int d) {
  check_axis(j, 1, d, "apply_reflection");
  return [f = std::move(f), j, d](const PolarPoint& p) { return f(reflect(p, j, d)); };
}

// ---------------------------------------------------------------- operators

double dunkl_derivative_1d(const std::function<double(double)>& f, double mu, double x, double step) {
  if (x == 0.0) throw DomainError("dunkl_derivative_1d: x = 0 is singular");
  const double h = step > 0.0 ? step : std::max(1e-6, 1e-6 * std::fabs(x));
  const double derivative = (f(x + h) - f(x - h)) / (2.0 * h);
  return derivative + (mu / x) * (f(x) - f(-x));
}

double separation_constant(int k, HalfInteger ell_sum, const DeformationParams& params) {
  check_axis(k, 1, params.dimension() - 1, "separation_constant");
  const double l = ell_sum.value();
  return 4.0 * l * (l + params.partial_sum(k + 1) + 0.5 * (k - 1));
}

double apply_angular_operator(int j, const std::function<double(double)>& theta_fn, const DeformationParams& params,
                              HalfInteger lower_ell_sum, double theta, const AngularOperatorOptions& options) {
  const int d = params.dimension();
  check_axis(j, 1, d - 1, "apply_angular_operator");
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  if (std::fabs(c) < options.guard || std::fabs(s) < options.guard) {
    throw SingularityError("apply_angular_operator: theta inside the guard band of a coordinate singularity");
  }
  const double h = options.step;
  const double f0 = theta_fn(theta);
  const double fp = theta_fn(theta + h);
  const double fm = theta_fn(theta - h);
  const double d1 = (fp - fm) / (2.0 * h);
  const double d2 = (fp - 2.0 * f0 + fm) / (h * h);
  const double tn = s / c;
  const double ct = c / s;

  if (j == 1) {
    const double mu1 = params.mu(1);
    const double mu2 = params.mu(2);
    const double r1 = theta_fn(kPi - theta);
    const double r2 = theta_fn(-theta);
    return -d2 + 2.0 * (mu1 * tn - mu2 * ct) * d1 + mu1 * (f0 - r1) / (c * c) + mu2 * (f0 - r2) / (s * s);
  }
  const double mu_next = params.mu(j + 1);
  const double drift = (j - 1 + 2.0 * params.partial_sum(j)) * ct - 2.0 * mu_next * tn;
  const double reflected = theta_fn(kPi - theta);
  const double carry = separation_constant(j - 1, lower_ell_sum, params);
  return -d2 - drift * d1 + mu_next * (f0 - reflected) / (c * c) + carry * f0 / (s * s);
}

}  // namespace dunkl
