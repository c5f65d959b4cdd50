// Copyright 2026 The dunkl-sd Authors
// SPDX-License-Identifier: Apache-2.0

#include "dunkl/specfun.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "dunkl/errors.hpp"

namespace dunkl::specfun {

namespace {

// Minimal double-double arithmetic (hi + lo, |lo| <= ulp(hi)/2).
struct DoubleDouble {
  double hi = 0.0;
  double lo = 0.0;
};

DoubleDouble two_sum(double a, double b) {
  const double s = a + b;
  const double bb = s - a;
  const double err = (a - (s - bb)) + (b - bb);
  return {s, err};
}

DoubleDouble quick_two_sum(double a, double b) {
  const double s = a + b;
  return {s, b - (s - a)};
}

DoubleDouble two_prod(double a, double b) {
  const double p = a * b;
  return {p, std::fma(a, b, -p)};
}

DoubleDouble add(DoubleDouble a, DoubleDouble b) {
  DoubleDouble s = two_sum(a.hi, b.hi);
  DoubleDouble t = two_sum(a.lo, b.lo);
  s.lo += t.hi;
  s = quick_two_sum(s.hi, s.lo);
  s.lo += t.lo;
  return quick_two_sum(s.hi, s.lo);
}

DoubleDouble mul(DoubleDouble a, double b) {
  DoubleDouble p = two_prod(a.hi, b);
  p.lo += a.lo * b;
  return quick_two_sum(p.hi, p.lo);
}

DoubleDouble div(DoubleDouble a, DoubleDouble b) {
  const double q1 = a.hi / b.hi;
  DoubleDouble r = add(a, mul(b, -q1));
  const double q2 = r.hi / b.hi;
  r = add(r, mul(b, -q2));
  const double q3 = r.hi / b.hi;
  DoubleDouble q = quick_two_sum(q1, q2);
  return add(q, DoubleDouble{q3, 0.0});
}

double terminating_kummer(int n, double b, double x) {
  // sum_{k=0}^{n} (-n)_k / (b)_k x^k / k!
  DoubleDouble term{1.0, 0.0};
  DoubleDouble sum{1.0, 0.0};
  for (int k = 0; k < n; ++k) {
    term = mul(term, static_cast<double>(k - n));
    term = mul(term, x);
    term = div(term, two_sum(b, static_cast<double>(k)));
    term = div(term, DoubleDouble{static_cast<double>(k + 1), 0.0});
    sum = add(sum, term);
  }
  return sum.hi + sum.lo;
}

double kummer_series(double a, double b, double x) {
  constexpr int kMaxTerms = 10000;
  constexpr double kEps = std::numeric_limits<double>::epsilon();
  long double term = 1.0L;
  long double sum = 1.0L;
  long double max_term = 1.0L;
  int small_terms = 0;
  for (int k = 0; k < kMaxTerms; ++k) {
    term *= (static_cast<long double>(a) + k) * x /
            ((static_cast<long double>(b) + k) * (k + 1));
    sum += term;
    max_term = std::max(max_term, std::fabs(term));
    // the ratio (a+k)x/((b+k)(k+1)) decays like x/k once k exceeds |x|,
    // so two consecutive negligible terms past that point end the series
    if (std::fabs(term) <= 1e-18L * std::fabs(sum) && k > std::fabs(x)) {
      if (++small_terms >= 2) {
        const double loss = static_cast<double>(max_term / std::fabs(sum)) * kEps;
        if (loss > 1e-12) {
          throw ConvergenceError("kummer_m: cancellation exceeds tolerance (a=" +
                                 std::to_string(a) + ", b=" + std::to_string(b) +
                                 ", x=" + std::to_string(x) + ")");
        }
        return static_cast<double>(sum);
      }
    } else {
      small_terms = 0;
    }
  }
  throw ConvergenceError("kummer_m: series did not converge within 10000 terms (x=" +
                         std::to_string(x) + ")");
}

}  // namespace

bool is_nonpositive_integer(double x) { return x <= 0.0 && std::floor(x) == x; }

double laguerre(int n, double alpha, double x) {
  if (n < 0) throw DomainError("laguerre: degree must be non-negative");
  if (!(alpha > -1.0)) throw DomainError("laguerre: alpha must exceed -1");
  if (n == 0) return 1.0;
  const long double a = alpha;
  const long double xl = x;
  long double prev = 1.0L;
  long double cur = 1.0L + a - xl;
  for (int k = 1; k < n; ++k) {
    const long double next = ((2.0L * k + 1.0L + a - xl) * cur - (k + a) * prev) / (k + 1);
    prev = cur;
    cur = next;
  }
  return static_cast<double>(cur);
}

double jacobi(int n, double alpha, double beta, double x) {
  if (n < 0) throw DomainError("jacobi: degree must be non-negative");
  if (!(alpha > -1.0) || !(beta > -1.0)) {
    throw DomainError("jacobi: alpha and beta must exceed -1");
  }
  if (n == 0) return 1.0;
  const long double a = alpha;
  const long double b = beta;
  const long double xl = x;
  long double prev = 1.0L;
  long double cur = (a + 1.0L) + 0.5L * (a + b + 2.0L) * (xl - 1.0L);
  for (int k = 1; k < n; ++k) {
    const long double s = 2.0L * k + a + b;
    const long double c1 = 2.0L * (k + 1) * (k + a + b + 1.0L) * s;
    const long double c2 = (s + 1.0L) * ((s + 2.0L) * s * xl + a * a - b * b);
    const long double c3 = 2.0L * (k + a) * (k + b) * (s + 2.0L);
    const long double next = (c2 * cur - c3 * prev) / c1;
    prev = cur;
    cur = next;
  }
  return static_cast<double>(cur);
}

double kummer_m(double a, double b, double x) {
  if (is_nonpositive_integer(a)) {
    const int n = static_cast<int>(-a);
    if (is_nonpositive_integer(b) && n > static_cast<int>(-b)) {
      throw DomainError("kummer_m: b is a non-positive integer reached before the series terminates");
    }
    return terminating_kummer(n, b, x);
  }
  if (is_nonpositive_integer(b)) {
    throw DomainError("kummer_m: b must not be a non-positive integer");
  }
  if (x == 0.0) return 1.0;
  if (x < 0.0) {
    // b - a may itself be a non-positive integer; the polynomial branch handles it
    return std::exp(x) * kummer_m(b - a, b, -x);
  }
  return kummer_series(a, b, x);
}

SignedLog log_pochhammer(double a, int n) {
  if (n < 0) throw DomainError("log_pochhammer: n must be non-negative");
  SignedLog out;
  for (int j = 0; j < n; ++j) {
    const double f = a + j;
    if (f == 0.0) return {-std::numeric_limits<double>::infinity(), 0};
    if (f < 0.0) out.sign = -out.sign;
    out.log_abs += std::log(std::fabs(f));
  }
  return out;
}

double pochhammer(double a, int n) {
  const SignedLog l = log_pochhammer(a, n);
  return l.sign == 0 ? 0.0 : l.sign * std::exp(l.log_abs);
}

double gamma_positive(double x) {
  if (!(x > 0.0)) throw DomainError("gamma_positive: argument must be positive");
  return std::exp(std::lgamma(x));
}

}  // namespace dunkl::specfun
