// Copyright 2026 The dunkl-sd Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file specfun.hpp
 * @brief Orthogonal polynomials and the confluent hypergeometric function.
 *
 * Every closed-form eigenfunction in this library is a product of elementary
 * prefactors with one of these kernels:
 *  - generalized Laguerre polynomials L_n^a(x) (Cartesian oscillator modes),
 *  - Jacobi polynomials P_n^(a,b)(x) (angular tower),
 *  - Kummer's function M(a, b, x) (radial solutions; terminating for a = -n).
 *
 * Polynomials are evaluated by ascending three-term recurrences carried out in
 * extended precision. A terminating Kummer series is summed in double-double
 * arithmetic so that the cancellation between alternating terms at large x
 * does not leak into the result.
 */

#pragma once

namespace dunkl::specfun {

/// L_n^alpha(x). Throws DomainError for n < 0 or alpha <= -1.
double laguerre(int n, double alpha, double x);

/// P_n^(alpha,beta)(x). Throws DomainError for n < 0, alpha <= -1 or beta <= -1.
double jacobi(int n, double alpha, double beta, double x);

/**
 * Kummer's confluent hypergeometric function M(a, b, x) = 1F1(a; b; x).
 *
 * For a = -n (n a non-negative integer) the series is a degree-n polynomial
 * and is summed exactly to its last term. b may then be a non-positive integer
 * -m only if n <= m. Otherwise b must not be a non-positive integer.
 *
 * Non-terminating series use the term ratio for convergence control and stop
 * after at most 10000 terms; negative x is mapped through Kummer's
 * transformation M(a,b,x) = e^x M(b-a,b,-x) first.
 *
 * Throws DomainError for a forbidden b and ConvergenceError when the series
 * does not reach a relative accuracy of 1e-12.
 */
double kummer_m(double a, double b, double x);

/// log|(a)_n| with the sign of the Pochhammer symbol (a)_n = a(a+1)...(a+n-1).
/// sign is 0 (and log_abs is -inf) when one of the factors vanishes.
struct SignedLog {
  double log_abs = 0.0;
  int sign = 1;
};

SignedLog log_pochhammer(double a, int n);

/// (a)_n, reassembled from log_pochhammer.
double pochhammer(double a, int n);

/// Gamma(x) for x > 0 via lgamma; throws DomainError otherwise.
double gamma_positive(double x);

/// True when x is an integer n <= 0.
bool is_nonpositive_integer(double x);

}  // namespace dunkl::specfun
