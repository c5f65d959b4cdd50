// Copyright 2026 The dunkl-sd Authors
// SPDX-License-Identifier: Apache-2.0

#include "dunkl/tridiagonal.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "dunkl/errors.hpp"

namespace dunkl {

namespace {

double pivot_floor(const SymmetricTridiagonal& t) {
  // safe minimum scaled as in LAPACK dstebz
  double m = 1.0;
  for (double b : t.off) m = std::max(m, b * b);
  return m * std::numeric_limits<double>::min();
}

}  // namespace

std::size_t SymmetricTridiagonal::count_below(double sigma) const {
  const double pivmin = pivot_floor(*this);
  std::size_t count = 0;
  double d = 1.0;
  for (std::size_t i = 0; i < diag.size(); ++i) {
    const double coupling = i == 0 ? 0.0 : off[i - 1] * off[i - 1];
    d = (diag[i] - sigma) - (i == 0 ? 0.0 : coupling / d);
    if (std::fabs(d) < pivmin) d = -pivmin;
    if (d < 0.0) ++count;
  }
  return count;
}

std::vector<double> SymmetricTridiagonal::smallest_eigenvalues(std::size_t k) const {
  const std::size_t n = diag.size();
  if (off.size() + 1 != n && !(n == 0 && off.empty())) {
    throw DomainError("SymmetricTridiagonal: off-diagonal length must be size-1");
  }
  if (k > n) throw DomainError("SymmetricTridiagonal: more eigenvalues requested than rows");

  // Gershgorin enclosure
  double lo = std::numeric_limits<double>::max();
  double hi = std::numeric_limits<double>::lowest();
  for (std::size_t i = 0; i < n; ++i) {
    const double r = (i > 0 ? std::fabs(off[i - 1]) : 0.0) + (i + 1 < n ? std::fabs(off[i]) : 0.0);
    lo = std::min(lo, diag[i] - r);
    hi = std::max(hi, diag[i] + r);
  }
  const double span = std::max(std::fabs(lo), std::fabs(hi));
  lo -= 4.0 * std::numeric_limits<double>::epsilon() * span + pivot_floor(*this);
  hi += 4.0 * std::numeric_limits<double>::epsilon() * span + pivot_floor(*this);

  std::vector<double> values(k);
  double floor_left = lo;
  for (std::size_t j = 0; j < k; ++j) {
    // eigenvalue j (0-based) is the smallest sigma with count_below(sigma) > j
    double a = floor_left;
    double b = hi;
    for (int it = 0; it < 200; ++it) {
      const double mid = 0.5 * (a + b);
      if (mid <= a || mid >= b) break;
      if (b - a <= 2.0 * std::numeric_limits<double>::epsilon() * std::max(std::fabs(a), std::fabs(b))) {
        break;
      }
      if (count_below(mid) > j) {
        b = mid;
      } else {
        a = mid;
      }
    }
    values[j] = 0.5 * (a + b);
    floor_left = a;
  }
  return values;
}

std::vector<std::vector<double>> SymmetricTridiagonal::to_dense() const {
  const std::size_t n = diag.size();
  std::vector<std::vector<double>> m(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i) {
    m[i][i] = diag[i];
    if (i + 1 < n) {
      m[i][i + 1] = off[i];
      m[i + 1][i] = off[i];
    }
  }
  return m;
}

}  // namespace dunkl
