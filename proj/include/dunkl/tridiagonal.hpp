// Copyright 2026 The dunkl-sd Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <vector>

namespace dunkl {

/// Real symmetric tridiagonal matrix stored by its diagonal and the first
/// super-diagonal (off[i] couples rows i and i+1). Symmetric by construction.
struct SymmetricTridiagonal {
  std::vector<double> diag;
  std::vector<double> off;

  std::size_t size() const { return diag.size(); }

  /// Number of eigenvalues strictly below sigma (Sturm sequence count).
  std::size_t count_below(double sigma) const;

  /// The k smallest eigenvalues in ascending order, by bisection on the
  /// Sturm count. Throws DomainError if k exceeds the matrix size.
  std::vector<double> smallest_eigenvalues(std::size_t k) const;

  /// Row-major dense copy, for inspection in tests.
  std::vector<std::vector<double>> to_dense() const;
};

}  // namespace dunkl
