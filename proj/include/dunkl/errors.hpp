// Copyright 2026 The dunkl-sd Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace dunkl {

/// Parameters outside the physical or mathematical domain of an operation
/// (mu <= -1/2, non-integer Jacobi index, no bound state, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Evaluation point inside the guard band around a coordinate singularity.
class SingularityError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// An iterative kernel (series, Newton, bisection) failed its tolerance.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace dunkl
