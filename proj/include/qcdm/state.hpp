// Copyright 2026 The qcdm Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "qcdm/errors.hpp"
#include "qcdm/linalg.hpp"

namespace qcdm {

/// Default absolute tolerance for every state-level check.
inline constexpr double kDefaultTol = 1e-9;

using Dims = std::vector<std::size_t>;

/// Product of factor dimensions; 0 for an empty list.
std::size_t dims_product(const Dims& dims);

/// One failed density-matrix condition together with its measured value.
struct Violation {
  enum class Kind { kShape, kNotHermitian, kTrace, kNegativeEigenvalue };
  Kind kind;
  /// Hermiticity residual, the trace, or the minimum eigenvalue depending on
  /// kind; product(dims) for kShape.
  double measured;
  std::string message;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const noexcept { return violations.empty(); }
  /// One violation message per line.
  std::string describe() const;
};

class InvalidState : public DomainError {
 public:
  explicit InvalidState(ValidationReport report);
  const ValidationReport& report() const noexcept { return report_; }

 private:
  ValidationReport report_;
};

/// Checks the three density-matrix conditions (Hermitian, unit trace,
/// positive semidefinite) plus the factor structure, collecting every
/// failure instead of stopping at the first.
ValidationReport check_state(const Matrix& mat, const Dims& dims,
                             double tol = kDefaultTol);

/// A validated quantum state with its tensor-factor dimensions.
class DensityMatrix {
 public:
  /// Throws InvalidState carrying the full report on failure.
  static DensityMatrix validate(Matrix mat, Dims dims, double tol = kDefaultTol);
  /// Single-factor convenience overload.
  static DensityMatrix validate(Matrix mat, double tol = kDefaultTol);

  const Matrix& matrix() const noexcept { return mat_; }
  const Dims& dims() const noexcept { return dims_; }
  std::size_t dim() const noexcept { return mat_.dim(); }

 private:
  DensityMatrix(Matrix mat, Dims dims) : mat_(std::move(mat)), dims_(std::move(dims)) {}

  Matrix mat_;
  Dims dims_;
};

/// Normalized state vector.
class PureKet {
 public:
  /// Throws NumericalError if | ||psi||^2 - 1 | > tol, DimensionMismatch if
  /// product(dims) differs from the amplitude count.
  PureKet(std::vector<Complex> amplitudes, Dims dims, double tol = kDefaultTol);
  explicit PureKet(std::vector<Complex> amplitudes, double tol = kDefaultTol);

  const std::vector<Complex>& amplitudes() const noexcept { return amplitudes_; }
  const Dims& dims() const noexcept { return dims_; }

 private:
  std::vector<Complex> amplitudes_;
  Dims dims_;
};

/// Hermitian operator.
class Observable {
 public:
  /// Throws NotHermitian beyond hermiticity_tolerance(mat).
  explicit Observable(Matrix mat);
  const Matrix& matrix() const noexcept { return mat_; }

 private:
  Matrix mat_;
};

/// Distinct eigenvalues with the matching orthogonal projectors.
struct SpectralForm {
  std::vector<double> eigenvalues;
  std::vector<Matrix> projectors;
};

struct PurityResult {
  bool is_pure;
  /// ||rho^2 - rho||_F
  double residual;
};

DensityMatrix density_from_ket(const PureKet& psi);

/// Tr(F rho). Throws NumericalError if the imaginary part exceeds tol.
double expectation(const Observable& f, const DensityMatrix& rho,
                   double tol = kDefaultTol);

/// Tr(Q^2 rho) with Q = F - <F> I, clamped to zero from [-tol, 0).
double dispersion(const Observable& f, const DensityMatrix& rho,
                  double tol = kDefaultTol);

/// Groups eigenvalues by single linkage on the sorted spectrum (neighbours
/// within cluster_tol merge) and builds one projector per group. The
/// reported eigenvalue of a group is the mean of its members.
SpectralForm spectral_decompose(const Observable& f, double cluster_tol = kDefaultTol);

PurityResult purity(const DensityMatrix& rho, double tol = kDefaultTol);

/// Born probabilities Tr(rho P_n) for a complete projector family.
/// Throws IncompleteFamily if the projectors do not sum to the identity.
std::vector<double> probability_rule(const DensityMatrix& rho,
                                     const SpectralForm& family,
                                     double tol = kDefaultTol);

}  // namespace qcdm
