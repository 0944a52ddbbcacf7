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

#include <optional>
#include <string>
#include <vector>

#include "qcdm/composite.hpp"
#include "qcdm/linalg.hpp"
#include "qcdm/state.hpp"

namespace qcdm {

/// Selections less likely than this have no conditional state.
inline constexpr double kMinSelectionProbability = 1e-12;

/// Positive operator on a subsystem: one element of a POVM, or an orthogonal
/// projector in the projective case.
class Effect {
 public:
  /// Throws NotHermitian, or NumericalError if the minimum eigenvalue is
  /// below -tol.
  explicit Effect(Matrix mat, std::string label = {}, double tol = kDefaultTol);

  const Matrix& matrix() const noexcept { return mat_; }
  const std::string& label() const noexcept { return label_; }

 private:
  Matrix mat_;
  std::string label_;
};

/// Effects on one subsystem that sum to the identity.
class EffectFamily {
 public:
  /// Throws DimensionMismatch for mixed dimensions and IncompleteFamily if
  /// ||sum E_b - I||_F > tol.
  explicit EffectFamily(std::vector<Effect> effects, double tol = kDefaultTol);

  const std::vector<Effect>& effects() const noexcept { return effects_; }
  std::size_t subsystem_dim() const noexcept { return subsystem_dim_; }

 private:
  std::vector<Effect> effects_;
  std::size_t subsystem_dim_ = 0;
};

struct ConditionalOutcome {
  /// Tr(E rho). Zero for a branch dropped below kMinSelectionProbability.
  double probability = 0.0;
  /// State of the complementary factors; empty for a dropped branch.
  std::optional<DensityMatrix> state;
  std::string label;
  /// ||X - X^H||_F / (2p) for X = Tr_on(E rho), before symmetrization.
  double antihermitian_residual = 0.0;
};

/// Conditional density matrix of the factors outside `on`, given that the
/// factors in `on` are selected by `effect`:
///   rho_c = Tr_on(E rho) / Tr(E rho).
/// The embedded effect left-multiplies rho. The partial trace is Hermitized
/// as (X + X^H)/2 after checking its anti-Hermitian part is within tol.
///
/// Throws ZeroProbability below kMinSelectionProbability, InvalidSelector if
/// `on` is empty, out of range or covers every factor, DimensionMismatch if
/// the effect does not fit the selected factors, and InvalidState if the
/// result fails validation.
ConditionalOutcome condition(const DensityMatrix& rho, const Effect& effect,
                             const SubsystemSelector& on, double tol = kDefaultTol);

/// Conditions on every effect of a complete family. The returned outcomes
/// follow the family order and satisfy
///   sum_n p_n = 1,   sum_n p_n rho_c_n = Tr_on(rho).
/// Branches below kMinSelectionProbability come back with probability 0 and
/// no state.
std::vector<ConditionalOutcome> decompose_reduced(const DensityMatrix& rho,
                                                  const EffectFamily& family,
                                                  const SubsystemSelector& on,
                                                  double tol = kDefaultTol);

struct ConsistencyResult {
  /// Tr((A (x) E) rho)
  double lhs;
  /// p * Tr(A rho_c)
  double rhs;
  bool holds(double tol = kDefaultTol) const;
};

/// Evaluates a joint expectation two ways: directly on the composite state,
/// and as selection probability times the conditional expectation. A acts on
/// the complement of `on`.
ConsistencyResult consistency_check(const DensityMatrix& rho, const Observable& a,
                                    const Effect& effect, const SubsystemSelector& on,
                                    double tol = kDefaultTol);

}  // namespace qcdm
