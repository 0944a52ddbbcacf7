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

#include <string_view>

#include "qcdm/conditional.hpp"
#include "qcdm/state.hpp"

namespace qcdm {

/// Qubit basis: chi_0 = (1, 0), chi_1 = (0, 1).
///   psi_minus = (|01> - |10>)/sqrt2   psi_plus = (|01> + |10>)/sqrt2
///   phi_minus = (|00> - |11>)/sqrt2   phi_plus = (|00> + |11>)/sqrt2
enum class BellKind { kPsiMinus, kPsiPlus, kPhiMinus, kPhiPlus };

inline constexpr BellKind kAllBellKinds[] = {BellKind::kPsiMinus, BellKind::kPsiPlus,
                                             BellKind::kPhiMinus, BellKind::kPhiPlus};

std::string_view bell_name(BellKind kind);
PureKet bell_state(BellKind kind);
Matrix bell_projector(BellKind kind);

/// The four Bell projectors as a complete projective family on two qubits,
/// in kAllBellKinds order.
EffectFamily bell_family();

/// Tr(P rho) clamped to [0, 1]; throws NumericalError if it leaves
/// [-tol, 1 + tol].
double fidelity_with_projector(const Matrix& projector, const DensityMatrix& rho,
                               double tol = kDefaultTol);

/// Two singlets on four qubits: pairs (0,1) and (2,3).
DensityMatrix singlet_pair_source();

struct SwapReport {
  /// Unconditional state of the outer qubits 0 and 3.
  DensityMatrix reduced_14;
  double selection_probability;
  /// State of qubits 0 and 3 given qubits 1 and 2 selected in `selected_in`.
  DensityMatrix conditional_14;
  double fidelity_with_singlet;
};

/// Entanglement swapping on the singlet-pair source with the middle pair
/// selected in a Bell state.
SwapReport swap_with_selection(BellKind selected_in, double tol = kDefaultTol);

/// Reference swap: middle pair selected in psi_minus. Throws NumericalError
/// unless the reduced outer state is I/4, the selection probability is 1/4
/// and the conditional outer state is the singlet, each within tol.
SwapReport entanglement_swap(double tol = kDefaultTol);

}  // namespace qcdm
