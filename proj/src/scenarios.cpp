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

#include "qcdm/scenarios.hpp"

#include <algorithm>
#include <cmath>

#include "qcdm/composite.hpp"
#include "qcdm/errors.hpp"
#include "qcdm/format.hpp"

namespace qcdm {

std::string_view bell_name(BellKind kind) {
  switch (kind) {
    case BellKind::kPsiMinus: return "psi_minus";
    case BellKind::kPsiPlus: return "psi_plus";
    case BellKind::kPhiMinus: return "phi_minus";
    case BellKind::kPhiPlus: return "phi_plus";
  }
  return "unknown";
}

PureKet bell_state(BellKind kind) {
  const double h = 1.0 / std::sqrt(2.0);
  std::vector<Complex> amps(4);
  switch (kind) {
    case BellKind::kPsiMinus: amps = {0.0, h, -h, 0.0}; break;
    case BellKind::kPsiPlus: amps = {0.0, h, h, 0.0}; break;
    case BellKind::kPhiMinus: amps = {h, 0.0, 0.0, -h}; break;
    case BellKind::kPhiPlus: amps = {h, 0.0, 0.0, h}; break;
  }
  return PureKet(std::move(amps), Dims{2, 2});
}

Matrix bell_projector(BellKind kind) {
  const PureKet psi = bell_state(kind);
  return outer(psi.amplitudes(), psi.amplitudes());
}

EffectFamily bell_family() {
  std::vector<Effect> effects;
  for (BellKind kind : kAllBellKinds) {
    effects.emplace_back(bell_projector(kind), std::string(bell_name(kind)));
  }
  return EffectFamily(std::move(effects));
}

double fidelity_with_projector(const Matrix& projector, const DensityMatrix& rho,
                               double tol) {
  const double f = trace(projector * rho.matrix()).real();
  if (f < -tol || f > 1.0 + tol) {
    throw NumericalError("fidelity out of range: " + format_real(f));
  }
  return std::clamp(f, 0.0, 1.0);
}

DensityMatrix singlet_pair_source() {
  const DensityMatrix singlet = density_from_ket(bell_state(BellKind::kPsiMinus));
  return tensor_state(singlet, singlet);
}

SwapReport swap_with_selection(BellKind selected_in, double tol) {
  const DensityMatrix source = singlet_pair_source();
  const SubsystemSelector outer_pair({0, 3});
  const SubsystemSelector middle_pair({1, 2});

  DensityMatrix reduced = partial_trace(source, outer_pair, tol);
  ConditionalOutcome outcome =
      condition(source, Effect(bell_projector(selected_in), std::string(bell_name(selected_in))),
                middle_pair, tol);
  const double fidelity =
      fidelity_with_projector(bell_projector(BellKind::kPsiMinus), *outcome.state, tol);
  return {std::move(reduced), outcome.probability, std::move(*outcome.state), fidelity};
}

SwapReport entanglement_swap(double tol) {
  SwapReport report = swap_with_selection(BellKind::kPsiMinus, tol);

  const double mixed_gap =
      frobenius_distance(report.reduced_14.matrix(), Matrix::identity(4) * 0.25);
  if (mixed_gap > tol) {
    throw NumericalError("swap: reduced outer state differs from I/4 by " +
                         format_real(mixed_gap));
  }
  if (std::abs(report.selection_probability - 0.25) > tol) {
    throw NumericalError("swap: selection probability = " +
                         format_real(report.selection_probability));
  }
  if (report.fidelity_with_singlet < 1.0 - tol) {
    throw NumericalError("swap: conditional fidelity with singlet = " +
                         format_real(report.fidelity_with_singlet));
  }
  return report;
}

}  // namespace qcdm
