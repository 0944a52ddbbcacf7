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

#include <doctest.h>

#include <cmath>

#include "qcdm/composite.hpp"
#include "qcdm/scenarios.hpp"

namespace qcdm {
namespace {

Complex inner(const PureKet& a, const PureKet& b) {
  Complex sum = 0.0;
  for (std::size_t i = 0; i < a.amplitudes().size(); ++i) {
    sum += std::conj(a.amplitudes()[i]) * b.amplitudes()[i];
  }
  return sum;
}

TEST_CASE("bell_state amplitudes") {
  const double h = 1.0 / std::sqrt(2.0);
  CHECK(bell_state(BellKind::kPsiMinus).amplitudes() ==
        std::vector<Complex>{0.0, h, -h, 0.0});
  CHECK(bell_state(BellKind::kPhiPlus).amplitudes() == std::vector<Complex>{h, 0.0, 0.0, h});
  CHECK(bell_state(BellKind::kPsiMinus).dims() == Dims{2, 2});
  CHECK(inner(bell_state(BellKind::kPsiMinus), bell_state(BellKind::kPsiPlus)) ==
        Complex(0.0));
}

TEST_CASE("Bell kets are orthonormal") {
  for (BellKind a : kAllBellKinds) {
    for (BellKind b : kAllBellKinds) {
      const double expected = a == b ? 1.0 : 0.0;
      CHECK(std::abs(inner(bell_state(a), bell_state(b)) - expected) <= 1e-12);
    }
  }
  CHECK(bell_family().effects().size() == 4);
}

TEST_CASE("entanglement_swap reference run") {
  const SwapReport report = entanglement_swap(1e-9);
  CHECK(frobenius_distance(report.reduced_14.matrix(), Matrix::identity(4) * 0.25) <= 1e-9);
  CHECK(std::abs(report.selection_probability - 0.25) <= 1e-9);
  CHECK(report.fidelity_with_singlet >= 1.0 - 1e-9);
  CHECK(report.fidelity_with_singlet <= 1.0);
  CHECK(report.conditional_14.dims() == Dims{2, 2});
  CHECK(purity(report.conditional_14).is_pure);
}

TEST_CASE("selecting the inner pair in phi_plus") {
  const SwapReport report = swap_with_selection(BellKind::kPhiPlus);
  CHECK(std::abs(report.selection_probability - 0.25) <= 1e-12);
  CHECK(fidelity_with_projector(bell_projector(BellKind::kPhiPlus), report.conditional_14) >=
        1.0 - 1e-12);
  CHECK(report.fidelity_with_singlet <= 1e-12);
}

TEST_CASE("Bell decomposition of the swap source") {
  const auto out =
      decompose_reduced(singlet_pair_source(), bell_family(), SubsystemSelector({1, 2}));
  Matrix mixture(4);
  for (const ConditionalOutcome& o : out) {
    CHECK(std::abs(o.probability - 0.25) <= 1e-12);
    mixture += o.state->matrix() * o.probability;
  }
  CHECK(frobenius_distance(mixture, Matrix::identity(4) * 0.25) <= 1e-12);
}

TEST_CASE("order independence on the swap state") {
  const ConsistencyResult r = consistency_check(
      singlet_pair_source(), Observable(bell_projector(BellKind::kPsiMinus)),
      Effect(bell_projector(BellKind::kPsiMinus)), SubsystemSelector({1, 2}));
  CHECK(std::abs(r.lhs - r.rhs) <= 1e-9);
  // Swapping the roles of the two pairs gives the same joint value.
  const ConsistencyResult flipped = consistency_check(
      singlet_pair_source(), Observable(bell_projector(BellKind::kPsiMinus)),
      Effect(bell_projector(BellKind::kPsiMinus)), SubsystemSelector({0, 3}));
  CHECK(std::abs(flipped.lhs - r.lhs) <= 1e-12);
}

TEST_CASE("fidelity_with_projector range") {
  const DensityMatrix mixed = DensityMatrix::validate(Matrix::identity(4) * 0.25, {2, 2});
  CHECK(fidelity_with_projector(bell_projector(BellKind::kPsiMinus), mixed) ==
        doctest::Approx(0.25));
  CHECK_THROWS_AS(fidelity_with_projector(Matrix::identity(4) * 2.0, mixed), NumericalError);
}

}  // namespace
}  // namespace qcdm
