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

#include "qcdm/conditional.hpp"

#include <algorithm>
#include <cmath>

#include "qcdm/errors.hpp"
#include "qcdm/format.hpp"

namespace qcdm {

namespace {

void require_proper_subset(const SubsystemSelector& on, std::size_t factor_count) {
  if (on.empty()) throw InvalidSelector("conditioning selector is empty");
  on.check_range(factor_count);
  if (on.size() == factor_count) {
    throw InvalidSelector("conditioning selector covers every factor");
  }
}

// Selection probability and the unnormalized conditional operator Tr_on(E rho).
struct Selection {
  double probability;
  Matrix reduced;
  Dims reduced_dims;
};

Selection select(const DensityMatrix& rho, const Effect& effect,
                 const SubsystemSelector& on) {
  require_proper_subset(on, rho.dims().size());
  const Matrix full_effect = embed_operator(effect.matrix(), on, rho.dims());
  const Matrix weighted = full_effect * rho.matrix();
  const SubsystemSelector rest = on.complement(rho.dims().size());
  return {trace(weighted).real(), partial_trace(weighted, rho.dims(), rest),
          rest.select(rho.dims())};
}

ConditionalOutcome normalize(Selection sel, const std::string& label, double tol) {
  const double p = sel.probability;
  const double residual = hermiticity_residual(sel.reduced) / (2.0 * p);
  if (residual > tol) {
    throw NumericalError("conditional operator has anti-Hermitian part " +
                         format_real(residual));
  }
  Matrix state = hermitian_part(sel.reduced) * (1.0 / p);
  return {std::min(p, 1.0),
          DensityMatrix::validate(std::move(state), std::move(sel.reduced_dims), tol),
          label, residual};
}

}  // namespace

Effect::Effect(Matrix mat, std::string label, double tol)
    : mat_(std::move(mat)), label_(std::move(label)) {
  const EigenDecomposition eig = hermitian_eigendecompose(mat_);
  if (eig.values.front() < -tol) {
    throw NumericalError("effect is not positive: min eigenvalue = " +
                         format_real(eig.values.front()));
  }
}

EffectFamily::EffectFamily(std::vector<Effect> effects, double tol)
    : effects_(std::move(effects)) {
  if (effects_.empty()) throw IncompleteFamily("effect family is empty", 1.0);
  subsystem_dim_ = effects_.front().matrix().dim();
  Matrix total(subsystem_dim_);
  for (const Effect& e : effects_) {
    if (e.matrix().dim() != subsystem_dim_) {
      throw DimensionMismatch("effect family mixes operator dimensions");
    }
    total += e.matrix();
  }
  const double deficit = frobenius_distance(total, Matrix::identity(subsystem_dim_));
  if (deficit > tol) {
    throw IncompleteFamily("effects do not sum to identity: residual = " +
                               format_real(deficit),
                           deficit);
  }
}

ConditionalOutcome condition(const DensityMatrix& rho, const Effect& effect,
                             const SubsystemSelector& on, double tol) {
  Selection sel = select(rho, effect, on);
  if (!(sel.probability >= kMinSelectionProbability)) {
    throw ZeroProbability("selection probability " + format_real(sel.probability) +
                              " is below " + format_real(kMinSelectionProbability),
                          sel.probability);
  }
  return normalize(std::move(sel), effect.label(), tol);
}

std::vector<ConditionalOutcome> decompose_reduced(const DensityMatrix& rho,
                                                  const EffectFamily& family,
                                                  const SubsystemSelector& on,
                                                  double tol) {
  require_proper_subset(on, rho.dims().size());
  if (family.subsystem_dim() != dims_product(on.select(rho.dims()))) {
    throw DimensionMismatch("effect family dimension does not match selected factors");
  }
  std::vector<ConditionalOutcome> outcomes;
  outcomes.reserve(family.effects().size());
  for (const Effect& effect : family.effects()) {
    Selection sel = select(rho, effect, on);
    if (sel.probability < kMinSelectionProbability) {
      outcomes.push_back({0.0, std::nullopt, effect.label(), 0.0});
    } else {
      outcomes.push_back(normalize(std::move(sel), effect.label(), tol));
    }
  }
  return outcomes;
}

bool ConsistencyResult::holds(double tol) const { return std::abs(lhs - rhs) <= tol; }

ConsistencyResult consistency_check(const DensityMatrix& rho, const Observable& a,
                                    const Effect& effect, const SubsystemSelector& on,
                                    double tol) {
  const ConditionalOutcome outcome = condition(rho, effect, on, tol);
  const SubsystemSelector rest = on.complement(rho.dims().size());
  const Matrix joint = embed_operator(a.matrix(), rest, rho.dims()) *
                       embed_operator(effect.matrix(), on, rho.dims());
  const double lhs = trace(joint * rho.matrix()).real();
  const double rhs = outcome.probability * expectation(a, *outcome.state, tol);
  return {lhs, rhs};
}

}  // namespace qcdm
