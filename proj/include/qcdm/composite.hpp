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
#include <vector>

#include "qcdm/linalg.hpp"
#include "qcdm/state.hpp"

namespace qcdm {

/// Strictly increasing list of 0-based tensor-factor indices.
class SubsystemSelector {
 public:
  /// Throws InvalidSelector unless indices are strictly increasing.
  explicit SubsystemSelector(std::vector<std::size_t> indices);

  const std::vector<std::size_t>& indices() const noexcept { return indices_; }
  bool empty() const noexcept { return indices_.empty(); }
  std::size_t size() const noexcept { return indices_.size(); }
  bool contains(std::size_t factor) const;

  /// Throws InvalidSelector if any index is >= factor_count.
  void check_range(std::size_t factor_count) const;

  /// The remaining factors of a factor_count-factor space, ascending.
  SubsystemSelector complement(std::size_t factor_count) const;

  /// Dimensions of the selected factors.
  Dims select(const Dims& dims) const;

  friend bool operator==(const SubsystemSelector&, const SubsystemSelector&) = default;

 private:
  std::vector<std::size_t> indices_;
};

/// kron(a, b) with dims a.dims ++ b.dims.
DensityMatrix tensor_state(const DensityMatrix& a, const DensityMatrix& b,
                           double tol = kDefaultTol);

/// Lifts op, written on the selected factors (in ascending factor order), to
/// the full space by acting as identity on every other factor.
Matrix embed_operator(const Matrix& op, const SubsystemSelector& on, const Dims& dims);

/// Sums out every factor not in keep. Works on any square matrix with the
/// given factor structure, not only on states.
Matrix partial_trace(const Matrix& mat, const Dims& dims, const SubsystemSelector& keep);

/// Reduced density matrix over the kept factors. Throws InvalidSelector for
/// an empty or out-of-range keep-set.
DensityMatrix partial_trace(const DensityMatrix& rho, const SubsystemSelector& keep,
                            double tol = kDefaultTol);

}  // namespace qcdm
