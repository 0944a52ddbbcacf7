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

#include "qcdm/composite.hpp"

#include <algorithm>
#include <string>

#include "qcdm/errors.hpp"

namespace qcdm {

namespace {

// For every flat index m of the composite space, the flat index of its
// selected digits (within the selected subspace) and of its remaining digits
// (within the complementary subspace). Both keep the original factor order.
struct IndexSplit {
  std::vector<std::size_t> selected;
  std::vector<std::size_t> rest;
};

IndexSplit split_indices(const Dims& dims, const SubsystemSelector& on) {
  const std::size_t total = dims_product(dims);
  IndexSplit split{std::vector<std::size_t>(total), std::vector<std::size_t>(total)};
  for (std::size_t m = 0; m < total; ++m) {
    std::size_t remaining = m;
    std::size_t sel = 0, sel_stride = 1;
    std::size_t rest = 0, rest_stride = 1;
    // Least significant factor first.
    for (std::size_t k = dims.size(); k-- > 0;) {
      const std::size_t digit = remaining % dims[k];
      remaining /= dims[k];
      if (on.contains(k)) {
        sel += digit * sel_stride;
        sel_stride *= dims[k];
      } else {
        rest += digit * rest_stride;
        rest_stride *= dims[k];
      }
    }
    split.selected[m] = sel;
    split.rest[m] = rest;
  }
  return split;
}

void require_structure(const Matrix& mat, const Dims& dims) {
  if (dims.empty() || dims_product(dims) != mat.dim()) {
    throw DimensionMismatch("dims product does not match matrix dimension " +
                            std::to_string(mat.dim()));
  }
}

}  // namespace

SubsystemSelector::SubsystemSelector(std::vector<std::size_t> indices)
    : indices_(std::move(indices)) {
  for (std::size_t i = 1; i < indices_.size(); ++i) {
    if (indices_[i] <= indices_[i - 1]) {
      throw InvalidSelector("factor indices must be strictly increasing");
    }
  }
}

bool SubsystemSelector::contains(std::size_t factor) const {
  return std::binary_search(indices_.begin(), indices_.end(), factor);
}

void SubsystemSelector::check_range(std::size_t factor_count) const {
  if (!indices_.empty() && indices_.back() >= factor_count) {
    throw InvalidSelector("factor index " + std::to_string(indices_.back()) +
                          " out of range for " + std::to_string(factor_count) +
                          " factors");
  }
}

SubsystemSelector SubsystemSelector::complement(std::size_t factor_count) const {
  check_range(factor_count);
  std::vector<std::size_t> rest;
  for (std::size_t k = 0; k < factor_count; ++k) {
    if (!contains(k)) rest.push_back(k);
  }
  return SubsystemSelector(std::move(rest));
}

Dims SubsystemSelector::select(const Dims& dims) const {
  check_range(dims.size());
  Dims out;
  out.reserve(indices_.size());
  for (std::size_t k : indices_) out.push_back(dims[k]);
  return out;
}

DensityMatrix tensor_state(const DensityMatrix& a, const DensityMatrix& b, double tol) {
  Dims dims = a.dims();
  dims.insert(dims.end(), b.dims().begin(), b.dims().end());
  return DensityMatrix::validate(kron(a.matrix(), b.matrix()), std::move(dims), tol);
}

Matrix embed_operator(const Matrix& op, const SubsystemSelector& on, const Dims& dims) {
  on.check_range(dims.size());
  const std::size_t selected_dim = dims_product(on.select(dims));
  if (on.empty() || op.dim() != selected_dim) {
    throw DimensionMismatch("embed_operator: operator dimension " +
                            std::to_string(op.dim()) + " does not match selected " +
                            "factors of dimension " + std::to_string(selected_dim));
  }
  const IndexSplit split = split_indices(dims, on);
  const std::size_t total = dims_product(dims);
  Matrix out(total);
  for (std::size_t m = 0; m < total; ++m) {
    for (std::size_t n = 0; n < total; ++n) {
      if (split.rest[m] == split.rest[n]) {
        out(m, n) = op(split.selected[m], split.selected[n]);
      }
    }
  }
  return out;
}

Matrix partial_trace(const Matrix& mat, const Dims& dims, const SubsystemSelector& keep) {
  require_structure(mat, dims);
  if (keep.empty()) {
    throw InvalidSelector("partial trace: keep-set is empty");
  }
  keep.check_range(dims.size());
  const IndexSplit split = split_indices(dims, keep);
  const std::size_t total = mat.dim();
  Matrix out(dims_product(keep.select(dims)));
  // rho1(s, r) = sum_u rho(s u; r u)
  for (std::size_t m = 0; m < total; ++m) {
    for (std::size_t n = 0; n < total; ++n) {
      if (split.rest[m] == split.rest[n]) {
        out(split.selected[m], split.selected[n]) += mat(m, n);
      }
    }
  }
  return out;
}

DensityMatrix partial_trace(const DensityMatrix& rho, const SubsystemSelector& keep,
                            double tol) {
  Matrix reduced = partial_trace(rho.matrix(), rho.dims(), keep);
  return DensityMatrix::validate(std::move(reduced), keep.select(rho.dims()), tol);
}

}  // namespace qcdm
