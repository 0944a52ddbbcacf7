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

// Random generators shared by the property tests. Everything here is built
// from first principles (Gaussian entries, Gram-Schmidt) and never calls
// the eigensolver, so the properties it feeds stay independent checks.

#include <cmath>
#include <random>
#include <vector>

#include "qcdm/linalg.hpp"
#include "qcdm/state.hpp"

namespace qcdm::testing {

using Rng = std::mt19937_64;

inline Complex gaussian_complex(Rng& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  const double re = normal(rng);
  const double im = normal(rng);
  return {re, im};
}

inline Matrix random_matrix(std::size_t n, Rng& rng) {
  Matrix m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = gaussian_complex(rng);
  return m;
}

inline Matrix random_hermitian(std::size_t n, Rng& rng, double scale = 1.0) {
  return hermitian_part(random_matrix(n, rng)) * scale;
}

/// G G^H / Tr(G G^H); full rank with probability one.
inline Matrix random_density(std::size_t n, Rng& rng) {
  const Matrix g = random_matrix(n, rng);
  Matrix rho = g * adjoint(g);
  return hermitian_part(rho * (1.0 / trace(rho).real()));
}

/// Normalized Gaussian vector.
inline std::vector<Complex> random_ket(std::size_t n, Rng& rng) {
  std::vector<Complex> v(n);
  double norm2 = 0.0;
  for (Complex& z : v) {
    z = gaussian_complex(rng);
    norm2 += std::norm(z);
  }
  for (Complex& z : v) z /= std::sqrt(norm2);
  return v;
}

/// Columns of a Haar-ish random unitary via modified Gram-Schmidt.
inline std::vector<std::vector<Complex>> random_orthonormal_basis(std::size_t n,
                                                                  Rng& rng) {
  std::vector<std::vector<Complex>> basis;
  while (basis.size() < n) {
    std::vector<Complex> v = random_ket(n, rng);
    for (const auto& b : basis) {
      Complex overlap = 0.0;
      for (std::size_t i = 0; i < n; ++i) overlap += std::conj(b[i]) * v[i];
      for (std::size_t i = 0; i < n; ++i) v[i] -= overlap * b[i];
    }
    double norm2 = 0.0;
    for (const Complex& z : v) norm2 += std::norm(z);
    if (norm2 < 1e-6) continue;
    for (Complex& z : v) z /= std::sqrt(norm2);
    basis.push_back(std::move(v));
  }
  return basis;
}

inline std::vector<Matrix> projectors_of(const std::vector<std::vector<Complex>>& basis) {
  std::vector<Matrix> out;
  for (const auto& v : basis) out.push_back(outer(v, v));
  return out;
}

inline Matrix sigma_x() { return Matrix{{0.0, 1.0}, {1.0, 0.0}}; }
inline Matrix sigma_y() {
  return Matrix{{0.0, Complex(0.0, -1.0)}, {Complex(0.0, 1.0), 0.0}};
}
inline Matrix sigma_z() { return Matrix::diagonal({1.0, -1.0}); }

/// Matrix unit |i><j| of dimension n.
inline Matrix unit(std::size_t n, std::size_t i, std::size_t j) {
  Matrix m(n);
  m(i, j) = 1.0;
  return m;
}

}  // namespace qcdm::testing
