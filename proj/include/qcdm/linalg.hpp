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

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace qcdm {

using Complex = std::complex<double>;

/// Dense square complex matrix stored row-major. Every entry is finite.
///
/// Composite-space indexing follows one global convention: for a space
/// with factor dimensions (d_0, ..., d_{k-1}) the flat index is
/// i_0 * (d_1 * ... * d_{k-1}) + ... + i_{k-1}, i.e. factor 0 is the most
/// significant digit. kron() produces exactly this layout.
class Matrix {
 public:
  Matrix() = default;
  explicit Matrix(std::size_t dim);
  /// Throws DimensionMismatch unless entries.size() == dim * dim, and
  /// NumericalError on non-finite entries.
  Matrix(std::size_t dim, std::vector<Complex> entries);
  /// Row-by-row literal; rows must all have the same length as the count.
  Matrix(std::initializer_list<std::initializer_list<Complex>> rows);

  static Matrix identity(std::size_t dim);
  static Matrix diagonal(std::span<const double> values);
  static Matrix diagonal(std::initializer_list<double> values);

  std::size_t dim() const noexcept { return dim_; }
  std::span<const Complex> entries() const noexcept { return entries_; }

  Complex& operator()(std::size_t row, std::size_t col) {
    return entries_[row * dim_ + col];
  }
  const Complex& operator()(std::size_t row, std::size_t col) const {
    return entries_[row * dim_ + col];
  }

  Matrix& operator+=(const Matrix& other);
  Matrix& operator-=(const Matrix& other);
  Matrix& operator*=(Complex factor);

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t dim_ = 0;
  std::vector<Complex> entries_;
};

Matrix operator+(Matrix a, const Matrix& b);
Matrix operator-(Matrix a, const Matrix& b);
Matrix operator*(Matrix a, Complex factor);
Matrix operator*(Complex factor, Matrix a);
/// Matrix product; same as matmul().
Matrix operator*(const Matrix& a, const Matrix& b);

Matrix matmul(const Matrix& a, const Matrix& b);
Matrix adjoint(const Matrix& a);
Complex trace(const Matrix& a);
Matrix kron(const Matrix& a, const Matrix& b);

/// |ket><bra| for two vectors of the same length.
Matrix outer(std::span<const Complex> ket, std::span<const Complex> bra);

double frobenius_norm(const Matrix& a);
double frobenius_distance(const Matrix& a, const Matrix& b);

/// (A + A^H) / 2.
Matrix hermitian_part(const Matrix& a);

/// ||A - A^H||_F.
double hermiticity_residual(const Matrix& a);

/// Absolute hermiticity tolerance used for operator inputs: 1e-9 scaled by
/// max(1, ||A||_F).
double hermiticity_tolerance(const Matrix& a);

struct EigenDecomposition {
  /// Ascending. Near-equal values are reported separately.
  std::vector<double> values;
  /// Column k is the unit eigenvector for values[k].
  Matrix vectors;
};

struct JacobiOptions {
  /// Convergence when the off-diagonal Frobenius norm drops to
  /// relative_threshold * ||A||_F.
  double relative_threshold = 1e-13;
  int max_sweeps = 100;
};

/// Cyclic complex Jacobi eigensolver for Hermitian matrices.
///
/// Throws NotHermitian if ||A - A^H||_F exceeds hermiticity_tolerance(A) and
/// ConvergenceFailure if the sweep budget runs out.
EigenDecomposition hermitian_eigendecompose(const Matrix& a,
                                            const JacobiOptions& options = {});

}  // namespace qcdm
