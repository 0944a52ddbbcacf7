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

#include "qcdm/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "qcdm/errors.hpp"

namespace qcdm {

namespace {

void require_same_dim(const Matrix& a, const Matrix& b, const char* op) {
  if (a.dim() != b.dim()) {
    throw DimensionMismatch(std::string(op) + ": dimension mismatch (" +
                            std::to_string(a.dim()) + " vs " +
                            std::to_string(b.dim()) + ")");
  }
}

double off_diagonal_norm(const Matrix& a) {
  double sum = 0.0;
  for (std::size_t r = 0; r < a.dim(); ++r) {
    for (std::size_t c = 0; c < a.dim(); ++c) {
      if (r != c) sum += std::norm(a(r, c));
    }
  }
  return std::sqrt(sum);
}

// Annihilates a(p, q) with the unitary U that acts on columns p and q:
//   U = diag(1, e^{-i phi}) * [[c, s], [-s, c]],  a(p, q) = |a(p, q)| e^{i phi}.
// The phase makes the pivot real, after which the real Jacobi rotation
// applies unchanged.
void rotate(Matrix& a, Matrix& v, std::size_t p, std::size_t q) {
  const Complex apq = a(p, q);
  const double magnitude = std::abs(apq);
  if (magnitude == 0.0) return;

  const Complex phase = std::conj(apq) / magnitude;  // e^{-i phi}
  const double app = a(p, p).real();
  const double aqq = a(q, q).real();
  const double tau = (aqq - app) / (2.0 * magnitude);
  const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::hypot(1.0, tau));
  const double c = 1.0 / std::hypot(1.0, t);
  const double s = t * c;

  const Complex upp = c;
  const Complex upq = s;
  const Complex uqp = -s * phase;
  const Complex uqq = c * phase;

  const std::size_t n = a.dim();
  for (std::size_t k = 0; k < n; ++k) {
    const Complex akp = a(k, p);
    const Complex akq = a(k, q);
    a(k, p) = akp * upp + akq * uqp;
    a(k, q) = akp * upq + akq * uqq;
  }
  for (std::size_t k = 0; k < n; ++k) {
    const Complex apk = a(p, k);
    const Complex aqk = a(q, k);
    a(p, k) = std::conj(upp) * apk + std::conj(uqp) * aqk;
    a(q, k) = std::conj(upq) * apk + std::conj(uqq) * aqk;
  }
  for (std::size_t k = 0; k < n; ++k) {
    const Complex vkp = v(k, p);
    const Complex vkq = v(k, q);
    v(k, p) = vkp * upp + vkq * uqp;
    v(k, q) = vkp * upq + vkq * uqq;
  }

  a(p, q) = 0.0;
  a(q, p) = 0.0;
  a(p, p) = a(p, p).real();
  a(q, q) = a(q, q).real();
}

}  // namespace

Matrix::Matrix(std::size_t dim) : dim_(dim), entries_(dim * dim) {}

Matrix::Matrix(std::size_t dim, std::vector<Complex> entries)
    : dim_(dim), entries_(std::move(entries)) {
  if (entries_.size() != dim_ * dim_) {
    throw DimensionMismatch("matrix of dimension " + std::to_string(dim_) +
                            " needs " + std::to_string(dim_ * dim_) +
                            " entries, got " + std::to_string(entries_.size()));
  }
  for (const Complex& z : entries_) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
      throw NumericalError("matrix entry is not finite");
    }
  }
}

Matrix::Matrix(std::initializer_list<std::initializer_list<Complex>> rows)
    : dim_(rows.size()) {
  entries_.reserve(dim_ * dim_);
  for (const auto& row : rows) {
    if (row.size() != dim_) {
      throw DimensionMismatch("matrix literal is not square");
    }
    entries_.insert(entries_.end(), row.begin(), row.end());
  }
}

Matrix Matrix::identity(std::size_t dim) {
  Matrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

Matrix Matrix::diagonal(std::span<const double> values) {
  Matrix m(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
  return m;
}

Matrix Matrix::diagonal(std::initializer_list<double> values) {
  return diagonal(std::span<const double>(values.begin(), values.size()));
}

Matrix& Matrix::operator+=(const Matrix& other) {
  require_same_dim(*this, other, "add");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += other.entries_[i];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& other) {
  require_same_dim(*this, other, "subtract");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= other.entries_[i];
  return *this;
}

Matrix& Matrix::operator*=(Complex factor) {
  for (Complex& z : entries_) z *= factor;
  return *this;
}

Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
Matrix operator*(Matrix a, Complex factor) { return a *= factor; }
Matrix operator*(Complex factor, Matrix a) { return a *= factor; }
Matrix operator*(const Matrix& a, const Matrix& b) { return matmul(a, b); }

Matrix matmul(const Matrix& a, const Matrix& b) {
  require_same_dim(a, b, "matmul");
  const std::size_t n = a.dim();
  Matrix out(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const Complex aik = a(i, k);
      if (aik == Complex{}) continue;
      for (std::size_t j = 0; j < n; ++j) out(i, j) += aik * b(k, j);
    }
  }
  return out;
}

Matrix adjoint(const Matrix& a) {
  const std::size_t n = a.dim();
  Matrix out(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) out(j, i) = std::conj(a(i, j));
  }
  return out;
}

Complex trace(const Matrix& a) {
  Complex sum = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) sum += a(i, i);
  return sum;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  const std::size_t na = a.dim();
  const std::size_t nb = b.dim();
  Matrix out(na * nb);
  for (std::size_t r = 0; r < na; ++r) {
    for (std::size_t s = 0; s < na; ++s) {
      const Complex ars = a(r, s);
      for (std::size_t u = 0; u < nb; ++u) {
        for (std::size_t v = 0; v < nb; ++v) {
          out(r * nb + u, s * nb + v) = ars * b(u, v);
        }
      }
    }
  }
  return out;
}

Matrix outer(std::span<const Complex> ket, std::span<const Complex> bra) {
  if (ket.size() != bra.size()) {
    throw DimensionMismatch("outer: vector lengths differ");
  }
  const std::size_t n = ket.size();
  Matrix out(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) out(i, j) = ket[i] * std::conj(bra[j]);
  }
  return out;
}

double frobenius_norm(const Matrix& a) {
  double sum = 0.0;
  for (const Complex& z : a.entries()) sum += std::norm(z);
  return std::sqrt(sum);
}

double frobenius_distance(const Matrix& a, const Matrix& b) {
  require_same_dim(a, b, "frobenius_distance");
  double sum = 0.0;
  for (std::size_t i = 0; i < a.entries().size(); ++i) {
    sum += std::norm(a.entries()[i] - b.entries()[i]);
  }
  return std::sqrt(sum);
}

Matrix hermitian_part(const Matrix& a) {
  const std::size_t n = a.dim();
  Matrix out(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      out(i, j) = 0.5 * (a(i, j) + std::conj(a(j, i)));
    }
  }
  return out;
}

double hermiticity_residual(const Matrix& a) {
  return frobenius_distance(a, adjoint(a));
}

double hermiticity_tolerance(const Matrix& a) {
  return 1e-9 * std::max(1.0, frobenius_norm(a));
}

EigenDecomposition hermitian_eigendecompose(const Matrix& a,
                                            const JacobiOptions& options) {
  const double residual = hermiticity_residual(a);
  if (residual > hermiticity_tolerance(a)) {
    throw NotHermitian("eigendecomposition: matrix is not Hermitian", residual);
  }

  const std::size_t n = a.dim();
  Matrix work = hermitian_part(a);
  Matrix vectors = Matrix::identity(n);
  const double threshold = options.relative_threshold * frobenius_norm(work);

  int sweep = 0;
  while (off_diagonal_norm(work) > threshold) {
    if (sweep == options.max_sweeps) {
      throw ConvergenceFailure("eigendecomposition: Jacobi sweeps exhausted",
                               sweep);
    }
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) rotate(work, vectors, p, q);
    }
    ++sweep;
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    return work(i, i).real() < work(j, j).real();
  });

  EigenDecomposition result{std::vector<double>(n), Matrix(n)};
  for (std::size_t k = 0; k < n; ++k) {
    result.values[k] = work(order[k], order[k]).real();
    for (std::size_t row = 0; row < n; ++row) {
      result.vectors(row, k) = vectors(row, order[k]);
    }
  }
  return result;
}

}  // namespace qcdm
