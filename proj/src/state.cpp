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

#include "qcdm/state.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>

#include "qcdm/format.hpp"

namespace qcdm {

namespace {

void require_dim(const Matrix& a, std::size_t dim, const char* op) {
  if (a.dim() != dim) {
    throw DimensionMismatch(std::string(op) + ": operator of dimension " +
                            std::to_string(a.dim()) + " applied to state of dimension " +
                            std::to_string(dim));
  }
}

}  // namespace

std::size_t dims_product(const Dims& dims) {
  if (dims.empty()) return 0;
  return std::accumulate(dims.begin(), dims.end(), std::size_t{1},
                         std::multiplies<>());
}

std::string ValidationReport::describe() const {
  std::string out;
  for (const Violation& v : violations) {
    out += v.message;
    out += '\n';
  }
  return out;
}

namespace {

std::string summarize(const ValidationReport& report) {
  std::string out = "invalid density matrix";
  for (std::size_t i = 0; i < report.violations.size(); ++i) {
    out += i == 0 ? ": " : "; ";
    out += report.violations[i].message;
  }
  return out;
}

}  // namespace

InvalidState::InvalidState(ValidationReport report)
    : DomainError(summarize(report)), report_(std::move(report)) {}

ValidationReport check_state(const Matrix& mat, const Dims& dims, double tol) {
  ValidationReport report;
  const bool zero_factor =
      std::find(dims.begin(), dims.end(), std::size_t{0}) != dims.end();
  if (dims.empty() || zero_factor || dims_product(dims) != mat.dim()) {
    report.violations.push_back(
        {Violation::Kind::kShape, static_cast<double>(dims_product(dims)),
         "dims product = " + std::to_string(dims_product(dims)) +
             " does not match matrix dimension " + std::to_string(mat.dim())});
  }
  if (mat.dim() == 0) return report;

  const double asym = hermiticity_residual(mat);
  if (asym > tol) {
    report.violations.push_back({Violation::Kind::kNotHermitian, asym,
                                 "not Hermitian: ||rho - rho^H||_F = " +
                                     format_real(asym)});
  }

  const double tr = trace(mat).real();
  if (std::abs(tr - 1.0) > tol) {
    report.violations.push_back(
        {Violation::Kind::kTrace, tr, "trace = " + format_real(tr)});
  }

  // Positivity is judged on the Hermitian part so a non-Hermitian candidate
  // still gets a spectrum report.
  const EigenDecomposition eig = hermitian_eigendecompose(hermitian_part(mat));
  const double min_eig = eig.values.front();
  if (min_eig < -tol) {
    report.violations.push_back({Violation::Kind::kNegativeEigenvalue, min_eig,
                                 "min eigenvalue = " + format_real(min_eig)});
  }
  return report;
}

DensityMatrix DensityMatrix::validate(Matrix mat, Dims dims, double tol) {
  ValidationReport report = check_state(mat, dims, tol);
  if (!report.ok()) throw InvalidState(std::move(report));
  return DensityMatrix(std::move(mat), std::move(dims));
}

DensityMatrix DensityMatrix::validate(Matrix mat, double tol) {
  Dims dims{mat.dim()};
  return validate(std::move(mat), std::move(dims), tol);
}

PureKet::PureKet(std::vector<Complex> amplitudes, Dims dims, double tol)
    : amplitudes_(std::move(amplitudes)), dims_(std::move(dims)) {
  if (dims_product(dims_) != amplitudes_.size()) {
    throw DimensionMismatch("ket: dims product does not match amplitude count");
  }
  double norm2 = 0.0;
  for (const Complex& z : amplitudes_) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
      throw NumericalError("ket: amplitude is not finite");
    }
    norm2 += std::norm(z);
  }
  if (std::abs(norm2 - 1.0) > tol) {
    throw NumericalError("ket is not normalized: ||psi||^2 = " + format_real(norm2));
  }
}

PureKet::PureKet(std::vector<Complex> amplitudes, double tol)
    : PureKet(amplitudes, Dims{amplitudes.size()}, tol) {}

Observable::Observable(Matrix mat) : mat_(std::move(mat)) {
  const double residual = hermiticity_residual(mat_);
  if (residual > hermiticity_tolerance(mat_)) {
    throw NotHermitian("observable is not Hermitian: ||F - F^H||_F = " +
                           format_real(residual),
                       residual);
  }
}

DensityMatrix density_from_ket(const PureKet& psi) {
  return DensityMatrix::validate(outer(psi.amplitudes(), psi.amplitudes()),
                                 psi.dims());
}

double expectation(const Observable& f, const DensityMatrix& rho, double tol) {
  require_dim(f.matrix(), rho.dim(), "expectation");
  const Complex value = trace(f.matrix() * rho.matrix());
  if (std::abs(value.imag()) > tol) {
    throw NumericalError("expectation: imaginary part = " + format_real(value.imag()));
  }
  return value.real();
}

double dispersion(const Observable& f, const DensityMatrix& rho, double tol) {
  const double mean = expectation(f, rho, tol);
  const Matrix q = f.matrix() - Matrix::identity(rho.dim()) * mean;
  const Complex value = trace(q * q * rho.matrix());
  if (std::abs(value.imag()) > tol) {
    throw NumericalError("dispersion: imaginary part = " + format_real(value.imag()));
  }
  const double d = value.real();
  if (d < -tol) {
    throw NumericalError("dispersion is negative: " + format_real(d));
  }
  return std::max(d, 0.0);
}

SpectralForm spectral_decompose(const Observable& f, double cluster_tol) {
  const EigenDecomposition eig = hermitian_eigendecompose(f.matrix());
  const std::size_t n = eig.values.size();
  SpectralForm form;
  std::size_t start = 0;
  while (start < n) {
    std::size_t end = start + 1;
    while (end < n && eig.values[end] - eig.values[end - 1] <= cluster_tol) ++end;

    Matrix projector(n);
    double sum = 0.0;
    for (std::size_t k = start; k < end; ++k) {
      sum += eig.values[k];
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          projector(i, j) += eig.vectors(i, k) * std::conj(eig.vectors(j, k));
        }
      }
    }
    form.eigenvalues.push_back(sum / static_cast<double>(end - start));
    form.projectors.push_back(std::move(projector));
    start = end;
  }
  return form;
}

PurityResult purity(const DensityMatrix& rho, double tol) {
  const Matrix& m = rho.matrix();
  const double residual = frobenius_distance(m * m, m);
  return {residual <= tol, residual};
}

std::vector<double> probability_rule(const DensityMatrix& rho,
                                     const SpectralForm& family, double tol) {
  Matrix total(rho.dim());
  for (const Matrix& p : family.projectors) {
    require_dim(p, rho.dim(), "probability_rule");
    total += p;
  }
  const double deficit = frobenius_distance(total, Matrix::identity(rho.dim()));
  if (deficit > tol) {
    throw IncompleteFamily("projectors do not sum to identity: residual = " +
                               format_real(deficit),
                           deficit);
  }

  std::vector<double> probabilities;
  probabilities.reserve(family.projectors.size());
  for (const Matrix& p : family.projectors) {
    const double value = trace(rho.matrix() * p).real();
    if (value < -tol || value > 1.0 + tol) {
      throw NumericalError("probability out of range: " + format_real(value));
    }
    probabilities.push_back(std::clamp(value, 0.0, 1.0));
  }
  return probabilities;
}

}  // namespace qcdm
