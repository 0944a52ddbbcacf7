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

#include "qcdm/errors.hpp"
#include "qcdm/state.hpp"
#include "support.hpp"

namespace qcdm {
namespace {

using testing::sigma_z;

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

DensityMatrix ket0() { return density_from_ket(PureKet({1.0, 0.0})); }
DensityMatrix maximally_mixed() {
  return DensityMatrix::validate(Matrix::identity(2) * 0.5);
}

TEST_CASE("density_from_ket") {
  CHECK(ket0().matrix() == Matrix::diagonal({1, 0}));

  const DensityMatrix plus = density_from_ket(PureKet({kInvSqrt2, kInvSqrt2}));
  for (const Complex& z : plus.matrix().entries()) CHECK(z.real() == doctest::Approx(0.5));

  const DensityMatrix singlet =
      density_from_ket(PureKet({0.0, kInvSqrt2, -kInvSqrt2, 0.0}, Dims{2, 2}));
  Matrix expected(4);
  expected(1, 1) = 0.5;
  expected(2, 2) = 0.5;
  expected(1, 2) = -0.5;
  expected(2, 1) = -0.5;
  CHECK(frobenius_distance(singlet.matrix(), expected) < 1e-15);
  CHECK(singlet.dims() == Dims{2, 2});
  CHECK(purity(singlet).is_pure);

  CHECK_THROWS_AS(PureKet({1.0, 1.0}), NumericalError);
  CHECK_THROWS_AS(PureKet({1.0, 0.0}, Dims{3}), DimensionMismatch);
}

TEST_CASE("validate accepts and rejects") {
  CHECK_NOTHROW(DensityMatrix::validate(Matrix::identity(2) * 0.5));

  SUBCASE("trace deficit") {
    const ValidationReport r = check_state(Matrix::diagonal({0.7, 0.4}), {2});
    REQUIRE(r.violations.size() == 1);
    CHECK(r.violations[0].kind == Violation::Kind::kTrace);
    CHECK(r.violations[0].measured == doctest::Approx(1.1));
    CHECK(r.violations[0].message == "trace = 1.1");
  }
  SUBCASE("negative eigenvalue") {
    // Eigenvalues 0.5 +- 0.6.
    const ValidationReport r = check_state(Matrix{{0.5, 0.6}, {0.6, 0.5}}, {2});
    REQUIRE(r.violations.size() == 1);
    CHECK(r.violations[0].kind == Violation::Kind::kNegativeEigenvalue);
    CHECK(r.violations[0].measured == doctest::Approx(-0.1).epsilon(1e-12));
    CHECK(r.violations[0].message == "min eigenvalue = -0.1");
  }
  SUBCASE("every violation is reported") {
    // Hermitian part [[1, 1.5], [1.5, 1]] has eigenvalues -0.5 and 2.5.
    const ValidationReport r = check_state(Matrix{{1.0, 3.0}, {0.0, 1.0}}, {3});
    REQUIRE(r.violations.size() == 4);
    CHECK(r.violations[0].kind == Violation::Kind::kShape);
    CHECK(r.violations[1].kind == Violation::Kind::kNotHermitian);
    CHECK(r.violations[1].measured == doctest::Approx(3.0 * std::sqrt(2.0)));
    CHECK(r.violations[2].kind == Violation::Kind::kTrace);
    CHECK(r.violations[2].measured == 2.0);
    CHECK(r.violations[3].kind == Violation::Kind::kNegativeEigenvalue);
    CHECK(r.violations[3].measured == doctest::Approx(-0.5));
  }
  SUBCASE("exception carries the report") {
    try {
      DensityMatrix::validate(Matrix::diagonal({0.7, 0.4}));
      FAIL("expected InvalidState");
    } catch (const InvalidState& e) {
      CHECK(e.report().violations.size() == 1);
      CHECK(std::string(e.what()) == "invalid density matrix: trace = 1.1");
    }
  }
  SUBCASE("tolerance override") {
    const Matrix almost = Matrix::diagonal({0.5, 0.5 + 1e-6});
    CHECK_THROWS_AS(DensityMatrix::validate(almost), InvalidState);
    CHECK_NOTHROW(DensityMatrix::validate(almost, 1e-5));
  }
  SUBCASE("shape") {
    CHECK_THROWS_AS(DensityMatrix::validate(Matrix::identity(4) * 0.25, Dims{2, 3}),
                    InvalidState);
    CHECK_THROWS_AS(DensityMatrix::validate(Matrix::identity(4) * 0.25, Dims{}),
                    InvalidState);
    CHECK_NOTHROW(DensityMatrix::validate(Matrix::identity(4) * 0.25, Dims{2, 2}));
  }
}

TEST_CASE("check_state on a non-Hermitian matrix with negative Hermitian part") {
  // Hermitian part [[0.5, 0.6], [0.6, 0.5]] has eigenvalue -0.1.
  const ValidationReport r = check_state(Matrix{{0.5, 1.2}, {0.0, 0.5}}, {2});
  REQUIRE(r.violations.size() == 2);
  CHECK(r.violations[0].kind == Violation::Kind::kNotHermitian);
  CHECK(r.violations[1].kind == Violation::Kind::kNegativeEigenvalue);
}

TEST_CASE("expectation") {
  testing::Rng rng(1);
  const Observable identity(Matrix::identity(3));
  for (int i = 0; i < 5; ++i) {
    const DensityMatrix rho = DensityMatrix::validate(testing::random_density(3, rng));
    CHECK(expectation(identity, rho) == doctest::Approx(1.0).epsilon(1e-13));
  }
  CHECK(expectation(Observable(sigma_z()), maximally_mixed()) == 0.0);
  CHECK(expectation(Observable(sigma_z()), ket0()) == 1.0);

  CHECK_THROWS_AS(expectation(Observable(Matrix::identity(3)), ket0()), DimensionMismatch);
  CHECK_THROWS_AS(Observable(Matrix{{0.0, 1.0}, {0.0, 0.0}}), NotHermitian);

  // A large observable may carry an anti-Hermitian part inside the operator
  // tolerance that still shows up as an imaginary expectation.
  Matrix f = sigma_z() * 1e6;
  f(0, 1) = 1e-4;
  f(1, 0) = -1e-4;
  const Complex i(0.0, 1.0);
  const DensityMatrix y_plus = DensityMatrix::validate(Matrix{{0.5, -0.5 * i}, {0.5 * i, 0.5}});
  CHECK_THROWS_AS(expectation(Observable(f), y_plus), NumericalError);
}

TEST_CASE("dispersion") {
  CHECK(dispersion(Observable(sigma_z()), ket0()) == 0.0);
  CHECK(dispersion(Observable(sigma_z()), maximally_mixed()) == doctest::Approx(1.0));
  testing::Rng rng(2);
  const DensityMatrix rho = DensityMatrix::validate(testing::random_density(4, rng));
  CHECK(dispersion(Observable(Matrix::identity(4)), rho) == 0.0);
}

TEST_CASE("spectral_decompose") {
  SUBCASE("sigma_z") {
    const SpectralForm form = spectral_decompose(Observable(sigma_z()));
    REQUIRE(form.eigenvalues.size() == 2);
    CHECK(form.eigenvalues[0] == -1.0);
    CHECK(form.eigenvalues[1] == 1.0);
    CHECK(form.projectors[0] == Matrix::diagonal({0, 1}));
    CHECK(form.projectors[1] == Matrix::diagonal({1, 0}));
  }
  SUBCASE("identity is one cluster") {
    const SpectralForm form = spectral_decompose(Observable(Matrix::identity(2)));
    REQUIRE(form.eigenvalues.size() == 1);
    CHECK(form.eigenvalues[0] == 1.0);
    CHECK(form.projectors[0] == Matrix::identity(2));
  }
  SUBCASE("near-degenerate pair merges") {
    const SpectralForm form =
        spectral_decompose(Observable(Matrix::diagonal({2.0, 2.0 + 1e-12, 5.0})), 1e-9);
    REQUIRE(form.eigenvalues.size() == 2);
    CHECK(form.eigenvalues[0] == doctest::Approx(2.0).epsilon(1e-11));
    CHECK(form.eigenvalues[1] == 5.0);
    CHECK(trace(form.projectors[0]).real() == doctest::Approx(2.0));
    CHECK(trace(form.projectors[1]).real() == doctest::Approx(1.0));
  }
  SUBCASE("single linkage chains across the whole run") {
    const SpectralForm form = spectral_decompose(
        Observable(Matrix::diagonal({1.0, 1.0 + 0.8e-9, 1.0 + 1.6e-9})), 1e-9);
    CHECK(form.eigenvalues.size() == 1);
  }
}

TEST_CASE("spectral form invariants on random observables") {
  testing::Rng rng(33);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 2 + trial % 6;
    Matrix f = testing::random_hermitian(n, rng);
    if (trial % 3 == 0) {
      // Force a degenerate eigenvalue: F = U diag(1, 1, ...) U^H.
      const auto basis = testing::random_orthonormal_basis(n, rng);
      const auto proj = testing::projectors_of(basis);
      f = Matrix(n);
      for (std::size_t k = 0; k < n; ++k) f += proj[k] * (k < 2 ? 1.0 : 2.0 + k);
    }
    const SpectralForm form = spectral_decompose(Observable(f));
    Matrix sum(n), rebuilt(n);
    for (std::size_t i = 0; i < form.projectors.size(); ++i) {
      const Matrix& p = form.projectors[i];
      CHECK(hermiticity_residual(p) <= 1e-9);
      CHECK(frobenius_distance(p * p, p) <= 1e-9);
      for (std::size_t j = 0; j < form.projectors.size(); ++j) {
        if (i != j) CHECK(frobenius_norm(p * form.projectors[j]) <= 1e-9);
      }
      sum += p;
      rebuilt += p * form.eigenvalues[i];
    }
    CHECK(frobenius_distance(sum, Matrix::identity(n)) <= 1e-9);
    CHECK(frobenius_distance(rebuilt, f) <= 1e-9);
    if (trial % 3 == 0) CHECK(form.eigenvalues.size() == n - 1);
  }
}

TEST_CASE("purity") {
  const PurityResult pure = purity(ket0());
  CHECK(pure.is_pure);
  CHECK(pure.residual == 0.0);

  const PurityResult mixed = purity(maximally_mixed());
  CHECK_FALSE(mixed.is_pure);
  CHECK(mixed.residual == doctest::Approx(1.0 / (2.0 * std::sqrt(2.0))).epsilon(1e-14));
}

TEST_CASE("probability_rule") {
  SpectralForm z_basis{{0.0, 1.0}, {Matrix::diagonal({1, 0}), Matrix::diagonal({0, 1})}};
  auto p = probability_rule(maximally_mixed(), z_basis);
  CHECK(p == std::vector<double>{0.5, 0.5});
  p = probability_rule(ket0(), z_basis);
  CHECK(p == std::vector<double>{1.0, 0.0});
  p = probability_rule(density_from_ket(PureKet({kInvSqrt2, kInvSqrt2})), z_basis);
  CHECK(p[0] == doctest::Approx(0.5));
  CHECK(p[1] == doctest::Approx(0.5));

  SpectralForm incomplete{{0.0}, {Matrix::diagonal({1, 0})}};
  CHECK_THROWS_AS(probability_rule(ket0(), incomplete), IncompleteFamily);
}

TEST_CASE("eigenstates have definite values") {
  testing::Rng rng(44);
  for (int trial = 0; trial < 10; ++trial) {
    const Matrix f = testing::random_hermitian(4, rng, 2.0);
    const Observable obs(f);
    const EigenDecomposition eig = hermitian_eigendecompose(f);
    for (std::size_t k = 0; k < 4; ++k) {
      std::vector<Complex> v(4);
      for (std::size_t i = 0; i < 4; ++i) v[i] = eig.vectors(i, k);
      const DensityMatrix rho = density_from_ket(PureKet(v));
      const double d = dispersion(obs, rho);
      CHECK(d <= kDefaultTol);
      CHECK(expectation(obs, rho) == doctest::Approx(eig.values[k]).epsilon(1e-9));
      // Zero dispersion forces [F, rho] = 0.
      if (d <= kDefaultTol) {
        CHECK(frobenius_distance(f * rho.matrix(), rho.matrix() * f) <= 10 * kDefaultTol);
      }
    }
  }
}

TEST_CASE("Born probabilities from random states and bases") {
  testing::Rng rng(55);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 2 + trial % 4;
    const DensityMatrix rho = DensityMatrix::validate(testing::random_density(n, rng));
    SpectralForm family;
    family.projectors = testing::projectors_of(testing::random_orthonormal_basis(n, rng));
    family.eigenvalues.assign(n, 0.0);
    const std::vector<double> p = probability_rule(rho, family);
    double total = 0.0;
    for (double x : p) {
      CHECK(x >= 0.0);
      total += x;
    }
    CHECK(std::abs(total - 1.0) <= kDefaultTol);

    // Additivity over disjoint projector subsets.
    const Matrix merged = family.projectors[0] + family.projectors[1];
    const double joint = trace(rho.matrix() * merged).real();
    const double split = trace(rho.matrix() * family.projectors[0]).real() +
                         trace(rho.matrix() * family.projectors[1]).real();
    CHECK(std::abs(joint - split) <= 1e-12);
  }
}

}  // namespace
}  // namespace qcdm
