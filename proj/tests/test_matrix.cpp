// Copyright 2026 the stransport developers
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <stdexcept>

#include "oracles.hpp"
#include "stransport/matrix.hpp"
#include "stransport/rng.hpp"

using namespace stransport;

TEST_CASE("matrix multiply and inverse") {
  SplitMix64 rng(11);
  for (int n = 1; n <= 5; ++n) {
    Matrix a = oracles::random_matrix(n, rng);
    for (int i = 0; i < n; ++i) a(i, i) += 4.0;  // keep it well conditioned
    const Matrix inv = a.inverse();
    CHECK(max_abs_diff(a * inv, Matrix::identity(n)) < 1e-12);
    CHECK(max_abs_diff(inv * a, Matrix::identity(n)) < 1e-12);
  }
  CHECK_THROWS_AS(Matrix(2, 2).inverse(), std::runtime_error);
}

TEST_CASE("matrix apply and transpose") {
  const Matrix m{{1.0, 2.0}, {3.0, 4.0}};
  const Vec v = m.apply({1.0, 1.0});
  CHECK(v[0] == doctest::Approx(3.0));
  CHECK(v[1] == doctest::Approx(7.0));
  CHECK(m.transposed()(0, 1) == doctest::Approx(3.0));
}

TEST_CASE("cholesky of an SPD matrix") {
  const Matrix g{{4.0, 1.0}, {1.0, 3.0}};
  const Matrix l = cholesky_lower(g);
  CHECK(max_abs_diff(l * l.transposed(), g) < 1e-14);
  const Matrix lorentzian{{-1.0, 0.0}, {0.0, 1.0}};
  CHECK_THROWS_AS(cholesky_lower(lorentzian), std::runtime_error);
}

TEST_CASE("jacobi eigenvalues of symmetric matrices") {
  const Matrix coupled{{2.0, 1.0}, {1.0, 2.0}};
  const auto ev = symmetric_eigenvalues(coupled);
  CHECK(ev[0] == doctest::Approx(1.0));
  CHECK(ev[1] == doctest::Approx(3.0));
  const Matrix lorentzian{{-1.0, 0.0}, {0.0, 1.0}};
  const auto lorentz = symmetric_eigenvalues(lorentzian);
  CHECK(lorentz[0] == doctest::Approx(-1.0));
  CHECK(lorentz[1] == doctest::Approx(1.0));
}
