// Copyright 2026 the stransport developers
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <stdexcept>

#include <cmath>

#include "oracles.hpp"
#include "stransport/law.hpp"
#include "stransport/rng.hpp"
#include "stransport/tensor.hpp"

using namespace stransport;

TEST_CASE("tensor product: scalars and rank-1 factors") {
  const auto one = TensorComponents::scalar(1.0);
  CHECK(tensor_product(one, one).values[0] == doctest::Approx(1.0));

  // (1,2) vector times (3,4) covector -> [[3,4],[6,8]]
  const auto v = TensorComponents::vector({1.0, 2.0});
  const auto w = TensorComponents::covector({3.0, 4.0});
  const auto vw = tensor_product(v, w);
  CHECK(vw.p == 1);
  CHECK(vw.q == 1);
  CHECK(vw.values == std::vector<double>{3.0, 4.0, 6.0, 8.0});
}

TEST_CASE("tensor product matches the brute-force oracle") {
  SplitMix64 rng(42);
  for (int n = 2; n <= 3; ++n) {
    const auto a = oracles::random_tensor(1, 1, n, rng);
    const auto b = oracles::random_tensor(2, 1, n, rng);
    CHECK(max_abs_diff(tensor_product(a, b), oracles::bf_tensor_product(a, b)) == 0.0);
  }
}

TEST_CASE("product then contraction is the matrix product of (1,1) tensors") {
  SplitMix64 rng(7);
  for (int n = 2; n <= 3; ++n) {
    const auto a = oracles::random_tensor(1, 1, n, rng);
    const auto b = oracles::random_tensor(1, 1, n, rng);
    // contract A's lower slot with B's upper slot: (AB)^i_j = A^i_k B^k_j
    const auto ab = contract(tensor_product(a, b), 1, 0);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        double expect = 0.0;
        for (int k = 0; k < n; ++k)
          expect += a.values[i * n + k] * b.values[k * n + j];
        CHECK(ab.values[i * n + j] == doctest::Approx(expect).epsilon(1e-14));
      }
  }
}

TEST_CASE("contraction: traces and the brute-force oracle") {
  const auto id3 = TensorComponents::delta(3);
  CHECK(contract(id3, 0, 0).values[0] == doctest::Approx(3.0));

  const TensorComponents m(1, 1, 2, {1.0, 2.0, 3.0, 4.0});
  CHECK(contract(m, 0, 0).values[0] == doctest::Approx(5.0));

  SplitMix64 rng(3);
  const auto t = oracles::random_tensor(2, 1, 2, rng);
  for (int upper = 0; upper < 2; ++upper)
    CHECK(max_abs_diff(contract(t, upper, 0), oracles::bf_contract(t, upper, 0)) == 0.0);

  CHECK_THROWS_AS(contract(TensorComponents::scalar(1.0), 0, 0), std::invalid_argument);
  CHECK_THROWS_AS(contract(m, 1, 0), std::out_of_range);
}

TEST_CASE("pairing: contract(v x w) equals the Euclidean pairing") {
  SplitMix64 rng(99);
  for (int n = 1; n <= 4; ++n)
    for (int rep = 0; rep < 5; ++rep) {
      const auto v = oracles::random_tensor(1, 0, n, rng);
      const auto w = oracles::random_tensor(0, 1, n, rng);
      const double paired = contract(tensor_product(v, w), 0, 0).values[0];
      CHECK(paired == doctest::Approx(dot(v.values, w.values)).epsilon(1e-13));
    }
}

TEST_CASE("basis change: identity, scalars, diagonal scale") {
  SplitMix64 rng(5);
  const auto t = oracles::random_tensor(1, 1, 2, rng);
  const auto ident = BasisChange::from_forward(Matrix::identity(2));
  CHECK(max_abs_diff(change_tensor_basis(t, ident), t) == 0.0);

  const auto s = TensorComponents::scalar(3.5);
  const auto diag = BasisChange::from_forward(Matrix{{2.0, 0.0}, {0.0, 3.0}});
  CHECK(change_tensor_basis(s, diag).values[0] == doctest::Approx(3.5));

  const auto v = TensorComponents::vector({1.0, 1.0});
  const auto moved = change_tensor_basis(v, diag);
  CHECK(moved.values[0] == doctest::Approx(0.5));
  CHECK(moved.values[1] == doctest::Approx(1.0 / 3.0));

  CHECK_THROWS(BasisChange::from_forward(Matrix(2, 2)));  // singular forward
}

TEST_CASE("basis change round trip returns the original components") {
  SplitMix64 rng(17);
  for (int n = 2; n <= 3; ++n) {
    Matrix a = oracles::random_matrix(n, rng);
    for (int i = 0; i < n; ++i) a(i, i) += 3.0;
    const auto fwd = BasisChange::from_forward(a);
    const auto back = BasisChange::from_forward(a.inverse());
    const auto t = oracles::random_tensor(2, 1, n, rng);
    CHECK(max_abs_diff(change_tensor_basis(change_tensor_basis(t, fwd), back), t) < 1e-12);
  }
}

TEST_CASE("law basis change: constant and exponential diagonal examples") {
  const Interval dom{0.0, 1.0};
  const TransportLaw zero = zero_law(dom, 2);

  // constant basis change leaves the zero law zero
  auto const_change = [](double) {
    return BasisChange::from_forward(Matrix{{2.0, 1.0}, {0.0, 1.0}}, Matrix(2, 2));
  };
  const TransportLaw still_zero = change_law_basis(zero, const_change);
  CHECK(still_zero.coefficient(0.3).max_abs() < 1e-12);

  // A(s) = diag(e^s, 1) turns the zero law into diag(1, 0)
  auto exp_change = [](double s) {
    return BasisChange::from_forward(Matrix{{std::exp(s), 0.0}, {0.0, 1.0}},
                                     Matrix{{std::exp(s), 0.0}, {0.0, 0.0}});
  };
  const TransportLaw transformed = change_law_basis(zero, exp_change);
  for (double s : {0.1, 0.5, 0.9}) {
    const Matrix g = transformed.coefficient(s);
    CHECK(g(0, 0) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(std::abs(g(0, 1)) + std::abs(g(1, 0)) + std::abs(g(1, 1)) < 1e-12);
  }
}

TEST_CASE("law basis change without analytic derivative falls back to differences") {
  const TransportLaw zero = zero_law(Interval{0.0, 1.0}, 2);
  auto exp_change_no_deriv = [](double s) {
    return BasisChange::from_forward(Matrix{{std::exp(s), 0.0}, {0.0, 1.0}});
  };
  const TransportLaw transformed = change_law_basis(zero, exp_change_no_deriv);
  CHECK(transformed.coefficient(0.5)(0, 0) == doctest::Approx(1.0).epsilon(1e-8));
  // one-sided at the ends
  CHECK(transformed.coefficient(0.0)(0, 0) == doctest::Approx(1.0).epsilon(1e-6));
  CHECK(transformed.coefficient(1.0)(0, 0) == doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("law basis change is an action: A then B equals the composite") {
  SplitMix64 rng(23);
  for (int n = 2; n <= 3; ++n) {
    const auto fa = oracles::SmoothMatrixFunction::random(n, rng, 0.3);
    const auto fb = oracles::SmoothMatrixFunction::random(n, rng, 0.3);
    auto make_invertible = [n](const oracles::SmoothMatrixFunction& f, double s) {
      Matrix m = f.value(s);
      for (int i = 0; i < n; ++i) m(i, i) += 4.0;
      return m;
    };
    auto change_a = [&](double s) {
      return BasisChange::from_forward(make_invertible(fa, s), fa.derivative(s));
    };
    auto change_b = [&](double s) {
      return BasisChange::from_forward(make_invertible(fb, s), fb.derivative(s));
    };
    // composite change C = A*B with dC = dA*B + A*dB
    auto change_ab = [&](double s) {
      const Matrix a = make_invertible(fa, s);
      const Matrix b = make_invertible(fb, s);
      return BasisChange::from_forward(a * b, fa.derivative(s) * b + a * fb.derivative(s));
    };

    const auto gamma = oracles::SmoothMatrixFunction::random(n, rng, 0.5);
    const TransportLaw law(Interval{0.0, 1.0}, n, [gamma](double s) { return gamma.value(s); });
    const TransportLaw two_steps = change_law_basis(change_law_basis(law, change_a), change_b);
    const TransportLaw one_step = change_law_basis(law, change_ab);
    for (double s : {0.05, 0.4, 0.77, 0.95})
      CHECK(max_abs_diff(two_steps.coefficient(s), one_step.coefficient(s)) < 1e-8);
  }
}
