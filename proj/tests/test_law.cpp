// Copyright 2026 the stransport developers
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <stdexcept>

#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "stransport/law.hpp"

using namespace stransport;

TEST_CASE("tabulated law interpolates linearly between samples") {
  const std::vector<double> grid = {0.0, 1.0, 2.0};
  const std::vector<Matrix> samples = {Matrix{{0.0}}, Matrix{{2.0}}, Matrix{{6.0}}};
  const TransportLaw law = tabulated_law(grid, samples);
  CHECK(law.dim() == 1);
  CHECK(law.coefficient(0.5)(0, 0) == doctest::Approx(1.0));
  CHECK(law.coefficient(1.5)(0, 0) == doctest::Approx(4.0));
  CHECK(law.coefficient(2.0)(0, 0) == doctest::Approx(6.0));
  CHECK_THROWS_AS(law.coefficient(2.5), std::domain_error);
}

TEST_CASE("tabulated law rejects bad grids") {
  const std::vector<Matrix> two = {Matrix{{1.0}}, Matrix{{1.0}}};
  const std::vector<Matrix> one = {Matrix{{1.0}}};
  const std::vector<double> flat_grid = {0.0, 0.0};
  const std::vector<double> reversed_grid = {1.0, 0.0};
  const std::vector<double> good_grid = {0.0, 1.0};
  CHECK_THROWS_AS(tabulated_law(flat_grid, two), std::invalid_argument);
  CHECK_THROWS_AS(tabulated_law(reversed_grid, two), std::invalid_argument);
  CHECK_THROWS_AS(tabulated_law(good_grid, one), std::invalid_argument);
}

TEST_CASE("cubic tabulated law reproduces smooth samples closely") {
  // sin(2 pi s) has vanishing second derivatives at the ends, so the natural
  // spline converges at full fourth order everywhere
  std::vector<double> grid;
  std::vector<Matrix> samples;
  const int m = 41;
  for (int k = 0; k < m; ++k) {
    const double s = static_cast<double>(k) / (m - 1);
    grid.push_back(s);
    samples.push_back(Matrix{{std::sin(2.0 * std::numbers::pi * s)}});
  }
  const TransportLaw law = tabulated_law(grid, samples, Interp::cubic);
  double worst = 0.0;
  for (int k = 0; k < 200; ++k) {
    const double s = 0.0025 + k * 0.005;
    worst = std::max(worst,
                     std::abs(law.coefficient(s)(0, 0) - std::sin(2.0 * std::numbers::pi * s)));
  }
  CHECK(worst < 2e-5);
}

TEST_CASE("cubic spline hits its knots and differentiates") {
  const std::vector<double> x = {0.0, 0.5, 1.0, 2.0};
  const std::vector<double> y = {1.0, 2.0, 0.5, 3.0};
  const CubicSpline sp(x, y);
  for (std::size_t k = 0; k < x.size(); ++k)
    CHECK(sp.value(x[k]) == doctest::Approx(y[k]).epsilon(1e-12));
  // derivative consistent with finite differences of value()
  const double h = 1e-6;
  for (double s : {0.25, 0.75, 1.5})
    CHECK(sp.derivative(s) ==
          doctest::Approx((sp.value(s + h) - sp.value(s - h)) / (2 * h)).epsilon(1e-6));
}

TEST_CASE("continuity defect is O(ds) for smooth laws") {
  const TransportLaw law(Interval{0.0, 1.0}, 1,
                         [](double s) { return Matrix{{std::sin(5.0 * s)}}; });
  CHECK(law_continuity_defect(law, 50, 1e-4) < 1e-3);
}

TEST_CASE("constant and zero law factories") {
  const Matrix gamma{{0.0, 1.0}, {-1.0, 0.0}};
  const TransportLaw law = constant_law(Interval{-1.0, 1.0}, gamma);
  CHECK(max_abs_diff(law.coefficient(-0.5), gamma) == 0.0);
  CHECK(zero_law(Interval{0.0, 1.0}, 3).coefficient(1.0).max_abs() == 0.0);
  CHECK(law.default_step() == doctest::Approx(0.001));
}
