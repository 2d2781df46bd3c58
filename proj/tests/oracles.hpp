// Copyright 2026 the stransport developers
// SPDX-License-Identifier: Apache-2.0
//
// Independent oracles used by the tests: power-series matrix exponential,
// brute-force multi-index tensor algebra, closed-form rotations/boosts and
// angle comparison helpers. These deliberately avoid the library's stride
// tricks and solver paths.

#pragma once

#include <cmath>
#include <numbers>
#include <vector>

#include "stransport/matrix.hpp"
#include "stransport/rng.hpp"
#include "stransport/tensor.hpp"

namespace oracles {

using stransport::Matrix;
using stransport::TensorComponents;
using stransport::Vec;

//! exp(A) by the plain power series (fine for the small norms used in tests).
inline Matrix matrix_exp(const Matrix& a) {
  Matrix sum = Matrix::identity(a.rows());
  Matrix term = sum;
  for (int k = 1; k <= 300; ++k) {
    term = term * a * (1.0 / k);
    sum += term;
    if (term.max_abs() < 1e-22) break;
  }
  return sum;
}

//! 2D rotation by angle phi.
inline Matrix rotation2(double phi) {
  return Matrix{{std::cos(phi), -std::sin(phi)}, {std::sin(phi), std::cos(phi)}};
}

//! 2D Lorentz boost exp(chi * [[0,1],[1,0]]).
inline Matrix boost2(double chi) {
  return Matrix{{std::cosh(chi), std::sinh(chi)}, {std::sinh(chi), std::cosh(chi)}};
}

//! Enumerates all rank-digit multi-indices in dimension dim.
inline std::vector<std::vector<int>> all_multi_indices(int rank, int dim) {
  std::vector<std::vector<int>> out;
  std::vector<int> mi(static_cast<std::size_t>(rank), 0);
  while (true) {
    out.push_back(mi);
    int k = rank - 1;
    while (k >= 0 && ++mi[k] == dim) mi[k--] = 0;
    if (k < 0) break;
  }
  if (rank == 0) out.assign(1, {});
  return out;
}

inline int flat_index(const std::vector<int>& mi, int dim) {
  int idx = 0;
  for (int d : mi) idx = idx * dim + d;
  return idx;
}

//! Brute-force outer product over explicit multi-indices.
inline TensorComponents bf_tensor_product(const TensorComponents& a, const TensorComponents& b) {
  TensorComponents r(a.p + b.p, a.q + b.q, a.dim);
  for (const auto& up_a : all_multi_indices(a.p, a.dim))
    for (const auto& up_b : all_multi_indices(b.p, b.dim))
      for (const auto& lo_a : all_multi_indices(a.q, a.dim))
        for (const auto& lo_b : all_multi_indices(b.q, b.dim)) {
          std::vector<int> full = up_a;
          full.insert(full.end(), up_b.begin(), up_b.end());
          full.insert(full.end(), lo_a.begin(), lo_a.end());
          full.insert(full.end(), lo_b.begin(), lo_b.end());
          std::vector<int> ia = up_a;
          ia.insert(ia.end(), lo_a.begin(), lo_a.end());
          std::vector<int> ib = up_b;
          ib.insert(ib.end(), lo_b.begin(), lo_b.end());
          r.values[flat_index(full, r.dim)] =
              a.values[flat_index(ia, a.dim)] * b.values[flat_index(ib, b.dim)];
        }
  return r;
}

//! Brute-force contraction by explicit index summation.
inline TensorComponents bf_contract(const TensorComponents& t, int upper, int lower) {
  TensorComponents r(t.p - 1, t.q - 1, t.dim);
  const int a = upper;
  const int b = t.p + lower;
  for (const auto& mi : all_multi_indices(t.rank() - 2, t.dim)) {
    double sum = 0.0;
    for (int k = 0; k < t.dim; ++k) {
      std::vector<int> full;
      int taken = 0;
      for (int s = 0; s < t.rank(); ++s) {
        if (s == a || s == b)
          full.push_back(k);
        else
          full.push_back(mi[taken++]);
      }
      sum += t.values[flat_index(full, t.dim)];
    }
    r.values[flat_index(mi, t.dim)] = sum;
  }
  return r;
}

inline double wrap_angle(double x) {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  double w = std::remainder(x, two_pi);
  return w;
}

//! Distance between angles modulo 2*pi, ignoring orientation sign.
inline double angle_distance_up_to_sign(double a, double b) {
  return std::min(std::abs(wrap_angle(a - b)), std::abs(wrap_angle(a + b)));
}

inline TensorComponents random_tensor(int p, int q, int dim, stransport::SplitMix64& rng) {
  TensorComponents t(p, q, dim);
  for (double& v : t.values) v = rng.uniform(-1.0, 1.0);
  return t;
}

inline Matrix random_matrix(int n, stransport::SplitMix64& rng, double lo = -1.0,
                            double hi = 1.0) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = rng.uniform(lo, hi);
  return m;
}

//! Random smooth matrix function a0 + a1 sin(w s + phi) + a2 cos(v s), with a
//! matching analytic derivative; used to build smooth test laws.
struct SmoothMatrixFunction {
  Matrix a0, a1, a2;
  double w = 1.0, v = 1.0, phi = 0.0;

  static SmoothMatrixFunction random(int n, stransport::SplitMix64& rng, double amplitude = 1.0,
                                     double freq_cap = 2.0 * std::numbers::pi) {
    SmoothMatrixFunction f;
    f.a0 = random_matrix(n, rng, -amplitude, amplitude);
    f.a1 = random_matrix(n, rng, -amplitude, amplitude);
    f.a2 = random_matrix(n, rng, -amplitude, amplitude);
    f.w = rng.uniform(0.5, freq_cap);
    f.v = rng.uniform(0.5, freq_cap);
    f.phi = rng.uniform(0.0, 2.0 * std::numbers::pi);
    return f;
  }

  Matrix value(double s) const {
    return a0 + a1 * std::sin(w * s + phi) + a2 * std::cos(v * s);
  }
  Matrix derivative(double s) const {
    return a1 * (w * std::cos(w * s + phi)) - a2 * (v * std::sin(v * s));
  }
};

}  // namespace oracles
