// Copyright 2026 the stransport developers
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <functional>
#include <vector>

#include "stransport/matrix.hpp"
#include "stransport/tensor.hpp"

namespace stransport {

//! Closed parameter interval [lo, hi].
struct Interval {
  double lo = 0.0;
  double hi = 1.0;

  double length() const { return hi - lo; }
  double midpoint() const { return 0.5 * (lo + hi); }
  bool contains(double s) const;
  //! Nudges s onto the interval when it is within roundoff of an endpoint.
  double clamp(double s) const;
};

//! The coefficient matrix function s -> Gamma(s) of a linear transport along
//! one curve. Evaluation must be reentrant: independent (s,t) solves may run
//! concurrently.
class TransportLaw {
 public:
  TransportLaw() = default;
  TransportLaw(Interval domain, int dim, std::function<Matrix(double)> coefficients);

  const Interval& domain() const { return domain_; }
  int dim() const { return dim_; }

  //! Gamma(s); throws std::domain_error outside the domain.
  Matrix coefficient(double s) const;

  //! Default integrator step: domain length / 2000.
  double default_step() const;

 private:
  Interval domain_{};
  int dim_ = 0;
  std::function<Matrix(double)> coefficients_;
};

TransportLaw zero_law(Interval domain, int dim);
TransportLaw constant_law(Interval domain, const Matrix& gamma);

enum class Interp { linear, cubic };

//! Law from samples Gamma(s_k) on a strictly increasing grid. Linear
//! interpolation by default, natural cubic spline optionally.
TransportLaw tabulated_law(const std::vector<double>& grid, const std::vector<Matrix>& samples,
                           Interp interp = Interp::linear);

//! Largest |Gamma(s+ds) - Gamma(s)| over `samples` equispaced probe pairs;
//! a sampled continuity check (adjacent evaluations should differ by O(ds)).
double law_continuity_defect(const TransportLaw& law, int samples, double ds);

//! Transforms the law under a pointwise basis change, entry-wise
//! Gamma'(s) = A^{-1} Gamma A + A^{-1} dA/ds. When a BasisChange carries no
//! derivative it is filled in by central finite differences on `change`
//! (one-sided at the domain ends) with step fd_step, defaulting to
//! 1e-6 * domain length.
TransportLaw change_law_basis(const TransportLaw& law,
                              const std::function<BasisChange(double)>& change,
                              double fd_step = 0.0, double pair_tol = 1e-8);

//! Natural cubic spline through (grid, values), used for tabulated laws,
//! curves and fields. Evaluable value, first and second derivative.
class CubicSpline {
 public:
  CubicSpline() = default;
  CubicSpline(std::vector<double> grid, std::vector<double> values);

  double value(double s) const;
  double derivative(double s) const;
  double second_derivative(double s) const;

 private:
  int cell(double s) const;
  std::vector<double> x_, y_, m_;  // m_: second derivatives at the knots
};

}  // namespace stransport
