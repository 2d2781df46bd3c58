// Copyright 2026 the stransport developers
// SPDX-License-Identifier: Apache-2.0

#include "stransport/law.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <stdexcept>

namespace stransport {

bool Interval::contains(double s) const {
  const double slack = 1e-12 * std::max(1.0, std::abs(lo) + std::abs(hi));
  return s >= lo - slack && s <= hi + slack;
}

double Interval::clamp(double s) const { return std::min(std::max(s, lo), hi); }

TransportLaw::TransportLaw(Interval domain, int dim, std::function<Matrix(double)> coefficients)
    : domain_(domain), dim_(dim), coefficients_(std::move(coefficients)) {
  if (dim < 1) throw std::invalid_argument("TransportLaw: dim must be positive");
  if (domain.hi < domain.lo) throw std::invalid_argument("TransportLaw: empty domain");
}

Matrix TransportLaw::coefficient(double s) const {
  if (!domain_.contains(s)) throw std::domain_error("TransportLaw: parameter outside domain");
  Matrix g = coefficients_(domain_.clamp(s));
  if (g.rows() != dim_ || g.cols() != dim_)
    throw std::runtime_error("TransportLaw: coefficient callback returned wrong shape");
  return g;
}

double TransportLaw::default_step() const {
  const double len = domain_.length();
  return len > 0.0 ? len / 2000.0 : 1.0 / 2000.0;
}

TransportLaw zero_law(Interval domain, int dim) {
  return TransportLaw(domain, dim, [dim](double) { return Matrix(dim, dim); });
}

TransportLaw constant_law(Interval domain, const Matrix& gamma) {
  if (gamma.rows() != gamma.cols()) throw std::invalid_argument("constant_law: gamma not square");
  return TransportLaw(domain, gamma.rows(), [gamma](double) { return gamma; });
}

namespace {

void check_grid(const std::vector<double>& grid) {
  if (grid.size() < 2) throw std::invalid_argument("tabulated grid needs at least 2 samples");
  for (std::size_t k = 1; k < grid.size(); ++k)
    if (!(grid[k] > grid[k - 1]))
      throw std::invalid_argument("tabulated grid is not strictly increasing");
}

}  // namespace

TransportLaw tabulated_law(const std::vector<double>& grid, const std::vector<Matrix>& samples,
                           Interp interp) {
  check_grid(grid);
  if (samples.size() != grid.size())
    throw std::invalid_argument("tabulated_law: grid/sample count mismatch");
  const int n = samples.front().rows();
  for (const Matrix& m : samples)
    if (m.rows() != n || m.cols() != n)
      throw std::invalid_argument("tabulated_law: inconsistent sample shapes");
  const Interval dom{grid.front(), grid.back()};

  if (interp == Interp::linear) {
    auto g = std::make_shared<std::vector<double>>(grid);
    auto smp = std::make_shared<std::vector<Matrix>>(samples);
    auto eval = [g, smp, n](double s) {
      const auto& x = *g;
      auto it = std::upper_bound(x.begin(), x.end(), s);
      int c = static_cast<int>(it - x.begin()) - 1;
      c = std::min(std::max(c, 0), static_cast<int>(x.size()) - 2);
      const double w = (s - x[c]) / (x[c + 1] - x[c]);
      Matrix r(n, n);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          r(i, j) = (1.0 - w) * (*smp)[c](i, j) + w * (*smp)[c + 1](i, j);
      return r;
    };
    return TransportLaw(dom, n, eval);
  }

  // cubic: one natural spline per matrix entry
  auto splines = std::make_shared<std::vector<CubicSpline>>();
  splines->reserve(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      std::vector<double> col(grid.size());
      for (std::size_t k = 0; k < grid.size(); ++k) col[k] = samples[k](i, j);
      splines->emplace_back(grid, std::move(col));
    }
  auto eval = [splines, n](double s) {
    Matrix r(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) r(i, j) = (*splines)[static_cast<std::size_t>(i) * n + j].value(s);
    return r;
  };
  return TransportLaw(dom, n, eval);
}

double law_continuity_defect(const TransportLaw& law, int samples, double ds) {
  const Interval dom = law.domain();
  double worst = 0.0;
  for (int k = 0; k < samples; ++k) {
    const double s = dom.lo + (dom.length() - ds) * k / std::max(1, samples - 1);
    worst = std::max(worst, max_abs_diff(law.coefficient(s), law.coefficient(s + ds)));
  }
  return worst;
}

TransportLaw change_law_basis(const TransportLaw& law,
                              const std::function<BasisChange(double)>& change, double fd_step,
                              double pair_tol) {
  const Interval dom = law.domain();
  if (dom.length() <= 0.0)
    throw std::invalid_argument("change_law_basis: degenerate law domain");
  const double h = fd_step > 0.0 ? fd_step : 1e-6 * dom.length();
  const int n = law.dim();

  auto coeff = [law, change, dom, h, n, pair_tol](double s) {
    BasisChange ch = change(s);
    if (ch.forward.rows() != n || ch.forward.cols() != n)
      throw std::invalid_argument("change_law_basis: basis change dimension mismatch");
    if (ch.pairing_defect() > pair_tol)
      throw std::invalid_argument("change_law_basis: singular or inconsistent basis change");
    Matrix dA;
    if (ch.derivative) {
      dA = *ch.derivative;
    } else if (s - h >= dom.lo && s + h <= dom.hi) {
      dA = (change(s + h).forward - change(s - h).forward) * (1.0 / (2.0 * h));
    } else if (s + 2 * h <= dom.hi) {  // one-sided, second order
      dA = (change(s).forward * (-3.0) + change(s + h).forward * 4.0 - change(s + 2 * h).forward) *
           (1.0 / (2.0 * h));
    } else if (s - 2 * h >= dom.lo) {
      dA = (change(s).forward * 3.0 - change(s - h).forward * 4.0 + change(s - 2 * h).forward) *
           (1.0 / (2.0 * h));
    } else {
      throw std::invalid_argument("change_law_basis: domain too short for finite differences");
    }
    return ch.inverse * law.coefficient(s) * ch.forward + ch.inverse * dA;
  };
  return TransportLaw(dom, n, coeff);
}

CubicSpline::CubicSpline(std::vector<double> grid, std::vector<double> values)
    : x_(std::move(grid)), y_(std::move(values)) {
  check_grid(x_);
  if (x_.size() != y_.size()) throw std::invalid_argument("CubicSpline: size mismatch");
  const int n = static_cast<int>(x_.size());
  m_.assign(n, 0.0);
  if (n == 2) return;  // natural spline through 2 points is the chord
  // Thomas algorithm for the natural-spline tridiagonal system
  std::vector<double> diag(n, 0.0), rhs(n, 0.0), upper(n, 0.0);
  diag[0] = 1.0;
  diag[n - 1] = 1.0;
  for (int i = 1; i < n - 1; ++i) {
    const double hl = x_[i] - x_[i - 1];
    const double hr = x_[i + 1] - x_[i];
    diag[i] = 2.0 * (hl + hr);
    upper[i] = hr;
    rhs[i] = 6.0 * ((y_[i + 1] - y_[i]) / hr - (y_[i] - y_[i - 1]) / hl);
  }
  for (int i = 2; i < n - 1; ++i) {
    const double w = (x_[i] - x_[i - 1]) / diag[i - 1];
    diag[i] -= w * upper[i - 1];
    rhs[i] -= w * rhs[i - 1];
  }
  for (int i = n - 2; i >= 1; --i) m_[i] = (rhs[i] - upper[i] * m_[i + 1]) / diag[i];
}

int CubicSpline::cell(double s) const {
  auto it = std::upper_bound(x_.begin(), x_.end(), s);
  int c = static_cast<int>(it - x_.begin()) - 1;
  return std::min(std::max(c, 0), static_cast<int>(x_.size()) - 2);
}

double CubicSpline::value(double s) const {
  const int c = cell(s);
  const double h = x_[c + 1] - x_[c];
  const double a = (x_[c + 1] - s) / h;
  const double b = (s - x_[c]) / h;
  return a * y_[c] + b * y_[c + 1] +
         ((a * a * a - a) * m_[c] + (b * b * b - b) * m_[c + 1]) * h * h / 6.0;
}

double CubicSpline::derivative(double s) const {
  const int c = cell(s);
  const double h = x_[c + 1] - x_[c];
  const double a = (x_[c + 1] - s) / h;
  const double b = (s - x_[c]) / h;
  return (y_[c + 1] - y_[c]) / h +
         ((1.0 - 3.0 * a * a) * m_[c] + (3.0 * b * b - 1.0) * m_[c + 1]) * h / 6.0;
}

double CubicSpline::second_derivative(double s) const {
  const int c = cell(s);
  const double h = x_[c + 1] - x_[c];
  const double a = (x_[c + 1] - s) / h;
  const double b = (s - x_[c]) / h;
  return a * m_[c] + b * m_[c + 1];
}

}  // namespace stransport
