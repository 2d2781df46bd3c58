// Copyright 2026 the stransport developers
// SPDX-License-Identifier: Apache-2.0

#include "stransport/engine.hpp"

#include <cmath>
#include <stdexcept>

#include "stransport/rng.hpp"

namespace stransport {

namespace {

// One classical RK4 step for dY/dx = Z(x) Y.
Matrix rk4_step(const std::function<Matrix(double)>& z, double x, double h, const Matrix& y) {
  const Matrix k1 = z(x) * y;
  const Matrix k2 = z(x + 0.5 * h) * (y + k1 * (0.5 * h));
  const Matrix k3 = z(x + 0.5 * h) * (y + k2 * (0.5 * h));
  const Matrix k4 = z(x + h) * (y + k3 * h);
  return y + (k1 + k2 * 2.0 + k3 * 2.0 + k4) * (h / 6.0);
}

}  // namespace

Matrix solve_fundamental(const std::function<Matrix(double)>& z, double s0, double s,
                         double step) {
  if (!(step > 0.0)) throw std::invalid_argument("solve_fundamental: step must be positive");
  const Matrix probe = z(s0);
  if (probe.rows() != probe.cols()) throw std::invalid_argument("solve_fundamental: Z not square");
  Matrix y = Matrix::identity(probe.rows());
  if (s == s0) return y;

  const double dir = s > s0 ? 1.0 : -1.0;
  const double len = std::abs(s - s0);
  long k = 0;
  double x = s0;
  // full steps on the exact grid s0 + k*dir*step, then one shortened step
  while (std::abs(s - x) > step * (1.0 + 1e-12)) {
    y = rk4_step(z, x, dir * step, y);
    ++k;
    x = s0 + dir * step * static_cast<double>(k);
    if (!y.all_finite())
      throw std::runtime_error("solve_fundamental: non-finite entries (singular or blow-up law)");
    if (static_cast<double>(k) * step > len + step) break;  // unreachable guard
  }
  y = rk4_step(z, x, s - x, y);
  if (!y.all_finite())
    throw std::runtime_error("solve_fundamental: non-finite entries (singular or blow-up law)");
  return y;
}

double TransportMatrix::inverse_pair_defect() const {
  return max_abs_diff(H * H_inv, Matrix::identity(H.rows()));
}

TransportMatrix transport_matrix(const TransportLaw& law, double s, double t, double step) {
  const Interval dom = law.domain();
  if (!dom.contains(s) || !dom.contains(t))
    throw std::domain_error("transport_matrix: s or t outside the law domain");
  TransportMatrix tm;
  tm.s = s;
  tm.t = t;
  const int n = law.dim();
  if (dom.length() == 0.0 || s == t) {
    tm.H = Matrix::identity(n);
    tm.H_inv = Matrix::identity(n);
    return tm;
  }
  const double h = step > 0.0 ? step : law.default_step();
  auto minus_gamma = [&law](double x) { return law.coefficient(x) * -1.0; };
  tm.H = solve_fundamental(minus_gamma, s, t, h);
  tm.H_inv = solve_fundamental(minus_gamma, t, s, h);
  return tm;
}

TensorComponents transport_tensor(const TransportMatrix& tm, const TensorComponents& t) {
  if (t.rank() == 0) return t;  // transports fix the reals
  if (tm.H.rows() != t.dim) throw std::invalid_argument("transport_tensor: dimension mismatch");
  TensorComponents r = t;
  for (int a = 0; a < t.p; ++a) r = apply_matrix_to_slot(r, tm.H, a);
  for (int b = 0; b < t.q; ++b) r = apply_matrix_transposed_to_slot(r, tm.H_inv, t.p + b);
  return r;
}

TensorComponents field_derivative(const TensorFieldAlongPath& field, double s) {
  if (field.derivative) return field.derivative(s);
  const Interval dom = field.domain;
  if (!(dom.length() > 0.0))
    throw std::domain_error("field_derivative: degenerate domain, no derivative available");
  const double h = field.fd_step > 0.0 ? field.fd_step : 1e-6 * dom.length();
  auto f = [&field](double x) { return field.eval(x); };
  if (s - h >= dom.lo && s + h <= dom.hi)
    return (1.0 / (2.0 * h)) * (f(s + h) - f(s - h));
  if (s + 2 * h <= dom.hi)  // one-sided, second order
    return (1.0 / (2.0 * h)) * ((-3.0) * f(s) + 4.0 * f(s + h) - f(s + 2 * h));
  if (s - 2 * h >= dom.lo)
    return (1.0 / (2.0 * h)) * (3.0 * f(s) - 4.0 * f(s - h) + f(s - 2 * h));
  throw std::domain_error("field_derivative: domain too short for finite differences");
}

TensorComponents derivation_at(const TransportLaw& law, const TensorFieldAlongPath& field,
                               double s) {
  if (!law.domain().contains(s) || !field.domain.contains(s))
    throw std::domain_error("derivation_at: parameter outside domain");
  if (field.dim != law.dim()) throw std::invalid_argument("derivation_at: dimension mismatch");
  TensorComponents result = field_derivative(field, s);
  if (result.p != field.p || result.q != field.q ||
      (result.rank() > 0 && result.dim != field.dim))
    throw std::runtime_error("derivation_at: field evaluator type mismatch");
  if (field.p + field.q == 0) return result;  // scalars: plain derivative
  const Matrix gamma = law.coefficient(s);
  const TensorComponents value = field.eval(s);
  for (int a = 0; a < field.p; ++a) result = result + apply_matrix_to_slot(value, gamma, a);
  for (int b = 0; b < field.q; ++b)
    result = result - apply_matrix_transposed_to_slot(value, gamma, field.p + b);
  return result;
}

TensorComponents derivation_of_transported(const TransportLaw& law, const TensorComponents& t0,
                                           double s, double t, double step) {
  const Interval dom = law.domain();
  if (!dom.contains(s) || !dom.contains(t))
    throw std::domain_error("derivation_of_transported: parameter outside domain");
  TensorFieldAlongPath field;
  field.domain = dom;
  field.p = t0.p;
  field.q = t0.q;
  field.dim = t0.dim;
  field.eval = [&law, &t0, s, step](double tau) {
    return transport_tensor(transport_matrix(law, s, tau, step), t0);
  };
  return derivation_at(law, field, t);
}

double AxiomReport::max_residual() const {
  double m = 0.0;
  for (const auto& c : checks) m = std::max(m, c.residual);
  return m;
}

const AxiomCheck* AxiomReport::find(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

namespace {

TensorComponents random_tensor(int p, int q, int dim, SplitMix64& rng) {
  TensorComponents t(p, q, dim);
  for (double& v : t.values) v = rng.uniform(-1.0, 1.0);
  return t;
}

}  // namespace

AxiomReport verify_axioms(const TransportLaw& law, const ProbeSpec& probes, double tol) {
  const Interval dom = law.domain();
  const int n = law.dim();
  const double step = probes.step > 0.0 ? probes.step : law.default_step();
  SplitMix64 rng(probes.seed);

  double r_lin = 0, r_prod = 0, r_contr = 0, r_comp = 0, r_id = 0, r_scal = 0, r_inv = 0,
         r_deriv = 0;

  for (int k = 0; k < probes.triples; ++k) {
    const double r = rng.uniform(dom.lo, dom.hi);
    const double s = rng.uniform(dom.lo, dom.hi);
    const double t = rng.uniform(dom.lo, dom.hi);

    const TransportMatrix h_st = transport_matrix(law, s, t, step);
    const TransportMatrix h_tr = transport_matrix(law, t, r, step);
    const TransportMatrix h_sr = transport_matrix(law, s, r, step);
    const TransportMatrix h_ss = transport_matrix(law, s, s, step);

    const TensorComponents a1 = random_tensor(1, 1, n, rng);
    const TensorComponents a2 = random_tensor(1, 1, n, rng);
    const TensorComponents v = random_tensor(1, 0, n, rng);
    const TensorComponents w = random_tensor(0, 1, n, rng);
    const double lam = rng.uniform(-2.0, 2.0);
    const double mu = rng.uniform(-2.0, 2.0);

    // (2.3) linearity
    r_lin = std::max(r_lin, max_abs_diff(transport_tensor(h_st, lam * a1 + mu * a2),
                                         lam * transport_tensor(h_st, a1) +
                                             mu * transport_tensor(h_st, a2)));
    // (2.4) product rule, mixed ranks
    r_prod = std::max(r_prod, max_abs_diff(transport_tensor(h_st, tensor_product(v, w)),
                                           tensor_product(transport_tensor(h_st, v),
                                                          transport_tensor(h_st, w))));
    r_prod = std::max(r_prod, max_abs_diff(transport_tensor(h_st, tensor_product(a1, v)),
                                           tensor_product(transport_tensor(h_st, a1),
                                                          transport_tensor(h_st, v))));
    // (2.5) contraction commutes
    const TensorComponents t21 = random_tensor(2, 1, n, rng);
    r_contr = std::max(r_contr, max_abs_diff(contract(transport_tensor(h_st, a1), 0, 0),
                                             transport_tensor(h_st, contract(a1, 0, 0))));
    r_contr = std::max(r_contr, max_abs_diff(contract(transport_tensor(h_st, t21), 1, 0),
                                             transport_tensor(h_st, contract(t21, 1, 0))));
    // (2.6) composition as a matrix identity
    r_comp = std::max(r_comp, max_abs_diff(h_tr.H * h_st.H, h_sr.H));
    // (2.7) identity
    r_id = std::max(r_id, max_abs_diff(h_ss.H, Matrix::identity(n)));
    // (2.13) scalars are fixed
    const double lam0 = rng.uniform(-5.0, 5.0);
    r_scal = std::max(
        r_scal, std::abs(transport_tensor(h_st, TensorComponents::scalar(lam0)).values[0] - lam0));
    // (2.15) inverse pair
    r_inv = std::max(r_inv, h_st.inverse_pair_defect());
    // (3.3) derivation annihilates transported fields
    TensorComponents resid = derivation_of_transported(law, v, s, t, step);
    r_deriv = std::max(r_deriv, max_abs(resid.values));
  }

  AxiomReport report;
  report.tolerance = tol;
  report.checks = {{"linearity", r_lin},
                   {"product-rule", r_prod},
                   {"contraction-commutation", r_contr},
                   {"composition", r_comp},
                   {"identity", r_id},
                   {"scalar-invariance", r_scal},
                   {"inverse-pair", r_inv},
                   {"derivation-identity", r_deriv}};
  report.pass = report.max_residual() <= tol;
  return report;
}

}  // namespace stransport
