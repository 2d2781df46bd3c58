// Copyright 2026 the stransport developers
// SPDX-License-Identifier: Apache-2.0

#include "stransport/geometry.hpp"

#include <cmath>
#include <stdexcept>

namespace stransport {

bool Curve::is_closed(double tol) const {
  if (domain.length() <= 0.0) return false;
  const Vec a = position(domain.lo);
  const Vec b = position(domain.hi);
  for (int i = 0; i < dim; ++i) {
    double d = b[i] - a[i];
    const double period =
        i < static_cast<int>(coordinate_period.size()) ? coordinate_period[i] : 0.0;
    if (period > 0.0) {
      d = std::remainder(d, period);
    }
    if (std::abs(d) > tol) return false;
  }
  return true;
}

Matrix MetricField::g(const Vec& x) const {
  Matrix m = components(x);
  if (m.rows() != dim || m.cols() != dim)
    throw std::runtime_error("MetricField: components callback returned wrong shape");
  return m;
}

Matrix MetricField::g_inv(const Vec& x) const {
  if (inverse_components) return inverse_components(x);
  return g(x).inverse();
}

std::vector<Matrix> MetricField::dg(const Vec& x) const {
  if (partials) return partials(x);
  std::vector<Matrix> d(static_cast<std::size_t>(dim));
  Vec xp = x, xm = x;
  for (int k = 0; k < dim; ++k) {
    xp[k] = x[k] + fd_step;
    xm[k] = x[k] - fd_step;
    d[k] = (g(xp) - g(xm)) * (1.0 / (2.0 * fd_step));
    xp[k] = x[k];
    xm[k] = x[k];
  }
  return d;
}

Coeffs3 ConnectionField::torsion_at(const Vec& x) const {
  if (torsion) return torsion(x);
  return Coeffs3(static_cast<std::size_t>(dim), Matrix(dim, dim));
}

Coeffs3 christoffels_from_metric(const MetricField& m, const Vec& point) {
  const int n = m.dim;
  const Matrix ginv = m.g_inv(point);  // throws on a singular metric
  const std::vector<Matrix> d = m.dg(point);
  Coeffs3 gamma(static_cast<std::size_t>(n), Matrix(n, n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        double s = 0.0;
        for (int l = 0; l < n; ++l)
          s += ginv(i, l) * (d[j](l, k) + d[k](l, j) - d[l](j, k));
        gamma[i](j, k) = 0.5 * s;
      }
  return gamma;
}

ConnectionField levi_civita(const MetricField& m) {
  ConnectionField conn;
  conn.dim = m.dim;
  conn.christoffels = [m](const Vec& x) { return christoffels_from_metric(m, x); };
  return conn;
}

Vec covariant_acceleration(const Curve& c, const ConnectionField& conn, double s) {
  if (!c.has_acceleration())
    throw std::invalid_argument("covariant_acceleration: curve has no acceleration data");
  const Vec x = c.position(s);
  const Vec u = c.velocity(s);
  Vec a = c.acceleration(s);
  const Coeffs3 gamma = conn.christoffels(x);
  for (int i = 0; i < c.dim; ++i)
    for (int j = 0; j < c.dim; ++j)
      for (int k = 0; k < c.dim; ++k) a[i] += gamma[i](j, k) * u[j] * u[k];
  return a;
}

TransportLaw parallel_law(const Curve& c, const ConnectionField& conn) {
  if (c.dim != conn.dim) throw std::invalid_argument("parallel_law: dimension mismatch");
  const int n = c.dim;
  auto coeff = [c, conn, n](double s) {
    const Vec x = c.position(s);
    const Vec v = c.velocity(s);
    const Coeffs3 gamma = conn.christoffels(x);
    Matrix g(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        double acc = 0.0;
        for (int k = 0; k < n; ++k) acc += gamma[i](j, k) * v[k];
        g(i, j) = acc;
      }
    return g;
  };
  return TransportLaw(c.domain, n, coeff);
}

TransportLaw law_with_deformation(const Curve& c, const ConnectionField& conn,
                                  const DeformationField& d) {
  const TransportLaw base = parallel_law(c, conn);
  const int n = c.dim;
  auto bfun = d.B;
  auto coeff = [base, bfun, n](double s) {
    Matrix b = bfun(s);
    if (b.rows() != n || b.cols() != n)
      throw std::invalid_argument("law_with_deformation: B has wrong shape");
    return base.coefficient(s) + b;
  };
  return TransportLaw(c.domain, n, coeff);
}

Matrix covariant_derivative_matrix(const ConnectionField& conn, const Curve& c,
                                   const VelocityFieldData& x, double s) {
  if (!x.value || !x.partials)
    throw std::invalid_argument("covariant_derivative_matrix: missing field derivative data");
  const int n = c.dim;
  const Vec pos = c.position(s);
  const Vec xv = x.value(s);
  Matrix covd = x.partials(s);
  if (covd.rows() != n || covd.cols() != n)
    throw std::invalid_argument("covariant_derivative_matrix: partials have wrong shape");
  const Coeffs3 gamma = conn.christoffels(pos);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) covd(i, j) += gamma[i](j, k) * xv[k];
  return covd;
}

Matrix sigma_of_x(const ConnectionField& conn, const Curve& c, const VelocityFieldData& x,
                  double s) {
  const int n = c.dim;
  Matrix sigma = covariant_derivative_matrix(conn, c, x, s);
  const Coeffs3 tors = conn.torsion_at(c.position(s));
  const Vec xv = x.value(s);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) sigma(i, j) += tors[i](k, j) * xv[k];
  return sigma;
}

namespace {

struct FrameData {
  Vec u;       // velocity
  Vec a;       // covariant acceleration
  Vec u_low;   // g u
  Vec a_low;   // g a
  double uu;   // g(u,u)
};

FrameData frame_data(const Curve& c, const MetricField& m, const ConnectionField& conn,
                     double s) {
  FrameData f;
  f.u = c.velocity(s);
  f.a = covariant_acceleration(c, conn, s);
  const Matrix g = m.g(c.position(s));
  f.u_low = g.apply(f.u);
  f.a_low = g.apply(f.a);
  f.uu = dot(f.u_low, f.u);
  return f;
}

}  // namespace

DeformationField fermi_walker_deformation(const Curve& c, const MetricField& m) {
  if (!c.has_acceleration())
    throw std::invalid_argument("fermi_walker_deformation: curve has no acceleration data");
  const ConnectionField conn = levi_civita(m);
  auto b = [c, m, conn](double s) {
    const FrameData f = frame_data(c, m, conn, s);
    if (std::abs(f.uu) < 1e-12)
      throw std::domain_error("fermi_walker_deformation: null velocity");
    const int n = c.dim;
    Matrix out(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        out(i, j) = (f.u[i] * f.a_low[j] - f.a[i] * f.u_low[j]) / f.uu;
    return out;
  };
  return DeformationField{b};
}

DeformationField fermi_deformation(const Curve& c, const MetricField& m) {
  if (!c.has_acceleration())
    throw std::invalid_argument("fermi_deformation: curve has no acceleration data");
  const ConnectionField conn = levi_civita(m);
  auto b = [c, m, conn](double s) {
    const FrameData f = frame_data(c, m, conn, s);
    if (std::abs(f.uu + 1.0) > 1e-8)
      throw std::domain_error("fermi_deformation: velocity is not unit timelike (g(u,u) = -1)");
    const int n = c.dim;
    Matrix out(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        out(i, j) = -(f.u[i] * f.a_low[j] - f.a[i] * f.u_low[j]);
    return out;
  };
  return DeformationField{b};
}

DeformationField truesdell_deformation(const Curve& c, const MetricField& m,
                                       const VelocityFieldData& x) {
  const ConnectionField conn = levi_civita(m);
  auto b = [c, conn, x](double s) {
    const Matrix sigma = sigma_of_x(conn, c, x, s);
    const Matrix covd = covariant_derivative_matrix(conn, c, x, s);
    double theta = 0.0;
    for (int i = 0; i < c.dim; ++i) theta += covd(i, i);
    return Matrix::identity(c.dim) * theta - sigma;
  };
  return DeformationField{b};
}

DeformationField jaumann_deformation(const Curve& c, const MetricField& m,
                                     const VelocityFieldData& x) {
  const ConnectionField conn = levi_civita(m);
  auto b = [c, m, conn, x](double s) {
    const int n = c.dim;
    const Matrix covd = covariant_derivative_matrix(conn, c, x, s);
    const Vec pos = c.position(s);
    const Matrix g = m.g(pos);
    const Matrix ginv = m.g_inv(pos);
    const Matrix low = g * covd;  // X_{i;j}
    Matrix omega_low(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) omega_low(i, j) = 0.5 * (low(i, j) - low(j, i));
    return ginv * omega_low * -1.0;  // B = -omega^i_j
  };
  return DeformationField{b};
}

TransportLaw parallel_law(const Curve& c, const MetricField& m) {
  return parallel_law(c, levi_civita(m));
}

TransportLaw fermi_walker_law(const Curve& c, const MetricField& m) {
  return law_with_deformation(c, levi_civita(m), fermi_walker_deformation(c, m));
}

TransportLaw fermi_law(const Curve& c, const MetricField& m) {
  return law_with_deformation(c, levi_civita(m), fermi_deformation(c, m));
}

TransportLaw truesdell_law(const Curve& c, const MetricField& m, const VelocityFieldData& x) {
  return law_with_deformation(c, levi_civita(m), truesdell_deformation(c, m, x));
}

TransportLaw jaumann_law(const Curve& c, const MetricField& m, const VelocityFieldData& x) {
  return law_with_deformation(c, levi_civita(m), jaumann_deformation(c, m, x));
}

}  // namespace stransport
