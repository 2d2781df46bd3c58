// Copyright 2026 the stransport developers
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <functional>
#include <vector>

#include "stransport/law.hpp"
#include "stransport/matrix.hpp"

namespace stransport {

//! Rank-3 coefficient array indexed as coeffs[i](j,k), e.g. Christoffel
//! symbols Gamma^i_{jk} or torsion T^i_{jk}.
using Coeffs3 = std::vector<Matrix>;

//! Parametrized path in one chart: s -> coordinates, velocity, optionally the
//! coordinate second derivative. `coordinate_period[i] > 0` marks a periodic
//! chart coordinate (e.g. an azimuth), used only for closed-curve detection.
struct Curve {
  Interval domain;
  int dim = 0;
  std::function<Vec(double)> position;
  std::function<Vec(double)> velocity;
  std::function<Vec(double)> acceleration;  // may be empty
  std::vector<double> coordinate_period;    // empty or per-coordinate, 0 = aperiodic

  bool has_acceleration() const { return static_cast<bool>(acceleration); }
  //! Endpoint coincidence within tol, coordinates compared modulo any period.
  bool is_closed(double tol = 1e-9) const;
};

//! Metric g_ij on a chart with optional analytic inverse and partials.
struct MetricField {
  int dim = 0;
  std::function<Matrix(const Vec&)> components;                //!< g_ij
  std::function<Matrix(const Vec&)> inverse_components;        //!< optional
  std::function<std::vector<Matrix>(const Vec&)> partials;     //!< optional, [k] = d_k g
  std::vector<int> signature;                                  //!< list of +-1
  double fd_step = 1e-5;  //!< per-coordinate step for the finite-difference fallback

  Matrix g(const Vec& x) const;
  Matrix g_inv(const Vec& x) const;
  std::vector<Matrix> dg(const Vec& x) const;  //!< [k](i,j) = d_k g_ij
};

//! Linear connection: Christoffel coefficients plus (default zero) torsion.
struct ConnectionField {
  int dim = 0;
  std::function<Coeffs3(const Vec&)> christoffels;  //!< [i](j,k) = Gamma^i_{jk}
  std::function<Coeffs3(const Vec&)> torsion;       //!< optional, [i](j,k) = T^i_{jk}

  Coeffs3 torsion_at(const Vec& x) const;
};

//! Levi-Civita formula Gamma^i_{jk} = g^{il}(d_j g_lk + d_k g_lj - d_l g_jk)/2.
Coeffs3 christoffels_from_metric(const MetricField& m, const Vec& point);

//! The torsion-free metric connection as a field.
ConnectionField levi_civita(const MetricField& m);

//! Covariant acceleration a^i = xdd^i + Gamma^i_{jk} xd^j xd^k at s; needs the
//! curve's coordinate acceleration.
Vec covariant_acceleration(const Curve& c, const ConnectionField& conn, double s);

//! Law of parallel transport: coefficient matrix Gamma^i_j(s) =
//! Gamma^i_{jk}(gamma(s)) gammadot^k(s).
TransportLaw parallel_law(const Curve& c, const ConnectionField& conn);

//! The (1,1) tensor B along the curve by which a transport law differs from
//! parallel transport.
struct DeformationField {
  std::function<Matrix(double)> B;
};

//! Gamma_total(s) = Gamma_parallel(s) + B(s).
TransportLaw law_with_deformation(const Curve& c, const ConnectionField& conn,
                                  const DeformationField& d);

//! A vector field known along the curve together with its coordinate
//! partials, enough to form covariant derivatives on the curve.
struct VelocityFieldData {
  std::function<Vec(double)> value;       //!< X^i at gamma(s)
  std::function<Matrix(double)> partials; //!< (i,j) = d_j X^i at gamma(s)
};

//! Covariant derivative matrix X^i_{;j} = d_j X^i + Gamma^i_{jk} X^k on the curve.
Matrix covariant_derivative_matrix(const ConnectionField& conn, const Curve& c,
                                   const VelocityFieldData& x, double s);

//! Sigma(X)^i_j = X^i_{;j} + T^i_{kj} X^k, the (1,1) tensor with
//! nabla_X = L_X + Sigma(X).
Matrix sigma_of_x(const ConnectionField& conn, const Curve& c, const VelocityFieldData& x,
                  double s);

//! Fermi-Walker generator B^i_j = (u^i a_j - a^i u_j) / g(u,u) with u the
//! curve velocity and a its covariant acceleration. Requires non-null
//! velocity and curve acceleration data.
DeformationField fermi_walker_deformation(const Curve& c, const MetricField& m);

//! Fermi generator for unit timelike worldlines (g(u,u) = -1 within 1e-8):
//! B^i_j = -(u^i a_j - a^i u_j).
DeformationField fermi_deformation(const Curve& c, const MetricField& m);

//! Truesdell generator B = theta*I - Sigma(X), theta = X^i_{;i}.
DeformationField truesdell_deformation(const Curve& c, const MetricField& m,
                                       const VelocityFieldData& x);

//! Jaumann generator B = -omega, omega^i_j the vorticity of X with the first
//! index raised by g.
DeformationField jaumann_deformation(const Curve& c, const MetricField& m,
                                     const VelocityFieldData& x);

// Convenience law builders for the named transports.
TransportLaw parallel_law(const Curve& c, const MetricField& m);
TransportLaw fermi_walker_law(const Curve& c, const MetricField& m);
TransportLaw fermi_law(const Curve& c, const MetricField& m);
TransportLaw truesdell_law(const Curve& c, const MetricField& m, const VelocityFieldData& x);
TransportLaw jaumann_law(const Curve& c, const MetricField& m, const VelocityFieldData& x);

}  // namespace stransport
