// Copyright 2026 the stransport developers
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <functional>
#include <string>
#include <vector>

#include "stransport/law.hpp"
#include "stransport/matrix.hpp"
#include "stransport/tensor.hpp"

namespace stransport {

//! Fundamental matrix Y(s, s0; Z): the unique solution of dY/ds = Z(s) Y with
//! Y(s0) = I, by fixed-step classical RK4 (the last step is shortened to land
//! exactly on s). Throws std::runtime_error when non-finite entries appear,
//! which signals a singular or blowing-up coefficient function.
Matrix solve_fundamental(const std::function<Matrix(double)>& z, double s0, double s, double step);

//! Two-point transport operator: H carries components at gamma(s) to
//! components at gamma(t); H_inv is the reverse operator, obtained by
//! integrating backwards rather than by matrix inversion.
struct TransportMatrix {
  double s = 0.0;
  double t = 0.0;
  Matrix H;
  Matrix H_inv;

  double inverse_pair_defect() const;  //!< max |H*H_inv - I|
};

//! H(t,s) for the law, integrating dY/dtau = -Gamma(tau) Y from s to t.
//! step <= 0 selects the law's default step.
TransportMatrix transport_matrix(const TransportLaw& law, double s, double t, double step = 0.0);

//! Componentwise action of the transport on a type-(p,q) tensor: one factor
//! of H per contravariant slot, one transposed factor of H_inv per covariant
//! slot. Scalars pass through unchanged.
TensorComponents transport_tensor(const TransportMatrix& tm, const TensorComponents& t);

//! A C^1 tensor field of fixed type along the curve parameter. `derivative`
//! is optional; when absent, componentwise derivatives are taken by central
//! finite differences (one-sided at the domain ends) with step fd_step,
//! defaulting to 1e-6 * domain length.
struct TensorFieldAlongPath {
  Interval domain;
  int p = 0;
  int q = 0;
  int dim = 1;
  std::function<TensorComponents(double)> eval;
  std::function<TensorComponents(double)> derivative;  // may be empty
  double fd_step = 0.0;
};

//! Componentwise derivative of the field at s (analytic if provided, else
//! finite differences).
TensorComponents field_derivative(const TensorFieldAlongPath& field, double s);

//! The derivation the law induces along the path, evaluated at s:
//! d/ds of the components, plus one +Gamma term per contravariant slot and
//! one -Gamma term (transposed placement) per covariant slot. Reduces to the
//! plain derivative on scalars.
TensorComponents derivation_at(const TransportLaw& law, const TensorFieldAlongPath& field,
                               double s);

//! Applies the derivation at t to the transported field tau -> S_{s->tau} T0.
//! Mathematically identically zero; the returned components expose the
//! numerical residual as a diagnostic.
TensorComponents derivation_of_transported(const TransportLaw& law, const TensorComponents& t0,
                                           double s, double t, double step = 0.0);

struct AxiomCheck {
  std::string name;
  double residual = 0.0;
};

struct AxiomReport {
  std::vector<AxiomCheck> checks;
  double tolerance = 0.0;
  bool pass = false;

  double max_residual() const;
  const AxiomCheck* find(const std::string& name) const;
};

//! Probe sampling for verify_axioms: `triples` (r,s,t) parameter triples and
//! matching random tensors, drawn deterministically from `seed`.
struct ProbeSpec {
  int triples = 10;
  std::uint64_t seed = 0x5eed5eedULL;
  double step = 0.0;  // 0 -> law default
};

//! Numerical check of the transport axioms: linearity, tensor-product
//! multiplicativity, contraction commutation, composition, identity, scalar
//! invariance, the inverse pair, and the transport-derivation identity.
//! Failures are reported (pass flag / residuals), never thrown.
AxiomReport verify_axioms(const TransportLaw& law, const ProbeSpec& probes, double tol);

}  // namespace stransport
