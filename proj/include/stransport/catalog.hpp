// Copyright 2026 the stransport developers
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "stransport/geometry.hpp"

namespace stransport {

//! Parameters accepted by the curve catalog. Unknown keys are rejected by the
//! scenario layer before reaching here.
struct CurveParams {
  std::map<std::string, double> scalars;
  std::map<std::string, Vec> vectors;
  std::optional<Interval> domain;
};

//! Built-in charts: euclidean-<n>, minkowski-<n>, sphere-2, polar-plane.
//! Throws std::invalid_argument for unknown ids.
MetricField make_manifold(const std::string& id);

//! Built-in curves: line, latitude-circle(theta0), great-circle(phi0),
//! accelerated-worldline(alpha), circular-worldline(R, omega).
//! `dim` is the ambient chart dimension (used by "line"; the others fix it).
Curve make_curve(const std::string& id, const CurveParams& params, int dim);

bool is_manifold_id(const std::string& id);
bool is_curve_id(const std::string& id);

//! Chart dimension implied by a manifold id (euclidean-3 -> 3, sphere-2 -> 2).
int manifold_dim(const std::string& id);

std::vector<std::string> manifold_catalog();  //!< display names for the CLI
std::vector<std::string> curve_catalog();
std::vector<std::string> law_catalog();

}  // namespace stransport
