// Copyright 2026 the stransport developers
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "stransport/catalog.hpp"
#include "stransport/engine.hpp"
#include "stransport/geometry.hpp"

namespace stransport {

//! Validation or parse failure, addressed to the offending scenario field.
class ScenarioError : public std::runtime_error {
 public:
  ScenarioError(std::string field, const std::string& message)
      : std::runtime_error(field + ": " + message), field_(std::move(field)) {}
  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

//! A fully resolved scenario: catalog ids expanded into metric, curve and law.
struct Scenario {
  int schema = 1;
  int dim = 0;
  std::string manifold_id;
  MetricField metric;
  Curve curve;
  std::string law_type;
  TransportLaw law;
  std::vector<TensorComponents> tensors;
  std::vector<std::pair<double, double>> transport_pairs;
  bool axiom_check = false;
  double axiom_tol = 1e-6;
  int axiom_triples = 10;
  std::uint64_t axiom_seed = 0x5eed5eedULL;
  double step = 0.0;  // resolved: explicit or curve-domain length / 2000
  int trace_points = 0;
  std::string source_name;
  std::uint64_t hash = 0;  // FNV-1a of the canonical scenario JSON
};

Scenario load_scenario(const std::string& path);
Scenario parse_scenario(const nlohmann::json& j, const std::string& source_name);

struct PairResult {
  double s = 0.0;
  double t = 0.0;
  TransportMatrix tm;
  std::vector<TensorComponents> transported;
};

struct HolonomyBlock {
  Matrix H;                             //!< H(s_max, s_min) around the loop
  double deviation = 0.0;               //!< max |H - I|
  std::optional<double> rotation_angle; //!< n = 2, Riemannian metric only
};

struct TraceRow {
  double s = 0.0;
  double t = 0.0;
  std::vector<double> entries;  // H row-major, then each tensor's components
};

struct RunReport {
  std::vector<PairResult> pairs;
  std::optional<AxiomReport> axioms;
  std::optional<HolonomyBlock> holonomy;
  std::vector<std::string> trace_header;
  std::vector<TraceRow> trace;
  std::string scenario_hash;
  double step = 0.0;
};

//! Runs every requested transport pair, the axiom check when enabled, the
//! holonomy block when the curve closes, and the trace when trace_points >= 2.
//! Deterministic for a fixed scenario and step.
RunReport run_scenario(const Scenario& sc);

nlohmann::json report_to_json(const RunReport& report);

//! Comma-separated trace with a header row; 17 significant digits, LF line
//! endings. Requires a report computed with trace resolution >= 2.
void export_trace(const RunReport& report, std::ostream& out);
void export_trace(const RunReport& report, const std::string& path);

//! Rotation angle of the orthogonal polar factor of H, measured in the
//! g-orthonormal frame (Cholesky). Empty when g is not positive definite or
//! H is orientation reversing.
std::optional<double> rotation_angle_2d(const Matrix& h, const Matrix& g_at_base);

std::uint64_t fnv1a_hash(const std::string& bytes);

}  // namespace stransport
