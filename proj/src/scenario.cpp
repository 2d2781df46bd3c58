// Copyright 2026 the stransport developers
// SPDX-License-Identifier: Apache-2.0

#include "stransport/scenario.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <memory>
#include <set>
#include <sstream>

namespace stransport {

using nlohmann::json;

namespace {

std::string idx(const std::string& base, std::size_t i) {
  return base + "[" + std::to_string(i) + "]";
}

void expect_object(const json& j, const std::string& path) {
  if (!j.is_object()) throw ScenarioError(path, "expected an object");
}

const json& require_key(const json& j, const char* key, const std::string& path) {
  if (!j.contains(key)) throw ScenarioError(path.empty() ? key : path + "." + key,
                                            "missing required field");
  return j.at(key);
}

std::string sub(const std::string& path, const std::string& key) {
  return path.empty() ? key : path + "." + key;
}

void reject_unknown(const json& j, const std::set<std::string>& allowed,
                    const std::string& path) {
  for (auto it = j.begin(); it != j.end(); ++it)
    if (!allowed.count(it.key()))
      throw ScenarioError(sub(path, it.key()), "unknown field");
}

double as_number(const json& j, const std::string& path) {
  if (!j.is_number()) throw ScenarioError(path, "expected a number");
  return j.get<double>();
}

int as_int(const json& j, const std::string& path) {
  if (!j.is_number_integer()) throw ScenarioError(path, "expected an integer");
  const auto wide = j.get<std::int64_t>();
  if (wide < std::numeric_limits<int>::min() || wide > std::numeric_limits<int>::max())
    throw ScenarioError(path, "integer out of range");
  return static_cast<int>(wide);
}

std::uint64_t as_uint64(const json& j, const std::string& path) {
  if (j.is_number_unsigned()) return j.get<std::uint64_t>();
  if (!j.is_number_integer()) throw ScenarioError(path, "expected an integer");
  const auto wide = j.get<std::int64_t>();
  if (wide < 0) throw ScenarioError(path, "expected a non-negative integer");
  return static_cast<std::uint64_t>(wide);
}

bool as_bool(const json& j, const std::string& path) {
  if (!j.is_boolean()) throw ScenarioError(path, "expected a boolean");
  return j.get<bool>();
}

std::string as_string(const json& j, const std::string& path) {
  if (!j.is_string()) throw ScenarioError(path, "expected a string");
  return j.get<std::string>();
}

Vec as_vector(const json& j, const std::string& path) {
  if (!j.is_array()) throw ScenarioError(path, "expected an array of numbers");
  Vec v;
  v.reserve(j.size());
  for (std::size_t k = 0; k < j.size(); ++k) v.push_back(as_number(j[k], idx(path, k)));
  return v;
}

Matrix as_matrix(const json& j, const std::string& path) {
  if (!j.is_array() || j.empty()) throw ScenarioError(path, "expected a matrix (array of rows)");
  const std::size_t cols = j[0].is_array() ? j[0].size() : 0;
  if (cols == 0) throw ScenarioError(path, "expected a matrix (array of rows)");
  Matrix m(static_cast<int>(j.size()), static_cast<int>(cols));
  for (std::size_t i = 0; i < j.size(); ++i) {
    const Vec row = as_vector(j[i], idx(path, i));
    if (row.size() != cols) throw ScenarioError(idx(path, i), "ragged matrix row");
    for (std::size_t c = 0; c < cols; ++c) m(static_cast<int>(i), static_cast<int>(c)) = row[c];
  }
  return m;
}

struct SampleTable {
  std::vector<double> grid;
  std::vector<Vec> rows;  // payload without the leading s column
};

SampleTable parse_samples(const json& j, int payload_width, const std::string& path) {
  if (!j.is_array() || j.size() < 2)
    throw ScenarioError(path, "expected an array of at least 2 sample rows");
  SampleTable table;
  for (std::size_t k = 0; k < j.size(); ++k) {
    const Vec row = as_vector(j[k], idx(path, k));
    if (static_cast<int>(row.size()) != payload_width + 1)
      throw ScenarioError(idx(path, k), "expected row width " + std::to_string(payload_width + 1) +
                                            " (s followed by " + std::to_string(payload_width) +
                                            " values)");
    table.grid.push_back(row[0]);
    table.rows.emplace_back(row.begin() + 1, row.end());
  }
  for (std::size_t k = 1; k < table.grid.size(); ++k)
    if (!(table.grid[k] > table.grid[k - 1]))
      throw ScenarioError(idx(path, k), "sample grid is not strictly increasing in s");
  return table;
}

//! Per-column natural cubic splines over a sample table.
struct SplineBundle {
  std::vector<CubicSpline> splines;
  Interval domain;

  static SplineBundle build(const SampleTable& table) {
    SplineBundle b;
    b.domain = Interval{table.grid.front(), table.grid.back()};
    const std::size_t w = table.rows.front().size();
    for (std::size_t c = 0; c < w; ++c) {
      std::vector<double> col(table.grid.size());
      for (std::size_t k = 0; k < table.grid.size(); ++k) col[k] = table.rows[k][c];
      b.splines.emplace_back(table.grid, std::move(col));
    }
    return b;
  }

  Vec value(double s) const {
    Vec v(splines.size());
    for (std::size_t c = 0; c < splines.size(); ++c) v[c] = splines[c].value(s);
    return v;
  }
  Vec derivative(double s) const {
    Vec v(splines.size());
    for (std::size_t c = 0; c < splines.size(); ++c) v[c] = splines[c].derivative(s);
    return v;
  }
  Vec second_derivative(double s) const {
    Vec v(splines.size());
    for (std::size_t c = 0; c < splines.size(); ++c) v[c] = splines[c].second_derivative(s);
    return v;
  }
  Matrix value_matrix(double s, int n) const {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m(i, j) = splines[static_cast<std::size_t>(i) * n + j].value(s);
    return m;
  }
};

MetricField identity_metric(int n) {
  MetricField m;
  m.dim = n;
  m.components = [n](const Vec&) { return Matrix::identity(n); };
  m.inverse_components = [n](const Vec&) { return Matrix::identity(n); };
  m.partials = [n](const Vec&) {
    return std::vector<Matrix>(static_cast<std::size_t>(n), Matrix(n, n));
  };
  m.signature.assign(static_cast<std::size_t>(n), 1);
  return m;
}

MetricField resolve_metric(const json& root, const std::string& manifold_id, int dim) {
  if (!root.contains("metric")) {
    if (manifold_id != "custom") return make_manifold(manifold_id);
    return identity_metric(dim);
  }
  const json& jm = root.at("metric");
  if (jm.is_string()) {
    const std::string id = jm.get<std::string>();
    if (!is_manifold_id(id)) throw ScenarioError("metric", "unknown catalog id: " + id);
    if (manifold_dim(id) != dim)
      throw ScenarioError("metric", "catalog metric dimension mismatch (dim = " +
                                        std::to_string(dim) + ")");
    return make_manifold(id);
  }
  expect_object(jm, "metric");
  reject_unknown(jm, {"constant"}, "metric");
  const Matrix g = as_matrix(require_key(jm, "constant", "metric"), "metric.constant");
  if (g.rows() != dim || g.cols() != dim)
    throw ScenarioError("metric.constant", "expected a " + std::to_string(dim) + "x" +
                                               std::to_string(dim) + " matrix");
  if (max_abs_diff(g, g.transposed()) > 1e-12 * std::max(1.0, g.max_abs()))
    throw ScenarioError("metric.constant", "matrix is not symmetric");
  const std::vector<double> ev = symmetric_eigenvalues(g);
  MetricField m;
  m.dim = dim;
  for (double lam : ev) {
    if (std::abs(lam) < 1e-12 * std::max(1.0, g.max_abs()))
      throw ScenarioError("metric.constant", "matrix is singular");
    m.signature.push_back(lam > 0 ? 1 : -1);
  }
  const Matrix ginv = g.inverse();
  m.components = [g](const Vec&) { return g; };
  m.inverse_components = [ginv](const Vec&) { return ginv; };
  m.partials = [dim](const Vec&) {
    return std::vector<Matrix>(static_cast<std::size_t>(dim), Matrix(dim, dim));
  };
  return m;
}

Curve resolve_curve(const json& root, int dim) {
  const json& jc = require_key(root, "curve", "");
  expect_object(jc, "curve");
  if (jc.contains("samples")) {
    reject_unknown(jc, {"samples"}, "curve");
    const SampleTable table = parse_samples(jc.at("samples"), dim, "curve.samples");
    auto bundle = std::make_shared<SplineBundle>(SplineBundle::build(table));
    Curve c;
    c.dim = dim;
    c.domain = bundle->domain;
    c.position = [bundle](double s) { return bundle->value(s); };
    c.velocity = [bundle](double s) { return bundle->derivative(s); };
    c.acceleration = [bundle](double s) { return bundle->second_derivative(s); };
    return c;
  }

  reject_unknown(jc, {"id", "params", "domain"}, "curve");
  const std::string id = as_string(require_key(jc, "id", "curve"), "curve.id");
  if (!is_curve_id(id)) throw ScenarioError("curve.id", "unknown catalog id: " + id);

  static const std::map<std::string, std::set<std::string>> allowed_params = {
      {"line", {"from", "to"}},
      {"latitude-circle", {"theta0"}},
      {"great-circle", {"phi0"}},
      {"accelerated-worldline", {"alpha"}},
      {"circular-worldline", {"R", "omega"}}};

  CurveParams params;
  if (jc.contains("params")) {
    const json& jp = jc.at("params");
    expect_object(jp, "curve.params");
    const auto& allowed = allowed_params.at(id);
    for (auto it = jp.begin(); it != jp.end(); ++it) {
      const std::string ppath = "curve.params." + it.key();
      if (!allowed.count(it.key()))
        throw ScenarioError(ppath, "unknown parameter for curve '" + id + "'");
      if (it.value().is_array())
        params.vectors[it.key()] = as_vector(it.value(), ppath);
      else
        params.scalars[it.key()] = as_number(it.value(), ppath);
    }
  }
  if (jc.contains("domain")) {
    const Vec d = as_vector(jc.at("domain"), "curve.domain");
    if (d.size() != 2 || !(d[1] > d[0]))
      throw ScenarioError("curve.domain", "expected [lo, hi] with lo < hi");
    params.domain = Interval{d[0], d[1]};
  }

  Curve c;
  try {
    c = make_curve(id, params, dim);
  } catch (const std::exception& e) {
    throw ScenarioError("curve.params", e.what());
  }
  if (c.dim != dim)
    throw ScenarioError("curve.id", "curve '" + id + "' has dimension " + std::to_string(c.dim) +
                                        ", scenario dim is " + std::to_string(dim));
  return c;
}

VelocityFieldData resolve_field(const json& jlaw, int dim) {
  const json& jf = require_key(jlaw, "field", "law");
  expect_object(jf, "law.field");
  reject_unknown(jf, {"values", "partials"}, "law.field");
  const SampleTable values = parse_samples(require_key(jf, "values", "law.field"),
                                           dim, "law.field.values");
  const SampleTable partials = parse_samples(require_key(jf, "partials", "law.field"),
                                             dim * dim, "law.field.partials");
  auto vb = std::make_shared<SplineBundle>(SplineBundle::build(values));
  auto pb = std::make_shared<SplineBundle>(SplineBundle::build(partials));
  VelocityFieldData x;
  x.value = [vb](double s) { return vb->value(s); };
  x.partials = [pb, dim](double s) { return pb->value_matrix(s, dim); };
  return x;
}

TransportLaw resolve_law(const json& root, const Curve& curve, const MetricField& metric,
                         int dim, std::string& law_type_out) {
  const json& jl = require_key(root, "law", "");
  expect_object(jl, "law");
  const std::string type = as_string(require_key(jl, "type", "law"), "law.type");
  law_type_out = type;
  try {
    if (type == "parallel") {
      reject_unknown(jl, {"type"}, "law");
      return parallel_law(curve, metric);
    }
    if (type == "fermi-walker") {
      reject_unknown(jl, {"type"}, "law");
      return fermi_walker_law(curve, metric);
    }
    if (type == "fermi") {
      reject_unknown(jl, {"type"}, "law");
      return fermi_law(curve, metric);
    }
    if (type == "truesdell") {
      reject_unknown(jl, {"type", "field"}, "law");
      return truesdell_law(curve, metric, resolve_field(jl, dim));
    }
    if (type == "jaumann") {
      reject_unknown(jl, {"type", "field"}, "law");
      return jaumann_law(curve, metric, resolve_field(jl, dim));
    }
    if (type == "custom-gamma") {
      reject_unknown(jl, {"type", "samples", "interpolation"}, "law");
      Interp interp = Interp::linear;
      if (jl.contains("interpolation")) {
        const std::string s = as_string(jl.at("interpolation"), "law.interpolation");
        if (s == "linear")
          interp = Interp::linear;
        else if (s == "cubic")
          interp = Interp::cubic;
        else
          throw ScenarioError("law.interpolation", "expected \"linear\" or \"cubic\"");
      }
      const SampleTable table =
          parse_samples(require_key(jl, "samples", "law"), dim * dim, "law.samples");
      std::vector<Matrix> gammas;
      gammas.reserve(table.rows.size());
      for (const Vec& row : table.rows) {
        Matrix g(dim, dim);
        for (int i = 0; i < dim; ++i)
          for (int j = 0; j < dim; ++j) g(i, j) = row[static_cast<std::size_t>(i) * dim + j];
        gammas.push_back(g);
      }
      TransportLaw law = tabulated_law(table.grid, gammas, interp);
      if (!curve.domain.contains(law.domain().lo) || !curve.domain.contains(law.domain().hi))
        throw ScenarioError("law.samples", "sample grid must lie inside the curve domain");
      return law;
    }
  } catch (const ScenarioError&) {
    throw;
  } catch (const std::exception& e) {
    throw ScenarioError("law", e.what());
  }
  throw ScenarioError("law.type", "unknown law type: " + type);
}

std::string fmt17(double x) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

json matrix_to_json(const Matrix& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

json tensor_to_json(const TensorComponents& t) {
  return json{{"p", t.p}, {"q", t.q}, {"dim", t.dim}, {"values", t.values}};
}

}  // namespace

std::uint64_t fnv1a_hash(const std::string& bytes) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

Scenario load_scenario(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ScenarioError("(file)", "cannot open scenario file: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    // map the byte offset to a line number for the error message
    std::size_t line = 1;
    for (std::size_t k = 0; k < std::min(text.size(), static_cast<std::size_t>(e.byte)); ++k)
      if (text[k] == '\n') ++line;
    throw ScenarioError("(line " + std::to_string(line) + ")",
                        std::string("parse error: ") + e.what());
  }
  return parse_scenario(j, path);
}

Scenario parse_scenario(const json& j, const std::string& source_name) {
  expect_object(j, "(root)");
  reject_unknown(j,
                 {"schema", "dim", "manifold", "metric", "curve", "law", "tensors",
                  "transport_pairs", "axiom_check", "integrator", "outputs"},
                 "");

  Scenario sc;
  sc.source_name = source_name;
  sc.hash = fnv1a_hash(j.dump());

  sc.schema = as_int(require_key(j, "schema", ""), "schema");
  if (sc.schema != 1) throw ScenarioError("schema", "unsupported schema version, expected 1");

  sc.dim = as_int(require_key(j, "dim", ""), "dim");
  if (sc.dim < 1 || sc.dim > 8) throw ScenarioError("dim", "dim must lie in [1, 8]");

  sc.manifold_id = as_string(require_key(j, "manifold", ""), "manifold");
  if (sc.manifold_id != "custom") {
    if (!is_manifold_id(sc.manifold_id))
      throw ScenarioError("manifold", "unknown catalog id: " + sc.manifold_id);
    if (manifold_dim(sc.manifold_id) != sc.dim)
      throw ScenarioError("manifold", "manifold dimension " +
                                          std::to_string(manifold_dim(sc.manifold_id)) +
                                          " does not match dim " + std::to_string(sc.dim));
  }

  sc.metric = resolve_metric(j, sc.manifold_id, sc.dim);
  sc.curve = resolve_curve(j, sc.dim);
  sc.law = resolve_law(j, sc.curve, sc.metric, sc.dim, sc.law_type);

  if (j.contains("tensors")) {
    const json& jt = j.at("tensors");
    if (!jt.is_array()) throw ScenarioError("tensors", "expected an array");
    for (std::size_t k = 0; k < jt.size(); ++k) {
      const std::string path = idx("tensors", k);
      expect_object(jt[k], path);
      reject_unknown(jt[k], {"p", "q", "values"}, path);
      const int p = as_int(require_key(jt[k], "p", path), path + ".p");
      const int q = as_int(require_key(jt[k], "q", path), path + ".q");
      if (p < 0 || q < 0) throw ScenarioError(path, "ranks must be non-negative");
      const Vec values = as_vector(require_key(jt[k], "values", path), path + ".values");
      const int want = ipow(sc.dim, p + q);
      if (static_cast<int>(values.size()) != want)
        throw ScenarioError(path + ".values",
                            "expected dim^(p+q) = " + std::to_string(want) + " values");
      sc.tensors.emplace_back(p, q, sc.dim, values);
    }
  }

  if (j.contains("transport_pairs")) {
    const json& jp = j.at("transport_pairs");
    if (!jp.is_array()) throw ScenarioError("transport_pairs", "expected an array of [s, t]");
    for (std::size_t k = 0; k < jp.size(); ++k) {
      const std::string path = idx("transport_pairs", k);
      const Vec pr = as_vector(jp[k], path);
      if (pr.size() != 2) throw ScenarioError(path, "expected [s, t]");
      if (!sc.curve.domain.contains(pr[0]) || !sc.curve.domain.contains(pr[1]))
        throw ScenarioError(path, "pair lies outside the curve domain");
      sc.transport_pairs.emplace_back(pr[0], pr[1]);
    }
  }

  if (j.contains("axiom_check")) {
    const json& ja = j.at("axiom_check");
    expect_object(ja, "axiom_check");
    reject_unknown(ja, {"enabled", "tol", "triples", "seed"}, "axiom_check");
    sc.axiom_check = as_bool(require_key(ja, "enabled", "axiom_check"), "axiom_check.enabled");
    if (ja.contains("tol")) {
      sc.axiom_tol = as_number(ja.at("tol"), "axiom_check.tol");
      if (!(sc.axiom_tol > 0)) throw ScenarioError("axiom_check.tol", "tolerance must be positive");
    }
    if (ja.contains("triples")) {
      sc.axiom_triples = as_int(ja.at("triples"), "axiom_check.triples");
      if (sc.axiom_triples < 1)
        throw ScenarioError("axiom_check.triples", "need at least one probe triple");
    }
    if (ja.contains("seed"))
      sc.axiom_seed = as_uint64(ja.at("seed"), "axiom_check.seed");
  }

  if (j.contains("integrator")) {
    const json& ji = j.at("integrator");
    expect_object(ji, "integrator");
    reject_unknown(ji, {"step"}, "integrator");
    sc.step = as_number(require_key(ji, "step", "integrator"), "integrator.step");
    if (!(sc.step > 0)) throw ScenarioError("integrator.step", "step must be positive");
  } else {
    sc.step = sc.law.default_step();
  }

  if (j.contains("outputs")) {
    const json& jo = j.at("outputs");
    expect_object(jo, "outputs");
    reject_unknown(jo, {"trace_points"}, "outputs");
    sc.trace_points = as_int(require_key(jo, "trace_points", "outputs"), "outputs.trace_points");
    if (sc.trace_points != 0 && sc.trace_points < 2)
      throw ScenarioError("outputs.trace_points", "trace resolution must be >= 2 (or 0 for none)");
  }

  return sc;
}

std::optional<double> rotation_angle_2d(const Matrix& h, const Matrix& g_at_base) {
  if (h.rows() != 2 || h.cols() != 2) return std::nullopt;
  Matrix frame;
  try {
    frame = cholesky_lower(g_at_base).transposed();  // E with E^T E = g
  } catch (const std::exception&) {
    return std::nullopt;  // not positive definite: no well-defined angle
  }
  const Matrix hh = frame * h * frame.inverse();
  const double det = hh(0, 0) * hh(1, 1) - hh(0, 1) * hh(1, 0);
  if (!(det > 0)) return std::nullopt;
  // rotation angle of the orthogonal factor of the polar decomposition
  return std::atan2(hh(1, 0) - hh(0, 1), hh(0, 0) + hh(1, 1));
}

RunReport run_scenario(const Scenario& sc) {
  RunReport rep;
  rep.step = sc.step;
  char hex[24];
  std::snprintf(hex, sizeof hex, "fnv1a:%016llx", static_cast<unsigned long long>(sc.hash));
  rep.scenario_hash = hex;

  for (std::size_t k = 0; k < sc.transport_pairs.size(); ++k) {
    const auto [s, t] = sc.transport_pairs[k];
    try {
      PairResult pr;
      pr.s = s;
      pr.t = t;
      pr.tm = transport_matrix(sc.law, s, t, sc.step);
      for (const TensorComponents& tc : sc.tensors)
        pr.transported.push_back(transport_tensor(pr.tm, tc));
      rep.pairs.push_back(std::move(pr));
    } catch (const std::exception& e) {
      throw ScenarioError(idx("transport_pairs", k), e.what());
    }
  }

  if (sc.axiom_check) {
    ProbeSpec probes;
    probes.triples = sc.axiom_triples;
    probes.seed = sc.axiom_seed;
    probes.step = sc.step;
    rep.axioms = verify_axioms(sc.law, probes, sc.axiom_tol);
  }

  if (sc.curve.is_closed(1e-9) && sc.curve.domain.length() > 0.0) {
    try {
      HolonomyBlock hb;
      const TransportMatrix tm =
          transport_matrix(sc.law, sc.curve.domain.lo, sc.curve.domain.hi, sc.step);
      hb.H = tm.H;
      hb.deviation = max_abs_diff(tm.H, Matrix::identity(sc.dim));
      if (sc.dim == 2)
        hb.rotation_angle =
            rotation_angle_2d(tm.H, sc.metric.g(sc.curve.position(sc.curve.domain.lo)));
      rep.holonomy = hb;
    } catch (const std::exception& e) {
      throw ScenarioError("curve", std::string("holonomy over the closed curve: ") + e.what());
    }
  }

  if (sc.trace_points >= 2) {
    const int n = sc.dim;
    rep.trace_header = {"s", "t"};
    for (int i = 0; i < n; ++i)
      for (int jj = 0; jj < n; ++jj)
        rep.trace_header.push_back("H_" + std::to_string(i) + "_" + std::to_string(jj));
    for (std::size_t k = 0; k < sc.tensors.size(); ++k)
      for (int c = 0; c < sc.tensors[k].size(); ++c)
        rep.trace_header.push_back("T" + std::to_string(k) + "_" + std::to_string(c));

    for (std::size_t k = 0; k < sc.transport_pairs.size(); ++k) {
      const auto [s, t] = sc.transport_pairs[k];
      for (int jstep = 0; jstep < sc.trace_points; ++jstep) {
        const double tau = s + (t - s) * jstep / (sc.trace_points - 1);
        try {
          const TransportMatrix tm = transport_matrix(sc.law, s, tau, sc.step);
          TraceRow row;
          row.s = s;
          row.t = tau;
          row.entries.insert(row.entries.end(), tm.H.data().begin(), tm.H.data().end());
          for (const TensorComponents& tc : sc.tensors) {
            const TensorComponents moved = transport_tensor(tm, tc);
            row.entries.insert(row.entries.end(), moved.values.begin(), moved.values.end());
          }
          rep.trace.push_back(std::move(row));
        } catch (const std::exception& e) {
          throw ScenarioError(idx("transport_pairs", k), e.what());
        }
      }
    }
  }

  return rep;
}

json report_to_json(const RunReport& report) {
  json j;
  j["provenance"] = {{"scenario_hash", report.scenario_hash}, {"step", report.step}};
  json pairs = json::array();
  for (const PairResult& pr : report.pairs) {
    json p;
    p["s"] = pr.s;
    p["t"] = pr.t;
    p["H"] = matrix_to_json(pr.tm.H);
    p["H_inv"] = matrix_to_json(pr.tm.H_inv);
    p["inverse_pair_defect"] = pr.tm.inverse_pair_defect();
    json moved = json::array();
    for (const TensorComponents& tc : pr.transported) moved.push_back(tensor_to_json(tc));
    p["transported"] = std::move(moved);
    pairs.push_back(std::move(p));
  }
  j["pairs"] = std::move(pairs);

  if (report.axioms) {
    json checks = json::array();
    for (const AxiomCheck& c : report.axioms->checks)
      checks.push_back({{"name", c.name}, {"residual", c.residual}});
    j["axioms"] = {{"tolerance", report.axioms->tolerance},
                   {"pass", report.axioms->pass},
                   {"checks", std::move(checks)}};
  }
  if (report.holonomy) {
    json hb;
    hb["H"] = matrix_to_json(report.holonomy->H);
    hb["deviation_from_identity"] = report.holonomy->deviation;
    if (report.holonomy->rotation_angle) hb["rotation_angle"] = *report.holonomy->rotation_angle;
    j["holonomy"] = std::move(hb);
  }
  return j;
}

void export_trace(const RunReport& report, std::ostream& out) {
  if (report.trace_header.empty())
    throw std::logic_error("export_trace: report was computed without a trace block");
  for (std::size_t c = 0; c < report.trace_header.size(); ++c) {
    if (c) out << ',';
    out << report.trace_header[c];
  }
  out << '\n';
  for (const TraceRow& row : report.trace) {
    out << fmt17(row.s) << ',' << fmt17(row.t);
    for (double v : row.entries) out << ',' << fmt17(v);
    out << '\n';
  }
}

void export_trace(const RunReport& report, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("export_trace: cannot open output path: " + path);
  export_trace(report, out);
  out.flush();
  if (!out) throw std::runtime_error("export_trace: write failed: " + path);
}

}  // namespace stransport
