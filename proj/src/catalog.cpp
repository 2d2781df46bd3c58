// Copyright 2026 the stransport developers
// SPDX-License-Identifier: Apache-2.0

#include "stransport/catalog.hpp"

#include <cctype>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace stransport {

namespace {

constexpr double kPi = std::numbers::pi;

//! Parses "<stem>-<n>" and returns n, or 0 when the id does not match.
int parse_dim_suffix(const std::string& id, const std::string& stem) {
  if (id.size() <= stem.size() + 1 || id.compare(0, stem.size(), stem) != 0 ||
      id[stem.size()] != '-')
    return 0;
  const std::string tail = id.substr(stem.size() + 1);
  if (tail.size() > 2) return 0;  // supported fibre dimensions stop at 8
  for (char c : tail)
    if (!std::isdigit(static_cast<unsigned char>(c))) return 0;
  const int n = std::stoi(tail);
  return n >= 1 && n <= 8 ? n : 0;
}

MetricField constant_metric(int n, const Vec& diag) {
  MetricField m;
  m.dim = n;
  m.components = [diag, n](const Vec&) { return Matrix::diagonal(diag); };
  Vec inv_diag(diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) inv_diag[i] = 1.0 / diag[i];
  m.inverse_components = [inv_diag](const Vec&) { return Matrix::diagonal(inv_diag); };
  m.partials = [n](const Vec&) {
    return std::vector<Matrix>(static_cast<std::size_t>(n), Matrix(n, n));
  };
  for (double d : diag) m.signature.push_back(d > 0 ? 1 : -1);
  return m;
}

double param(const CurveParams& p, const std::string& name, double fallback) {
  auto it = p.scalars.find(name);
  return it == p.scalars.end() ? fallback : it->second;
}

}  // namespace

MetricField make_manifold(const std::string& id) {
  if (int n = parse_dim_suffix(id, "euclidean"); n > 0)
    return constant_metric(n, Vec(static_cast<std::size_t>(n), 1.0));
  if (int n = parse_dim_suffix(id, "minkowski"); n > 0) {
    Vec diag(static_cast<std::size_t>(n), 1.0);
    diag[0] = -1.0;
    return constant_metric(n, diag);
  }
  if (id == "sphere-2") {
    // unit sphere, chart (theta, phi), g = diag(1, sin^2 theta)
    MetricField m;
    m.dim = 2;
    m.components = [](const Vec& x) {
      const double s = std::sin(x[0]);
      return Matrix{{1.0, 0.0}, {0.0, s * s}};
    };
    m.inverse_components = [](const Vec& x) {
      const double s = std::sin(x[0]);
      if (std::abs(s) < 1e-14) throw std::domain_error("sphere-2: chart singular at the poles");
      return Matrix{{1.0, 0.0}, {0.0, 1.0 / (s * s)}};
    };
    m.partials = [](const Vec& x) {
      std::vector<Matrix> d(2, Matrix(2, 2));
      d[0](1, 1) = 2.0 * std::sin(x[0]) * std::cos(x[0]);
      return d;
    };
    m.signature = {1, 1};
    return m;
  }
  if (id == "polar-plane") {
    // plane in polar coordinates (r, phi), g = diag(1, r^2)
    MetricField m;
    m.dim = 2;
    m.components = [](const Vec& x) { return Matrix{{1.0, 0.0}, {0.0, x[0] * x[0]}}; };
    m.inverse_components = [](const Vec& x) {
      if (std::abs(x[0]) < 1e-14) throw std::domain_error("polar-plane: chart singular at r = 0");
      return Matrix{{1.0, 0.0}, {0.0, 1.0 / (x[0] * x[0])}};
    };
    m.partials = [](const Vec& x) {
      std::vector<Matrix> d(2, Matrix(2, 2));
      d[0](1, 1) = 2.0 * x[0];
      return d;
    };
    m.signature = {1, 1};
    return m;
  }
  throw std::invalid_argument("unknown catalog id: " + id);
}

Curve make_curve(const std::string& id, const CurveParams& params, int dim) {
  Curve c;
  if (id == "line") {
    c.dim = dim;
    Vec from(static_cast<std::size_t>(dim), 0.0);
    Vec to(static_cast<std::size_t>(dim), 0.0);
    to[0] = 1.0;
    if (auto it = params.vectors.find("from"); it != params.vectors.end()) from = it->second;
    if (auto it = params.vectors.find("to"); it != params.vectors.end()) to = it->second;
    if (static_cast<int>(from.size()) != dim || static_cast<int>(to.size()) != dim)
      throw std::invalid_argument("line: from/to length must equal dim");
    c.domain = params.domain.value_or(Interval{0.0, 1.0});
    if (!(c.domain.length() > 0.0)) throw std::invalid_argument("line: empty domain");
    const Interval dom = c.domain;
    Vec dirv(static_cast<std::size_t>(dim));
    for (int i = 0; i < dim; ++i) dirv[i] = (to[i] - from[i]) / dom.length();
    c.position = [from, dirv, dom, dim](double s) {
      Vec x(static_cast<std::size_t>(dim));
      for (int i = 0; i < dim; ++i) x[i] = from[i] + dirv[i] * (s - dom.lo);
      return x;
    };
    c.velocity = [dirv](double) { return dirv; };
    c.acceleration = [dim](double) { return Vec(static_cast<std::size_t>(dim), 0.0); };
    return c;
  }
  if (id == "latitude-circle") {
    const double theta0 = param(params, "theta0", kPi / 4.0);
    if (!(theta0 > 0.0 && theta0 < kPi))
      throw std::invalid_argument("latitude-circle: theta0 must lie in (0, pi)");
    c.dim = 2;
    c.domain = params.domain.value_or(Interval{0.0, 2.0 * kPi});
    c.position = [theta0](double s) { return Vec{theta0, s}; };
    c.velocity = [](double) { return Vec{0.0, 1.0}; };
    c.acceleration = [](double) { return Vec{0.0, 0.0}; };
    c.coordinate_period = {0.0, 2.0 * kPi};
    return c;
  }
  if (id == "great-circle") {
    // meridian phi = phi0, a geodesic of sphere-2, arc-length parametrized
    const double phi0 = param(params, "phi0", 0.0);
    c.dim = 2;
    c.domain = params.domain.value_or(Interval{kPi / 6.0, 5.0 * kPi / 6.0});
    if (!(c.domain.lo > 0.0 && c.domain.hi < kPi))
      throw std::invalid_argument("great-circle: domain must avoid the poles");
    c.position = [phi0](double s) { return Vec{s, phi0}; };
    c.velocity = [](double) { return Vec{1.0, 0.0}; };
    c.acceleration = [](double) { return Vec{0.0, 0.0}; };
    return c;
  }
  if (id == "accelerated-worldline") {
    // uniformly accelerated observer in 2D Minkowski, proper acceleration alpha
    const double alpha = param(params, "alpha", 1.0);
    if (!(alpha > 0.0)) throw std::invalid_argument("accelerated-worldline: alpha must be positive");
    c.dim = 2;
    c.domain = params.domain.value_or(Interval{0.0, 1.0});
    c.position = [alpha](double s) {
      return Vec{std::sinh(alpha * s) / alpha, std::cosh(alpha * s) / alpha};
    };
    c.velocity = [alpha](double s) { return Vec{std::cosh(alpha * s), std::sinh(alpha * s)}; };
    c.acceleration = [alpha](double s) {
      return Vec{alpha * std::sinh(alpha * s), alpha * std::cosh(alpha * s)};
    };
    return c;
  }
  if (id == "circular-worldline") {
    // lab-time parametrized circular motion in 2+1 Minkowski, coords (t, x, y)
    const double radius = param(params, "R", 1.0);
    const double omega = param(params, "omega", 0.5);
    if (!(radius > 0.0) || !(omega > 0.0))
      throw std::invalid_argument("circular-worldline: R and omega must be positive");
    if (radius * omega >= 1.0)
      throw std::invalid_argument("circular-worldline: R*omega must be subluminal (< 1)");
    c.dim = 3;
    c.domain = params.domain.value_or(Interval{0.0, 2.0 * kPi / omega});
    c.position = [radius, omega](double s) {
      return Vec{s, radius * std::cos(omega * s), radius * std::sin(omega * s)};
    };
    c.velocity = [radius, omega](double s) {
      return Vec{1.0, -radius * omega * std::sin(omega * s), radius * omega * std::cos(omega * s)};
    };
    c.acceleration = [radius, omega](double s) {
      const double w2 = omega * omega;
      return Vec{0.0, -radius * w2 * std::cos(omega * s), -radius * w2 * std::sin(omega * s)};
    };
    return c;
  }
  throw std::invalid_argument("unknown catalog id: " + id);
}

bool is_manifold_id(const std::string& id) {
  return parse_dim_suffix(id, "euclidean") > 0 || parse_dim_suffix(id, "minkowski") > 0 ||
         id == "sphere-2" || id == "polar-plane";
}

bool is_curve_id(const std::string& id) {
  return id == "line" || id == "latitude-circle" || id == "great-circle" ||
         id == "accelerated-worldline" || id == "circular-worldline";
}

int manifold_dim(const std::string& id) {
  if (int n = parse_dim_suffix(id, "euclidean"); n > 0) return n;
  if (int n = parse_dim_suffix(id, "minkowski"); n > 0) return n;
  if (id == "sphere-2" || id == "polar-plane") return 2;
  throw std::invalid_argument("unknown catalog id: " + id);
}

std::vector<std::string> manifold_catalog() {
  return {"euclidean-<n>   flat R^n, Cartesian chart",
          "minkowski-<n>   flat Lorentzian, signature (-,+,...)",
          "sphere-2        unit sphere, chart (theta, phi)",
          "polar-plane     flat plane, polar chart (r, phi)"};
}

std::vector<std::string> curve_catalog() {
  return {"line                      straight chart segment, params: from, to",
          "latitude-circle           theta = theta0 on sphere-2, params: theta0",
          "great-circle              meridian phi = phi0 on sphere-2, params: phi0",
          "accelerated-worldline     hyperbolic worldline in minkowski-2, params: alpha",
          "circular-worldline        lab-time circular orbit in minkowski-3, params: R, omega"};
}

std::vector<std::string> law_catalog() {
  return {"parallel", "fermi-walker", "fermi", "truesdell", "jaumann", "custom-gamma"};
}

}  // namespace stransport
