// Copyright 2026 the stransport developers
// SPDX-License-Identifier: Apache-2.0

#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "stransport/scenario.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInputError = 1;
constexpr int kExitAxiomFailure = 2;

struct Overrides {
  double step = 0.0;  // 0 = keep scenario value
  double tol = 0.0;
  int points = 0;
  std::string output;
};

stransport::Scenario load_with_overrides(const std::string& path, const Overrides& ov) {
  stransport::Scenario sc = stransport::load_scenario(path);
  if (ov.step > 0.0) sc.step = ov.step;
  if (ov.tol > 0.0) sc.axiom_tol = ov.tol;
  if (ov.points >= 2) sc.trace_points = ov.points;
  return sc;
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output path: " + path);
  out << text;
}

int run_command(const std::string& scenario_path, const Overrides& ov, bool verify_only) {
  stransport::Scenario sc = load_with_overrides(scenario_path, ov);
  if (verify_only) {
    sc.axiom_check = true;
    sc.transport_pairs.clear();
    sc.trace_points = 0;
  }
  const stransport::RunReport report = stransport::run_scenario(sc);
  write_text(ov.output, stransport::report_to_json(report).dump(2) + "\n");
  if (report.axioms && !report.axioms->pass) return kExitAxiomFailure;
  return kExitOk;
}

int trace_command(const std::string& scenario_path, const Overrides& ov) {
  stransport::Scenario sc = load_with_overrides(scenario_path, ov);
  if (sc.trace_points < 2) sc.trace_points = 11;
  sc.axiom_check = false;
  const stransport::RunReport report = stransport::run_scenario(sc);
  if (ov.output.empty()) {
    stransport::export_trace(report, std::cout);
  } else {
    stransport::export_trace(report, ov.output);
  }
  return kExitOk;
}

int catalog_command() {
  std::cout << "manifolds:\n";
  for (const std::string& s : stransport::manifold_catalog()) std::cout << "  " << s << "\n";
  std::cout << "curves:\n";
  for (const std::string& s : stransport::curve_catalog()) std::cout << "  " << s << "\n";
  std::cout << "laws:\n";
  for (const std::string& s : stransport::law_catalog()) std::cout << "  " << s << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"linear transports of tensors along curves: run scenarios, verify transport "
               "axioms, trace transport matrices"};
  app.require_subcommand(1);

  Overrides ov;
  std::string scenario_path;

  CLI::App* run = app.add_subcommand("run", "run a scenario file and print the report (JSON)");
  run->add_option("scenario", scenario_path, "scenario file (JSON, schema 1)")->required();
  run->add_option("--step", ov.step, "override the integrator step");
  run->add_option("--tol", ov.tol, "override the axiom-check tolerance");
  run->add_option("--output", ov.output, "write the report to a file instead of stdout");

  CLI::App* verify = app.add_subcommand("verify", "run only the axiom check of a scenario");
  verify->add_option("scenario", scenario_path, "scenario file (JSON, schema 1)")->required();
  verify->add_option("--step", ov.step, "override the integrator step");
  verify->add_option("--tol", ov.tol, "override the axiom-check tolerance");
  verify->add_option("--output", ov.output, "write the report to a file instead of stdout");

  CLI::App* trace = app.add_subcommand("trace", "emit the transport trace as CSV");
  trace->add_option("scenario", scenario_path, "scenario file (JSON, schema 1)")->required();
  trace->add_option("--step", ov.step, "override the integrator step");
  trace->add_option("--points", ov.points, "trace resolution (rows per transport pair)");
  trace->add_option("--output", ov.output, "write the CSV to a file instead of stdout");

  CLI::App* catalog = app.add_subcommand("catalog", "list built-in manifolds, curves and laws");

  CLI11_PARSE(app, argc, argv);

  try {
    if (run->parsed()) return run_command(scenario_path, ov, false);
    if (verify->parsed()) return run_command(scenario_path, ov, true);
    if (trace->parsed()) return trace_command(scenario_path, ov);
    if (catalog->parsed()) return catalog_command();
  } catch (const stransport::ScenarioError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}
