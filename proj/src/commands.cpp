// Copyright 2026 The rydgate Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "rydgate/commands.hpp"

#include <charconv>
#include <fstream>
#include <iostream>
#include <limits>

#include "rydgate/fidelity.hpp"
#include "rydgate/ga.hpp"
#include "rydgate/leakage.hpp"
#include "rydgate/noise.hpp"
#include "rydgate/propagator.hpp"
#include "rydgate/units.hpp"

namespace rydgate {

using nlohmann::json;
namespace fs = std::filesystem;

namespace {

std::ofstream open_output(const fs::path& dir, const std::string& name) {
  fs::create_directories(dir);
  std::ofstream out(dir / name);
  if (!out) throw std::runtime_error("cannot write '" + (dir / name).string() + "'");
  return out;
}

void write_json(const fs::path& dir, const std::string& name, const json& j) {
  open_output(dir, name) << j.dump(2) << '\n';
}

std::string join_csv(const std::vector<std::string>& cells) {
  std::string line;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) line += ',';
    line += cells[i];
  }
  return line;
}

std::vector<double> to_mhz(std::span<const double> x) {
  std::vector<double> out;
  for (double v : x) out.push_back(angular_to_mhz(v));
  return out;
}

json params_json(std::span<const double> params, PulseMode mode) {
  const std::vector<double> mhz = to_mhz(params);
  json j;
  j["omega1"] = std::vector<double>(mhz.begin(), mhz.begin() + 3);
  if (mode == PulseMode::kTwoPulse) j["omega2"] = std::vector<double>(mhz.begin() + 3, mhz.end());
  return j;
}

json fidelity_pair(const std::vector<InputOverlap>& overlaps) {
  return {{"population", fidelity_from_overlaps(overlaps, MetricMode::kPopulation)},
          {"uhlmann", fidelity_from_overlaps(overlaps, MetricMode::kUhlmann)}};
}

}  // namespace

std::string format_double(double v) {
  char buf[32];
  const auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, end);
}

std::vector<double> default_scan_grid(const std::string& axis) {
  if (axis == "sigma_x") return {0.0, 0.25, 0.5, 0.75, 1.0, 1.25, 1.5};
  if (axis == "Ta") return {0.0, 10.0, 20.0, 30.0, 40.0, 50.0};
  if (axis == "delta_omega") return {0.0, 0.01, 0.02, 0.03, 0.04, 0.05};
  if (axis == "gamma") return {0.0, 2.0, 4.0, 6.0, 8.0, 10.0};
  throw ConfigError("unknown scan axis '" + axis +
                    "' (expected sigma_x, Ta, delta_omega or gamma)");
}

json cmd_simulate(const RunConfig& cfg, const CommandOptions& opts) {
  const Scenario scenario = cfg.scenario();
  const PulseSet pulses = cfg.pulses();
  const TargetGate gate = scenario.gate();
  const std::vector<InputOverlap> overlaps =
      basis_overlaps(scenario.system, pulses, scenario.propagation, {}, gate);

  PropagationConfig traj_cfg = scenario.propagation;
  traj_cfg.record_stride = cfg.trajectory_stride;
  const int dim = scenario.system.dim();

  json inputs = json::array();
  for (const InputOverlap& o : overlaps) {
    const std::string name = "trajectory_" + o.input.label() + ".csv";
    const PropagationResult r =
        propagate(scenario.system, pulses, DensityMatrix::pure(o.input), traj_cfg);
    std::ofstream csv = open_output(opts.out_dir, name);
    std::vector<std::string> header{"t"};
    for (int i = 0; i < dim; ++i) header.push_back("p_" + ket_from_index(i, cfg.qubits).label());
    csv << join_csv(header) << '\n';
    for (const TrajectorySample& s : r.trajectory) {
      std::vector<std::string> row{format_double(s.t)};
      for (double p : s.populations) row.push_back(format_double(p));
      csv << join_csv(row) << '\n';
    }
    inputs.push_back({{"input", o.input.label()},
                      {"image", o.image.label()},
                      {"overlap", o.overlap},
                      {"final_image_population", expectation(r.final_state, o.image)},
                      {"trajectory", name}});
  }

  json out;
  out["command"] = "simulate";
  out["gate"] = gate.kind() == GateKind::kCnot ? "CNOT" : "Toffoli";
  out["metric"] = std::string(to_string(cfg.metric));
  out["fidelity"] = fidelity_from_overlaps(overlaps, cfg.metric);
  out["fidelity_by_metric"] = fidelity_pair(overlaps);
  out["inputs"] = inputs;
  out["config"] = to_json(cfg);
  write_json(opts.out_dir, "simulate.json", out);
  return out;
}

json cmd_optimize(const RunConfig& cfg, const CommandOptions& opts) {
  GAConfig ga = cfg.ga.ga;
  ga.seed = cfg.seed;
  ga.threads = opts.threads;
  const RoundObserver progress = [&](int round, const GAResult& r) {
    if (opts.verbose) {
      std::cerr << "round " << round << ": best F = " << format_double(r.best_fidelity) << '\n';
    }
  };

  json out;
  out["command"] = "optimize";
  out["seed"] = cfg.seed;
  if (opts.selftest) {
    // Smooth unimodal target with a known optimum.
    const std::vector<double> c{0.3, -0.2, 0.1, 0.45, -0.35, 0.05};
    const Objective quad = [&](std::span<const double> x) {
      double s = 0.0;
      for (std::size_t i = 0; i < x.size(); ++i) s += (x[i] - c[i]) * (x[i] - c[i]);
      return 1.0 - s;
    };
    const GAResult r = optimize(quad, SearchSpace::uniform(6, -1.0, 1.0), ga, progress);
    double dist = 0.0;
    for (std::size_t i = 0; i < c.size(); ++i) dist = std::max(dist, std::abs(r.best_params[i] - c[i]));
    out["selftest"] = true;
    out["best_params"] = r.best_params;
    out["best_fidelity"] = r.best_fidelity;
    out["history"] = r.history;
    out["rounds_used"] = r.rounds_used;
    out["max_param_error"] = dist;
    out["passed"] = r.best_fidelity >= 1.0 - 1e-4;
    out["config"] = to_json(cfg);
    write_json(opts.out_dir, "optimize.json", out);
    return out;
  }

  Scenario search = cfg.scenario();
  search.propagation.steps = cfg.ga.eval_steps;
  // The search is a coarse screen; only stability limits its grid. The winner
  // is re-evaluated on the full grid below.
  search.propagation.max_drive_phase_per_step = std::numeric_limits<double>::infinity();
  const SearchSpace space = cfg.search_space();
  const Objective objective = [&](std::span<const double> x) { return fitness_of(x, search); };
  const GAResult r = optimize(objective, space, ga, progress);

  const Scenario full = cfg.scenario();
  const std::vector<InputOverlap> overlaps = basis_overlaps(
      full.system, full.pulses(r.best_params), full.propagation, {}, full.gate());

  json rounds = json::array();
  for (const GARound& round : r.rounds) {
    rounds.push_back({{"best_fidelity", round.best_fidelity},
                      {"best_params", params_json(round.best_params, cfg.mode)},
                      {"box_lo", to_mhz(round.box.lo)},
                      {"box_hi", to_mhz(round.box.hi)}});
  }
  out["best_params"] = params_json(r.best_params, cfg.mode);
  out["search_fidelity"] = r.best_fidelity;
  out["search_steps"] = cfg.ga.eval_steps;
  out["metric"] = std::string(to_string(cfg.metric));
  out["fidelity"] = fidelity_from_overlaps(overlaps, cfg.metric);
  out["fidelity_by_metric"] = fidelity_pair(overlaps);
  out["history"] = r.history;
  out["rounds"] = rounds;
  out["rounds_used"] = r.rounds_used;
  out["evaluations"] = r.evaluations;
  out["converged"] = r.converged;
  out["config"] = to_json(cfg);
  write_json(opts.out_dir, "optimize.json", out);
  return out;
}

json cmd_scan(const RunConfig& cfg, const CommandOptions& opts) {
  const std::string axis = opts.axis.value_or(cfg.scan.axis);
  std::vector<double> grid = !opts.grid.empty()       ? opts.grid
                             : !cfg.scan.grid.empty() ? cfg.scan.grid
                                                      : default_scan_grid(axis);
  default_scan_grid(axis);  // rejects unknown axes
  for (double g : grid) {
    if (!(g >= 0.0)) throw ConfigError("scan grid values must be >= 0");
    if (axis == "delta_omega" && g > 0.05) throw ConfigError("delta_omega grid must be <= 0.05");
  }

  const Scenario scenario = cfg.scenario();
  const PulseSet pulses = cfg.pulses();
  const int trials = cfg.noise.trials;

  json out;
  out["command"] = "scan";
  out["axis"] = axis;
  std::vector<ScanPoint> points;
  if (axis == "gamma") {
    const DecayScan d = decay_scan(scenario, pulses, grid, opts.threads);
    points = d.points;
    out["baseline_fidelity"] = d.baseline_fidelity;
    out["slope_per_khz"] = d.slope;
    out["intercept"] = d.intercept;
    out["r_squared"] = d.r_squared;
    out["error_measure"] = "E_sp = [1 - F(gamma)] - [1 - F(0)]";
  } else if (axis == "sigma_x") {
    points = sigma_scan(scenario, pulses, cfg.noise.position, grid, trials, cfg.seed, opts.threads);
    out["error_measure"] = "1 - mean F";
  } else if (axis == "Ta") {
    points = doppler_scan(scenario, pulses, grid, trials, cfg.seed, opts.threads);
    out["error_measure"] = "F(0) - mean F";
    std::vector<double> sig;
    for (double ta : grid) sig.push_back(doppler_sigma(ta));
    out["doppler_sigma"] = sig;
  } else {
    points = amplitude_scan(scenario, pulses, grid, trials, cfg.seed, opts.threads);
    out["error_measure"] = "F(0) - mean F";
  }

  const std::string name = "scan_" + axis + ".csv";
  std::ofstream csv = open_output(opts.out_dir, name);
  csv << "value,mean_fidelity,std_error,error,trials,seed\n";
  json rows = json::array();
  for (const ScanPoint& p : points) {
    csv << join_csv({format_double(p.value), format_double(p.mean_fidelity),
                     format_double(p.std_error), format_double(p.error),
                     std::to_string(p.trials), std::to_string(p.seed)})
        << '\n';
    rows.push_back({{"value", p.value},
                    {"mean_fidelity", p.mean_fidelity},
                    {"std_error", p.std_error},
                    {"error", p.error},
                    {"trials", p.trials}});
  }
  out["metric"] = std::string(to_string(cfg.metric));
  out["points"] = rows;
  out["csv"] = name;
  out["seed"] = cfg.seed;
  out["config"] = to_json(cfg);
  write_json(opts.out_dir, "scan.json", out);
  return out;
}

json cmd_leakage(const RunConfig& cfg, const CommandOptions& opts) {
  const std::vector<LeakageChannel> channels = cfg.leakage_channels();
  const std::vector<LeakageRow> rows =
      leakage_table(channels, cfg.leakage.distances, cfg.leakage.window_us, opts.threads);
  const std::size_t n = channels.size();

  std::ofstream csv = open_output(opts.out_dir, "leakage.csv");
  std::vector<std::string> header{"r0"};
  for (std::size_t j = 1; j <= n; ++j) header.push_back("B" + std::to_string(j) + "_over_2pi_mhz");
  for (std::size_t j = 1; j <= n; ++j) header.push_back("E" + std::to_string(j));
  header.push_back("E_total");
  for (std::size_t j = 1; j <= n; ++j) header.push_back("E" + std::to_string(j) + "_analytic");
  csv << join_csv(header) << '\n';

  json table = json::array();
  for (const LeakageRow& r : rows) {
    std::vector<std::string> cells{format_double(r.r0)};
    for (double b : r.coupling) cells.push_back(format_double(angular_to_mhz(b)));
    for (double e : r.single) cells.push_back(format_double(e));
    cells.push_back(format_double(r.total));
    for (double e : r.oracle) cells.push_back(format_double(e));
    csv << join_csv(cells) << '\n';
    table.push_back({{"r0", r.r0},
                     {"B_over_2pi_mhz", to_mhz(r.coupling)},
                     {"E", r.single},
                     {"E_analytic", r.oracle},
                     {"E_total", r.total}});
  }
  json out;
  out["command"] = "leakage";
  out["window"] = cfg.leakage.window_us;
  out["rows"] = table;
  out["csv"] = "leakage.csv";
  out["config"] = to_json(cfg);
  write_json(opts.out_dir, "leakage.json", out);
  return out;
}

}  // namespace rydgate
