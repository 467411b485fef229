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
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "rydgate/commands.hpp"

using namespace rydgate;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name) {
  const fs::path p = fs::temp_directory_path() / ("rydgate_cmd_test_" + name);
  fs::remove_all(p);
  return p;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

RunConfig two_pulse(double v0, std::array<double, 3> a, std::array<double, 3> b) {
  json doc = {{"qubits", 2}, {"mode", "two-pulse"}, {"V0_over_2pi", v0}, {"gamma", 3.0},
              {"pulses", {{"omega1", a}, {"omega2", b}}}, {"trajectory_stride", 400}};
  return parse_config(doc);
}

}  // namespace

TEST_CASE("simulate") {
  CommandOptions o;
  o.out_dir = scratch("sim");
  const json r = cmd_simulate(two_pulse(1.0, {-0.9549, -1.9544, -0.0631}, {-2.8310, -3.6488, 0.0074}), o);
  CHECK(std::abs(r["fidelity"].get<double>() - 0.9951) < 0.01);
  CHECK(r["fidelity_by_metric"]["uhlmann"] >= r["fidelity_by_metric"]["population"]);
  CHECK(fs::exists(o.out_dir / "trajectory_10.csv"));
  CHECK(fs::exists(o.out_dir / "simulate.json"));
  const std::string csv = slurp(o.out_dir / "trajectory_00.csv");
  CHECK(csv.rfind("t,p_00,p_01,p_0r,p_10", 0) == 0);

  const json zero = cmd_simulate(two_pulse(7.0, {0, 0, 0}, {0, 0, 0}), o);
  CHECK(zero["fidelity"].get<double>() == doctest::Approx(0.5));

  json doc = {{"qubits", 2}, {"mode", "one-pulse"}, {"V0_over_2pi", 5.0}, {"gamma", 3.0},
              {"pulses", {{"omega", {6.1341, -11.1408, 9.1814}}}}};
  const json five = cmd_simulate(parse_config(doc), o);
  CHECK(std::abs(five["fidelity"].get<double>() - 0.9840) < 0.01);
}

TEST_CASE("outputs are byte-identical across runs") {
  RunConfig c = two_pulse(7.0, {-3.9621, -0.7858, 1.5915}, {1.0942, -1.9068, -2.2182});
  c.noise.trials = 6;
  c.noise.position.sigma_x = 0.5;
  c.steps = 500;
  CommandOptions a, b;
  a.out_dir = scratch("det_a");
  b.out_dir = scratch("det_b");
  b.threads = 3;
  a.grid = b.grid = {0.0, 0.5};
  cmd_scan(c, a);
  cmd_scan(c, b);
  CHECK(slurp(a.out_dir / "scan_sigma_x.csv") == slurp(b.out_dir / "scan_sigma_x.csv"));
  CHECK(slurp(a.out_dir / "scan.json") == slurp(b.out_dir / "scan.json"));
}

TEST_CASE("scan at zero spread equals the deterministic fidelity") {
  RunConfig c = two_pulse(7.0, {-3.9621, -0.7858, 1.5915}, {1.0942, -1.9068, -2.2182});
  CommandOptions o;
  o.out_dir = scratch("scan0");
  o.grid = {0.0};
  c.noise.position = {0.0, 0.0, 0.0};
  const json sim = cmd_simulate(c, o);
  const json scan = cmd_scan(c, o);
  CHECK(scan["points"][0]["mean_fidelity"] == sim["fidelity"]);
  o.axis = "pressure";
  CHECK_THROWS_AS(cmd_scan(c, o), ConfigError);
}

TEST_CASE("optimize") {
  CommandOptions o;
  o.out_dir = scratch("opt");
  SUBCASE("collapsed box") {
    json doc = {{"qubits", 2}, {"mode", "one-pulse"}, {"V0_over_2pi", 7.0},
                {"ga", {{"center", {-0.7619, -15.7833, 8.9923}}, {"half_width", 0.0}}}};
    const json r = cmd_optimize(parse_config(doc), o);
    CHECK(r["evaluations"] == 1);
    CHECK(r["rounds_used"] == 1);
    CHECK(r["best_params"]["omega1"][1].get<double>() == doctest::Approx(-15.7833));
  }
  SUBCASE("self-test") {
    o.selftest = true;
    RunConfig c = parse_config(json::object());
    c.ga.ga.min_box_width = 1e-4;
    const json r = cmd_optimize(c, o);
    CHECK(r["passed"] == true);
  }
}

TEST_CASE("leakage") {
  CommandOptions o;
  o.out_dir = scratch("leak");
  json doc = {{"leakage", {{"distances", {9.76, 7.10}}}}};
  const json r = cmd_leakage(parse_config(doc), o);
  CHECK(r["rows"][0]["E_total"].get<double>() == doctest::Approx(4.3e-4).epsilon(0.25));
  CHECK(r["rows"][1]["E"][3].get<double>() == doctest::Approx(2.6e-4).epsilon(0.1));

  doc["leakage"]["channels"] = {{{"C3_over_2pi", 0.0}, {"delta_over_2pi", 0.71}}};
  const json off = cmd_leakage(parse_config(doc), o);
  CHECK(off["rows"][0]["E_total"] == 0.0);
  CHECK(off["rows"][1]["E"][0] == 0.0);
}

TEST_CASE("format_double is the shortest exact round trip") {
  CHECK(format_double(0.1) == "0.1");
  CHECK(format_double(9.76) == "9.76");
  for (double v : {1.0 / 3.0, 0.1 + 0.2, 6.02214076e23, -4.65e-8}) {
    CHECK(std::stod(format_double(v)) == v);
  }
}
