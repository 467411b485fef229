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

#include "rydgate/config.hpp"

#include <cmath>
#include <fstream>
#include <set>

#include "rydgate/units.hpp"

namespace rydgate {

using nlohmann::json;

namespace {

constexpr double kDefaultTg2 = 1.0;
constexpr double kDefaultTg3 = 1.2;

// Walks one JSON object, remembering which keys were read so leftovers can be
// reported as typos.
class Section {
 public:
  Section(const json& obj, std::string path) : obj_(obj), path_(std::move(path)) {
    if (!obj_.is_object()) fail("", "expected an object");
  }

  [[noreturn]] void fail(const std::string& key, const std::string& what) const {
    throw ConfigError("config field '" + name(key) + "': " + what);
  }

  std::string name(const std::string& key) const {
    if (key.empty()) return path_.empty() ? "<root>" : path_;
    return path_.empty() ? key : path_ + "." + key;
  }

  const json* find(const std::string& key) {
    seen_.insert(key);
    auto it = obj_.find(key);
    return it == obj_.end() || it->is_null() ? nullptr : &*it;
  }

  bool has(const std::string& key) const {
    auto it = obj_.find(key);
    return it != obj_.end() && !it->is_null();
  }

  void number(const std::string& key, double& out) {
    if (const json* v = find(key)) out = as_number(key, *v);
  }

  std::optional<double> optional_number(const std::string& key) {
    if (const json* v = find(key)) return as_number(key, *v);
    return std::nullopt;
  }

  void integer(const std::string& key, int& out) {
    if (const json* v = find(key)) {
      if (!v->is_number_integer()) fail(key, "expected an integer");
      const auto i = v->get<long long>();
      if (i < INT32_MIN || i > INT32_MAX) fail(key, "integer out of range");
      out = static_cast<int>(i);
    }
  }

  void unsigned64(const std::string& key, std::uint64_t& out) {
    if (const json* v = find(key)) {
      if (!v->is_number_unsigned()) fail(key, "expected a non-negative integer");
      out = v->get<std::uint64_t>();
    }
  }

  void string(const std::string& key, std::string& out) {
    if (const json* v = find(key)) {
      if (!v->is_string()) fail(key, "expected a string");
      out = v->get<std::string>();
    }
  }

  std::optional<std::vector<double>> numbers(const std::string& key) {
    const json* v = find(key);
    if (!v) return std::nullopt;
    if (!v->is_array()) fail(key, "expected an array of numbers");
    std::vector<double> out;
    for (const json& e : *v) out.push_back(as_number(key, e));
    return out;
  }

  std::optional<std::array<double, 3>> triple(const std::string& key) {
    auto v = numbers(key);
    if (!v) return std::nullopt;
    if (v->size() != 3) fail(key, "expected exactly 3 coefficients [a0, a_cos, a_sin]");
    return std::array<double, 3>{(*v)[0], (*v)[1], (*v)[2]};
  }

  std::optional<Section> child(const std::string& key) {
    const json* v = find(key);
    if (!v) return std::nullopt;
    return Section(*v, name(key));
  }

  void finish() const {
    for (auto it = obj_.begin(); it != obj_.end(); ++it) {
      if (!seen_.count(it.key())) fail(it.key(), "unknown key");
    }
  }

 private:
  double as_number(const std::string& key, const json& v) const {
    if (!v.is_number()) fail(key, "expected a number");
    const double d = v.get<double>();
    if (!std::isfinite(d)) fail(key, "expected a finite number");
    return d;
  }

  const json& obj_;
  std::string path_;
  std::set<std::string> seen_;
};

[[noreturn]] void config_fail(const std::string& field, const std::string& what) {
  throw ConfigError("config field '" + field + "': " + what);
}

std::vector<double> mhz_list(const std::vector<double>& v) {
  std::vector<double> out;
  for (double x : v) out.push_back(mhz_to_angular(x));
  return out;
}

}  // namespace

double RunConfig::c6() const { return mhz_to_angular(c6_ghz * 1e3); }

double RunConfig::v0() const {
  if (v0_mhz) return mhz_to_angular(*v0_mhz);
  if (r0_um) return interaction_at(c6(), *r0_um);
  config_fail("V0_over_2pi", "one of V0_over_2pi or r0 is required");
}

double RunConfig::gamma() const { return khz_to_rate(gamma_khz); }

GateSystem RunConfig::system() const { return GateSystem::make(qubits, v0(), gamma(), c6()); }

PulseSet RunConfig::pulses() const {
  if (!omega1_mhz) config_fail("pulses.omega1", "pulse coefficients are required");
  const PulseWaveform w1 = PulseWaveform::from_mhz(*omega1_mhz, tg_us, phase1);
  if (mode == PulseMode::kOnePulse) return PulseSet::one_pulse(w1);
  if (!omega2_mhz) config_fail("pulses.omega2", "required in two-pulse mode");
  return PulseSet::two_pulse(w1, PulseWaveform::from_mhz(*omega2_mhz, tg_us, phase2));
}

Scenario RunConfig::scenario() const {
  Scenario s;
  s.system = system();
  s.mode = mode;
  s.duration = tg_us;
  s.propagation.steps = steps;
  s.propagation.max_phase_per_step = max_phase_per_step;
  s.propagation.max_drive_phase_per_step = max_drive_phase_per_step;
  s.metric = metric;
  return s;
}

NoiseModel RunConfig::noise_model() const {
  NoiseModel m;
  m.position = noise.position;
  m.doppler.temperature_uk = noise.ta_uk;
  m.amplitude.delta_rel = noise.delta_omega;
  return m;
}

SearchSpace RunConfig::search_space() const {
  const int n = parameter_count(mode);
  SearchSpace s;
  if (ga.lo_mhz || ga.hi_mhz) {
    if (!ga.lo_mhz || !ga.hi_mhz) config_fail("ga.lo", "ga.lo and ga.hi go together");
    s.lo = mhz_list(*ga.lo_mhz);
    s.hi = mhz_list(*ga.hi_mhz);
  } else {
    std::vector<double> center(n, 0.0);
    if (ga.center_mhz) center = *ga.center_mhz;
    if (static_cast<int>(center.size()) != n) {
      config_fail("ga.center", "expected " + std::to_string(n) + " values");
    }
    s = SearchSpace::around(mhz_list(center), mhz_to_angular(ga.half_width_mhz));
  }
  if (s.size() != n) config_fail("ga.lo", "expected " + std::to_string(n) + " values");
  try {
    s.validate();
  } catch (const std::invalid_argument& e) {
    config_fail("ga", e.what());
  }
  return s;
}

std::vector<LeakageChannel> RunConfig::leakage_channels() const {
  std::vector<LeakageChannel> out;
  for (const auto& [c3, defect] : leakage.channels_ghz) {
    LeakageChannel c{mhz_to_angular(c3 * 1e3), mhz_to_angular(defect * 1e3)};
    try {
      c.validate();
    } catch (const std::invalid_argument& e) {
      config_fail("leakage.channels", e.what());
    }
    out.push_back(c);
  }
  return out;
}

void RunConfig::validate() const {
  if (qubits != 2 && qubits != 3) config_fail("qubits", "must be 2 or 3");
  if (v0_mhz && r0_um) config_fail("r0", "give either V0_over_2pi or r0, not both");
  if (v0_mhz && !(*v0_mhz > 0.0)) config_fail("V0_over_2pi", "must be > 0");
  if (r0_um && !(*r0_um > 0.0)) config_fail("r0", "must be > 0");
  if (!(c6_ghz > 0.0)) config_fail("C6_over_2pi", "must be > 0");
  if (!(gamma_khz >= 0.0)) config_fail("gamma", "must be >= 0");
  if (!(tg_us > 0.0)) config_fail("Tg", "must be > 0");
  if (steps < 1) config_fail("steps", "must be >= 1");
  if (!(max_phase_per_step > 0.0)) config_fail("max_phase_per_step", "must be > 0");
  if (!(max_drive_phase_per_step > 0.0)) {
    config_fail("max_drive_phase_per_step", "must be > 0");
  }
  if (trajectory_stride < 1) config_fail("trajectory_stride", "must be >= 1");
  if (mode == PulseMode::kOnePulse && omega2_mhz && omega1_mhz && *omega2_mhz != *omega1_mhz) {
    config_fail("pulses.omega2", "one-pulse mode uses a single waveform; omit omega2");
  }
  if (mode == PulseMode::kOnePulse && phase2 != phase1) {
    config_fail("pulses.phase2", "one-pulse mode uses a single waveform");
  }
  if (omega1_mhz && mode == PulseMode::kTwoPulse && !omega2_mhz) {
    config_fail("pulses.omega2", "required in two-pulse mode");
  }
  try {
    noise_model().validate();
  } catch (const std::invalid_argument& e) {
    config_fail("noise", e.what());
  }
  if (noise.delta_omega > 0.05) config_fail("noise.delta_omega", "must be in [0, 0.05]");
  if (noise.trials < 1) config_fail("noise.trials", "must be >= 1");
  static const std::set<std::string> axes{"sigma_x", "Ta", "delta_omega", "gamma"};
  if (!axes.count(scan.axis)) {
    config_fail("scan.axis", "unknown axis '" + scan.axis +
                                 "' (expected sigma_x, Ta, delta_omega or gamma)");
  }
  for (double g : scan.grid) {
    if (!(g >= 0.0)) config_fail("scan.grid", "values must be >= 0");
    if (scan.axis == "delta_omega" && g > 0.05) config_fail("scan.grid", "delta_omega must be <= 0.05");
  }
  try {
    GAConfig g = ga.ga;
    g.validate();
  } catch (const std::invalid_argument& e) {
    config_fail("ga", e.what());
  }
  if (!(ga.half_width_mhz >= 0.0)) config_fail("ga.half_width", "must be >= 0");
  if (ga.eval_steps < 1) config_fail("ga.eval_steps", "must be >= 1");
  for (double r : leakage.distances) {
    if (!(r > 0.0)) config_fail("leakage.distances", "must be > 0");
  }
  if (!(leakage.window_us > 0.0)) config_fail("leakage.window", "must be > 0");
  leakage_channels();
  try {
    if (v0_mhz || r0_um) system();
    if (has_pulses()) pulses();
  } catch (const ConfigError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    config_fail("<root>", e.what());
  }
}

RunConfig parse_config(const json& doc) {
  RunConfig c;
  Section root(doc, "");
  root.integer("qubits", c.qubits);
  if (c.qubits != 2 && c.qubits != 3) root.fail("qubits", "must be 2 or 3");
  c.tg_us = c.qubits == 3 ? kDefaultTg3 : kDefaultTg2;

  std::string mode = std::string(to_string(c.mode));
  root.string("mode", mode);
  try {
    c.mode = pulse_mode_from_string(mode);
  } catch (const std::invalid_argument& e) {
    root.fail("mode", e.what());
  }
  c.v0_mhz = root.optional_number("V0_over_2pi");
  c.r0_um = root.optional_number("r0");
  root.number("C6_over_2pi", c.c6_ghz);
  root.number("gamma", c.gamma_khz);
  root.number("Tg", c.tg_us);
  root.integer("steps", c.steps);
  root.number("max_phase_per_step", c.max_phase_per_step);
  root.number("max_drive_phase_per_step", c.max_drive_phase_per_step);
  root.integer("trajectory_stride", c.trajectory_stride);
  root.unsigned64("seed", c.seed);
  std::string metric = std::string(to_string(c.metric));
  root.string("metric", metric);
  try {
    c.metric = metric_mode_from_string(metric);
  } catch (const std::invalid_argument& e) {
    root.fail("metric", e.what());
  }

  if (auto p = root.child("pulses")) {
    c.omega1_mhz = p->triple("omega1");
    if (auto shared = p->triple("omega")) {
      if (c.omega1_mhz) p->fail("omega", "give either omega or omega1");
      c.omega1_mhz = shared;
    }
    c.omega2_mhz = p->triple("omega2");
    p->number("phase1", c.phase1);
    p->number("phase2", c.phase2);
    if (c.mode == PulseMode::kOnePulse && !p->has("phase2")) c.phase2 = c.phase1;
    p->finish();
  }

  if (auto n = root.child("noise")) {
    n->number("sigma_x", c.noise.position.sigma_x);
    n->number("sigma_y", c.noise.position.sigma_y);
    n->number("sigma_z", c.noise.position.sigma_z);
    n->number("Ta", c.noise.ta_uk);
    n->number("delta_omega", c.noise.delta_omega);
    n->integer("trials", c.noise.trials);
    n->finish();
  }

  if (auto s = root.child("scan")) {
    s->string("axis", c.scan.axis);
    if (auto g = s->numbers("grid")) c.scan.grid = *g;
    s->finish();
  }

  if (auto g = root.child("ga")) {
    GAConfig& ga = c.ga.ga;
    g->integer("population", ga.population);
    g->integer("generations", ga.generations);
    g->integer("elite_count", ga.elite_count);
    g->number("crossover_prob", ga.crossover_prob);
    g->number("mutation_prob", ga.mutation_prob);
    g->number("mutation_scale", ga.mutation_scale);
    g->integer("tournament_size", ga.tournament_size);
    g->integer("max_rounds", ga.max_rounds);
    g->number("stop_tol", ga.stop_tol);
    g->number("shrink_factor", ga.shrink_factor);
    double min_width_mhz = angular_to_mhz(ga.min_box_width);
    g->number("min_box_width", min_width_mhz);
    ga.min_box_width = mhz_to_angular(min_width_mhz);
    c.ga.center_mhz = g->numbers("center");
    g->number("half_width", c.ga.half_width_mhz);
    c.ga.lo_mhz = g->numbers("lo");
    c.ga.hi_mhz = g->numbers("hi");
    g->integer("eval_steps", c.ga.eval_steps);
    g->finish();
  }

  if (auto l = root.child("leakage")) {
    if (auto d = l->numbers("distances")) c.leakage.distances = *d;
    l->number("window", c.leakage.window_us);
    if (const json* ch = l->find("channels")) {
      if (!ch->is_array()) l->fail("channels", "expected an array of channel objects");
      c.leakage.channels_ghz.clear();
      for (std::size_t i = 0; i < ch->size(); ++i) {
        Section cs((*ch)[i], l->name("channels") + "[" + std::to_string(i) + "]");
        std::array<double, 2> v{0.0, 0.0};
        if (!cs.has("C3_over_2pi")) cs.fail("C3_over_2pi", "required");
        if (!cs.has("delta_over_2pi")) cs.fail("delta_over_2pi", "required");
        cs.number("C3_over_2pi", v[0]);
        cs.number("delta_over_2pi", v[1]);
        cs.finish();
        c.leakage.channels_ghz.push_back(v);
      }
    }
    l->finish();
  }

  root.finish();
  c.ga.ga.seed = c.seed;
  c.validate();
  return c;
}

RunConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path.string() + "'");
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ConfigError("config file '" + path.string() + "' is not valid JSON: " + e.what());
  }
  return parse_config(doc);
}

json to_json(const RunConfig& c) {
  json j;
  j["qubits"] = c.qubits;
  j["mode"] = std::string(to_string(c.mode));
  if (c.v0_mhz) j["V0_over_2pi"] = *c.v0_mhz;
  if (c.r0_um) j["r0"] = *c.r0_um;
  j["C6_over_2pi"] = c.c6_ghz;
  j["gamma"] = c.gamma_khz;
  j["Tg"] = c.tg_us;
  j["steps"] = c.steps;
  j["max_phase_per_step"] = c.max_phase_per_step;
  j["max_drive_phase_per_step"] = c.max_drive_phase_per_step;
  j["trajectory_stride"] = c.trajectory_stride;
  j["seed"] = c.seed;
  j["metric"] = std::string(to_string(c.metric));
  if (c.omega1_mhz) {
    json p;
    p["omega1"] = *c.omega1_mhz;
    if (c.mode == PulseMode::kTwoPulse && c.omega2_mhz) p["omega2"] = *c.omega2_mhz;
    p["phase1"] = c.phase1;
    p["phase2"] = c.phase2;
    j["pulses"] = p;
  }
  j["noise"] = {{"sigma_x", c.noise.position.sigma_x},
                {"sigma_y", c.noise.position.sigma_y},
                {"sigma_z", c.noise.position.sigma_z},
                {"Ta", c.noise.ta_uk},
                {"delta_omega", c.noise.delta_omega},
                {"trials", c.noise.trials}};
  j["scan"] = {{"axis", c.scan.axis}, {"grid", c.scan.grid}};
  const GAConfig& g = c.ga.ga;
  json ga = {{"population", g.population},
             {"generations", g.generations},
             {"elite_count", g.elite_count},
             {"crossover_prob", g.crossover_prob},
             {"mutation_prob", g.mutation_prob},
             {"mutation_scale", g.mutation_scale},
             {"tournament_size", g.tournament_size},
             {"max_rounds", g.max_rounds},
             {"stop_tol", g.stop_tol},
             {"shrink_factor", g.shrink_factor},
             {"min_box_width", angular_to_mhz(g.min_box_width)},
             {"half_width", c.ga.half_width_mhz},
             {"eval_steps", c.ga.eval_steps}};
  if (c.ga.center_mhz) ga["center"] = *c.ga.center_mhz;
  if (c.ga.lo_mhz) ga["lo"] = *c.ga.lo_mhz;
  if (c.ga.hi_mhz) ga["hi"] = *c.ga.hi_mhz;
  j["ga"] = ga;
  json channels = json::array();
  for (const auto& [c3, d] : c.leakage.channels_ghz) {
    channels.push_back({{"C3_over_2pi", c3}, {"delta_over_2pi", d}});
  }
  j["leakage"] = {{"distances", c.leakage.distances},
                  {"window", c.leakage.window_us},
                  {"channels", channels}};
  return j;
}

}  // namespace rydgate
