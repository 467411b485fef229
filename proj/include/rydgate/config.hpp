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

#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "rydgate/fidelity.hpp"
#include "rydgate/ga.hpp"
#include "rydgate/leakage.hpp"
#include "rydgate/model.hpp"
#include "rydgate/noise.hpp"
#include "rydgate/pulses.hpp"

namespace rydgate {

/// A run described in laboratory units: frequencies as X/2pi in MHz, decay
/// rates in kHz, times in us, distances in um, C6/2pi in GHz um^6 and
/// temperatures in uK. Conversion to internal units happens in the accessors.
struct RunConfig {
  int qubits = 2;
  PulseMode mode = PulseMode::kTwoPulse;
  std::optional<double> v0_mhz;  // V0/2pi
  std::optional<double> r0_um;
  double c6_ghz = constants::kC6Over2PiGHz;
  double gamma_khz = 3.0;
  double tg_us = 1.0;
  int steps = PropagationConfig::kDefaultSteps;
  double max_phase_per_step = PropagationConfig{}.max_phase_per_step;
  double max_drive_phase_per_step = PropagationConfig{}.max_drive_phase_per_step;
  std::optional<std::array<double, 3>> omega1_mhz;
  std::optional<std::array<double, 3>> omega2_mhz;
  double phase1 = 0.0;
  double phase2 = 0.0;
  MetricMode metric = MetricMode::kUhlmann;
  std::uint64_t seed = 1;
  int trajectory_stride = 40;

  struct Noise {
    PositionNoise position{0.0, 0.27, 0.27};
    double ta_uk = 0.0;
    double delta_omega = 0.0;
    int trials = 500;
  } noise;

  struct Scan {
    std::string axis = "sigma_x";
    std::vector<double> grid;  // empty: the axis default
  } scan;

  struct GA {
    GAConfig ga;
    std::optional<std::vector<double>> center_mhz;
    double half_width_mhz = 20.0;
    std::optional<std::vector<double>> lo_mhz;
    std::optional<std::vector<double>> hi_mhz;
    int eval_steps = 1500;  // RK4 steps per fitness call during the search
  } ga;

  struct Leakage {
    std::vector<double> distances{9.76, 7.10, 4.89};
    double window_us = kDefaultLeakageWindow;
    std::vector<std::array<double, 2>> channels_ghz{
        {7.94, 0.71}, {6.37, 1.01}, {6.59, 0.99}, {5.28, 1.29}};
  } leakage;

  double c6() const;        // rad/us um^6
  double v0() const;        // rad/us
  double gamma() const;     // 1/us
  GateSystem system() const;
  bool has_pulses() const { return omega1_mhz.has_value(); }
  PulseSet pulses() const;  // ConfigError when no coefficients were given
  Scenario scenario() const;
  NoiseModel noise_model() const;
  SearchSpace search_space() const;
  std::vector<LeakageChannel> leakage_channels() const;

  /// Throws ConfigError naming the offending field.
  void validate() const;
};

/// Parses a config document. Unknown keys and wrong types are rejected with a
/// ConfigError naming the field.
RunConfig parse_config(const nlohmann::json& doc);
RunConfig load_config(const std::filesystem::path& path);

/// Fully resolved config (defaults filled) for provenance echoes.
nlohmann::json to_json(const RunConfig& cfg);

}  // namespace rydgate
