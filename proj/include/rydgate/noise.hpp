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

#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include <Eigen/Core>

#include "rydgate/ga.hpp"
#include "rydgate/model.hpp"
#include "rydgate/noise_realization.hpp"
#include "rydgate/pulses.hpp"

namespace rydgate {

using Rng = std::mt19937_64;

/// Independent stream for trial `index` of a run seeded with `seed`.
Rng trial_rng(std::uint64_t seed, std::uint64_t index);

/// Gaussian spread of the atom positions, um. For two atoms the relative
/// coordinate is drawn directly: x ~ N(r0, sigma_x), y ~ N(0, sigma_y),
/// z ~ N(0, sigma_z).
struct PositionNoise {
  double sigma_x = 0.0;
  double sigma_y = 0.27;
  double sigma_z = 0.27;

  bool active() const { return sigma_x > 0.0 || sigma_y > 0.0 || sigma_z > 0.0; }
  void validate() const;
};

/// Thermal velocity spread at temperature Ta (uK) seen as a static two-photon
/// detuning.
struct DopplerNoise {
  double temperature_uk = 0.0;

  bool active() const { return temperature_uk > 0.0; }
  void validate() const;
};

/// Constant envelope offset drawn uniformly from [-dOmega, dOmega] with
/// dOmega = 0.5 * peak_to_peak * delta_rel.
struct AmplitudeNoise {
  double delta_rel = 0.0;

  bool active() const { return delta_rel > 0.0; }
  void validate() const;
};

struct NoiseModel {
  PositionNoise position{0.0, 0.0, 0.0};
  DopplerNoise doppler;
  AmplitudeNoise amplitude;

  bool active() const { return position.active() || doppler.active() || amplitude.active(); }
  void validate() const;
};

/// Closest allowed pair distance; closer draws are rejected and redrawn.
inline constexpr double kMinPairDistance = 0.5;  // um

/// One draw of the pairwise interaction matrix for `sys` (nominal spacing
/// sys.r0). Three-atom lines displace each atom independently by
/// sigma / sqrt(2) per axis, so every nearest-neighbour pair sees the same
/// relative spread as the two-atom case.
Eigen::MatrixXd sample_interaction(const PositionNoise& pos, const GateSystem& sys, Rng& rng);

/// sigma_Delta = k sqrt(kB Ta / M) in rad/us. The number equals the
/// "MHz" figure k v * 1e-6 s that is usually quoted.
double doppler_sigma(double temperature_uk);

/// Complete realization for one trial. The one-pulse scheme shares one
/// detuning and one amplitude offset between the two drive roles; the
/// two-pulse scheme draws them independently per pulse.
NoiseRealization draw_realization(const NoiseModel& model, const GateSystem& sys,
                                  const PulseSet& pulses, Rng& rng);

struct MonteCarloResult {
  double mean = 0.0;
  double std_error = 0.0;
  int trials = 0;
  std::uint64_t seed = 0;
  std::vector<double> samples;  // per trial, in trial order
};

/// Mean fidelity over `trials` independent realizations. Each trial uses
/// trial_rng(seed, i), so the result does not depend on `threads`. With every
/// noise source off the deterministic fidelity is returned unchanged.
MonteCarloResult average_fidelity(const Scenario& scenario, const PulseSet& pulses,
                                  const NoiseModel& model, int trials, std::uint64_t seed,
                                  int threads = 1);

struct ScanPoint {
  double value = 0.0;          // grid value in the scan's input unit
  double mean_fidelity = 0.0;
  double std_error = 0.0;
  double error = 0.0;          // scan-specific error measure, see each scan
  int trials = 0;
  std::uint64_t seed = 0;
};

/// sigma_x grid (um) with sigma_y, sigma_z from `base`; error = 1 - mean F.
std::vector<ScanPoint> sigma_scan(const Scenario& scenario, const PulseSet& pulses,
                                  const PositionNoise& base, std::span<const double> sigma_x,
                                  int trials, std::uint64_t seed, int threads = 1);

/// Ta grid (uK); error = F(0) - mean F(Ta).
std::vector<ScanPoint> doppler_scan(const Scenario& scenario, const PulseSet& pulses,
                                    std::span<const double> temperatures_uk, int trials,
                                    std::uint64_t seed, int threads = 1);

/// delta_rel grid; error = F(0) - mean F(delta_rel).
std::vector<ScanPoint> amplitude_scan(const Scenario& scenario, const PulseSet& pulses,
                                      std::span<const double> delta_rel, int trials,
                                      std::uint64_t seed, int threads = 1);

struct DecayScan {
  std::vector<ScanPoint> points;  // value = gamma in kHz; error = E_sp
  double baseline_fidelity = 0.0; // F at gamma = 0
  double slope = 0.0;             // E_sp per kHz
  double intercept = 0.0;
  double r_squared = 0.0;
};

/// E_sp(gamma) = [1 - F(gamma)] - [1 - F(0)] with an ordinary least-squares
/// line through the points. Deterministic; gammas in kHz.
DecayScan decay_scan(const Scenario& scenario, const PulseSet& pulses,
                     std::span<const double> gammas_khz, int threads = 1);

struct LinearFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r_squared = 0.0;
};

LinearFit fit_line(std::span<const double> x, std::span<const double> y);

}  // namespace rydgate
