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

// Published optimized pulse sets (coefficients as Omega/2pi in MHz) and the
// fidelities reported for them at gamma = 3 kHz, T = 1 us.

#pragma once

#include <array>
#include <vector>

#include "rydgate/ga.hpp"
#include "rydgate/model.hpp"
#include "rydgate/pulses.hpp"
#include "rydgate/units.hpp"

namespace rydgate::testing {

using Coeffs = std::array<double, 3>;

struct OnePulseRow {
  double v0_mhz;
  Coeffs omega;
  double fidelity;
};

struct TwoPulseRow {
  double v0_mhz;
  Coeffs omega1;
  Coeffs omega2;
  double fidelity;
};

inline const std::vector<OnePulseRow>& one_pulse_rows() {
  static const std::vector<OnePulseRow> rows{
      {1.0, {-5.8283, -5.5942, 1.3558}, 0.9935},
      {2.0, {-8.0524, -2.3823, -6.2005}, 0.9938},
      {3.0, {-0.8549, -15.0568, 4.5848}, 0.9783},
      {4.0, {-2.6977, -15.8330, 7.5137}, 0.9810},
      {5.0, {6.1341, -11.1408, 9.1814}, 0.9840},
      {6.0, {-0.5748, -15.1009, 8.7235}, 0.9899},
      {7.0, {-0.7619, -15.7833, 8.9923}, 0.9923},
  };
  return rows;
}

inline const std::vector<TwoPulseRow>& two_pulse_rows() {
  static const std::vector<TwoPulseRow> rows{
      {1.0, {-0.9549, -1.9544, -0.0631}, {-2.8310, -3.6488, 0.0074}, 0.9951},
      {2.0, {-3.2197, -1.6527, -4.3272}, {-5.5704, 0.5088, -5.5704}, 0.9897},
      {3.0, {-6.4985, 7.2516, 0.2753}, {-0.0947, -3.0809, 0.5679}, 0.9752},
      {4.0, {1.6474, -2.2875, 1.2089}, {0.5896, 1.7279, 0.0084}, 0.9723},
      {5.0, {-1.4798, -1.0744, -4.0572}, {-1.2613, 4.4488, 5.7295}, 0.9804},
      {6.0, {-1.4115, -2.2769, -2.3879}, {0.5608, -1.6526, -1.5915}, 0.9834},
      {7.0, {-3.9621, -0.7858, 1.5915}, {1.0942, -1.9068, -2.2182}, 0.9921},
  };
  return rows;
}

inline constexpr double kReferenceGammaKhz = 3.0;
inline constexpr double kReferenceDuration = 1.0;

inline const TwoPulseRow& two_pulse_v7() { return two_pulse_rows()[6]; }
inline const TwoPulseRow& two_pulse_v1() { return two_pulse_rows()[0]; }

inline PulseSet pulses_of(const OnePulseRow& r, double duration = kReferenceDuration) {
  return PulseSet::one_pulse(PulseWaveform::from_mhz(r.omega, duration));
}

inline PulseSet pulses_of(const TwoPulseRow& r, double duration = kReferenceDuration) {
  return PulseSet::two_pulse(PulseWaveform::from_mhz(r.omega1, duration),
                             PulseWaveform::from_mhz(r.omega2, duration));
}

inline GateSystem system_at(double v0_mhz, double gamma_khz = kReferenceGammaKhz, int atoms = 2) {
  return GateSystem::make(atoms, mhz_to_angular(v0_mhz), khz_to_rate(gamma_khz));
}

inline Scenario scenario_at(double v0_mhz, PulseMode mode, double gamma_khz = kReferenceGammaKhz,
                            int steps = PropagationConfig::kDefaultSteps) {
  Scenario s;
  s.system = system_at(v0_mhz, gamma_khz);
  s.mode = mode;
  s.duration = kReferenceDuration;
  s.propagation.steps = steps;
  return s;
}

}  // namespace rydgate::testing
