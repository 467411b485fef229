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
#include <complex>
#include <span>
#include <string_view>
#include <vector>

namespace rydgate {

/// Fourier-shaped Rabi frequency
///
///   Omega(t) = (a0 + a_cos cos(2 pi t / T) + a_sin sin(pi t / T)) e^{i phase}
///
/// Coefficients are angular frequencies (rad/us); negative values encode the
/// pi phase jumps of the optimized pulses. The envelope takes the same value
/// at t = 0 and t = T for every coefficient triple.
class PulseWaveform {
 public:
  static constexpr int kEnvelopeGridPoints = 10001;

  PulseWaveform() = default;
  PulseWaveform(double a0, double a_cos, double a_sin, double duration,
                double phase = 0.0);

  /// From coefficients quoted as Omega/2pi in MHz.
  static PulseWaveform from_mhz(std::array<double, 3> coeffs_mhz,
                                double duration, double phase = 0.0);

  double a0() const { return a0_; }
  double a_cos() const { return a_cos_; }
  double a_sin() const { return a_sin_; }
  double duration() const { return duration_; }
  double phase() const { return phase_; }
  std::array<double, 3> coefficients() const { return {a0_, a_cos_, a_sin_}; }

  /// Real signed envelope. No range check; callers inside the integrator
  /// evaluate at the RK4 stage times only.
  double envelope(double t) const;

  /// Complex Rabi frequency with a static Doppler detuning applied as
  /// e^{i detuning t}. Throws std::out_of_range outside [0, T].
  std::complex<double> evaluate(double t, double detuning = 0.0) const;

  /// max - min of the envelope on a uniform grid over [0, T].
  double peak_to_peak() const;

  /// |a0| + |a_cos| + |a_sin|, an upper bound on |Omega(t)|.
  double amplitude_bound() const;

 private:
  double a0_ = 0.0;
  double a_cos_ = 0.0;
  double a_sin_ = 0.0;
  double duration_ = 1.0;
  double phase_ = 0.0;
};

enum class PulseMode { kOnePulse, kTwoPulse };

std::string_view to_string(PulseMode mode);
PulseMode pulse_mode_from_string(std::string_view name);

/// Number of free Fourier coefficients for a scheme: 3 or 6.
int parameter_count(PulseMode mode);

/// omega1 drives |0> <-> |r> on every atom; omega2 drives |1> <-> |r> on the
/// target only. In the one-pulse scheme both roles are played by one waveform.
struct PulseSet {
  PulseWaveform omega1;
  PulseWaveform omega2;
  PulseMode mode = PulseMode::kTwoPulse;

  static PulseSet one_pulse(const PulseWaveform& omega);
  static PulseSet two_pulse(const PulseWaveform& omega1,
                            const PulseWaveform& omega2);

  /// Builds the set from a flat parameter vector (rad/us): 3 values for
  /// one-pulse, 6 (omega1 then omega2) for two-pulse.
  static PulseSet from_parameters(std::span<const double> params,
                                  PulseMode mode, double duration);
  std::vector<double> parameters() const;

  double duration() const { return omega1.duration(); }
};

}  // namespace rydgate
