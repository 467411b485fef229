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

#include "rydgate/pulses.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "rydgate/units.hpp"

namespace rydgate {

PulseWaveform::PulseWaveform(double a0, double a_cos, double a_sin,
                             double duration, double phase)
    : a0_(a0), a_cos_(a_cos), a_sin_(a_sin), duration_(duration), phase_(phase) {
  if (!(duration > 0.0) || !std::isfinite(duration)) {
    throw std::invalid_argument("pulse duration must be positive and finite");
  }
  if (!std::isfinite(a0) || !std::isfinite(a_cos) || !std::isfinite(a_sin) ||
      !std::isfinite(phase)) {
    throw std::invalid_argument("pulse coefficients must be finite");
  }
}

PulseWaveform PulseWaveform::from_mhz(std::array<double, 3> coeffs_mhz,
                                      double duration, double phase) {
  return {mhz_to_angular(coeffs_mhz[0]), mhz_to_angular(coeffs_mhz[1]),
          mhz_to_angular(coeffs_mhz[2]), duration, phase};
}

double PulseWaveform::envelope(double t) const {
  const double x = std::numbers::pi * t / duration_;
  return a0_ + a_cos_ * std::cos(2.0 * x) + a_sin_ * std::sin(x);
}

std::complex<double> PulseWaveform::evaluate(double t, double detuning) const {
  if (!(t >= 0.0 && t <= duration_)) {
    throw std::out_of_range("pulse evaluated at t = " + std::to_string(t) +
                            " outside [0, " + std::to_string(duration_) + "]");
  }
  return envelope(t) * std::polar(1.0, phase_ + detuning * t);
}

double PulseWaveform::peak_to_peak() const {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  const int last = kEnvelopeGridPoints - 1;
  for (int k = 0; k <= last; ++k) {
    const double v = envelope(duration_ * k / last);
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  return hi - lo;
}

double PulseWaveform::amplitude_bound() const {
  return std::abs(a0_) + std::abs(a_cos_) + std::abs(a_sin_);
}

std::string_view to_string(PulseMode mode) {
  return mode == PulseMode::kOnePulse ? "one-pulse" : "two-pulse";
}

PulseMode pulse_mode_from_string(std::string_view name) {
  if (name == "one-pulse") return PulseMode::kOnePulse;
  if (name == "two-pulse") return PulseMode::kTwoPulse;
  throw std::invalid_argument("unknown pulse mode '" + std::string(name) +
                              "' (expected one-pulse or two-pulse)");
}

int parameter_count(PulseMode mode) {
  return mode == PulseMode::kOnePulse ? 3 : 6;
}

PulseSet PulseSet::one_pulse(const PulseWaveform& omega) {
  return {omega, omega, PulseMode::kOnePulse};
}

PulseSet PulseSet::two_pulse(const PulseWaveform& omega1,
                             const PulseWaveform& omega2) {
  if (omega1.duration() != omega2.duration()) {
    throw std::invalid_argument("both pulses must share one gate duration");
  }
  return {omega1, omega2, PulseMode::kTwoPulse};
}

PulseSet PulseSet::from_parameters(std::span<const double> params,
                                   PulseMode mode, double duration) {
  const auto expected = static_cast<std::size_t>(parameter_count(mode));
  if (params.size() != expected) {
    throw std::invalid_argument(std::string(to_string(mode)) + " expects " +
                                std::to_string(expected) + " parameters, got " +
                                std::to_string(params.size()));
  }
  const PulseWaveform first(params[0], params[1], params[2], duration);
  if (mode == PulseMode::kOnePulse) return one_pulse(first);
  return two_pulse(first, PulseWaveform(params[3], params[4], params[5], duration));
}

std::vector<double> PulseSet::parameters() const {
  std::vector<double> p{omega1.a0(), omega1.a_cos(), omega1.a_sin()};
  if (mode == PulseMode::kTwoPulse) {
    p.insert(p.end(), {omega2.a0(), omega2.a_cos(), omega2.a_sin()});
  }
  return p;
}

}  // namespace rydgate
