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

#include <numbers>
#include <stdexcept>
#include <string>

// Internal unit system: time in microseconds, angular frequency in rad/us,
// rates in 1/us, distances in micrometres. Everything quoted as "X/2pi in MHz"
// is converted exactly once, at the boundary.
namespace rydgate {

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Converts a frequency quoted as X/2pi in MHz to rad/us.
constexpr double mhz_to_angular(double mhz) { return kTwoPi * mhz; }
constexpr double angular_to_mhz(double angular) { return angular / kTwoPi; }

/// Decay rates are plain rates: 3 kHz -> 0.003 / us.
constexpr double khz_to_rate(double khz) { return khz * 1e-3; }
constexpr double rate_to_khz(double rate) { return rate * 1e3; }

namespace constants {
inline constexpr double kBoltzmann = 1.380649e-23;    // J/K
inline constexpr double kRb87Mass = 1.44316e-25;      // kg
inline constexpr double kEffectiveWaveNumber = 5e6;   // 1/m
inline constexpr double kC6Over2PiGHz = 863.0;        // GHz um^6, |70S;70S>
inline constexpr double kDefaultC6 = kTwoPi * kC6Over2PiGHz * 1e3;  // rad/us um^6
}  // namespace constants

/// Malformed user input (maps to CLI exit code 2).
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Integration produced a non-finite state or violated a conservation check
/// (maps to CLI exit code 3).
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace rydgate
