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

#include <span>
#include <vector>

namespace rydgate {

/// Non-resonant dipole-dipole coupling of |rr> to one nearby pair state.
struct LeakageChannel {
  double c3 = 0.0;     // rad/us um^3
  double defect = 0.0; // Foerster defect delta, rad/us

  /// From C3/2pi in GHz um^3 and delta/2pi in GHz.
  static LeakageChannel from_ghz(double c3_ghz, double defect_ghz);

  double coupling(double r0) const;  // B = C3 / r0^3
  void validate() const;
};

/// The four |70S 70S> channels used by default.
std::vector<LeakageChannel> default_leakage_channels();

inline constexpr double kDefaultLeakageWindow = 1.0;  // us

/// Time-averaged population of |p> over [0, T] for
/// H = B (|rr><p| + |p><rr|) + delta |p><p|, starting in |rr>.
double single_channel_leakage(double coupling, double defect, double window);

/// Closed-form long-time average of the same quantity: 2B^2 / (4B^2 + delta^2).
double leakage_oracle(double coupling, double defect);

/// Time-averaged 1 - P_rr with every channel coupled at once (a star of
/// dimension 1 + channels).
double total_leakage(std::span<const LeakageChannel> channels, double r0, double window);

struct LeakageRow {
  double r0 = 0.0;
  std::vector<double> coupling;  // B_j, rad/us
  std::vector<double> single;    // E_j
  std::vector<double> oracle;    // analytic E_j
  double total = 0.0;            // E-bar
};

std::vector<LeakageRow> leakage_table(std::span<const LeakageChannel> channels,
                                      std::span<const double> distances, double window,
                                      int threads = 1);

}  // namespace rydgate
