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

#include <optional>

#include <Eigen/Core>

namespace rydgate {

/// One Monte-Carlo draw of technical noise, held static over the gate.
/// A default-constructed realization is the noise-free gate.
struct NoiseRealization {
  /// Pairwise interactions replacing the system's nominal ones (rad/us).
  std::optional<Eigen::MatrixXd> interactions;
  /// Doppler detunings applied as e^{i Delta t} to omega1 / omega2 (rad/us).
  double detuning1 = 0.0;
  double detuning2 = 0.0;
  /// Constant offsets added to the pulse envelopes (rad/us).
  double offset1 = 0.0;
  double offset2 = 0.0;

  bool is_noise_free() const {
    return !interactions && detuning1 == 0.0 && detuning2 == 0.0 &&
           offset1 == 0.0 && offset2 == 0.0;
  }
};

}  // namespace rydgate
