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
#include <functional>
#include <span>
#include <vector>

#include "rydgate/model.hpp"
#include "rydgate/noise_realization.hpp"
#include "rydgate/pulses.hpp"
#include "rydgate/qops.hpp"

namespace rydgate {

struct PropagationConfig {
  static constexpr int kDefaultSteps = 4000;

  /// RK4 steps per gate (dt = T / steps).
  int steps = kDefaultSteps;
  bool hermitize_every_step = true;
  /// Record populations every `record_stride` steps; 0 disables recording.
  int record_stride = 0;
  /// Upper bound on |H| dt. When a sampled interaction makes the generator
  /// stiffer than this, the step count is raised to keep RK4 stable.
  double max_phase_per_step = 0.5;
  /// Upper bound on the drive part of |H| dt alone. This one is about
  /// accuracy rather than stability: strong pulses need a finer grid for the
  /// closed-system purity to stay within 1e-7.
  double max_drive_phase_per_step = 0.03;

  void validate() const;
};

/// Channel amplitudes Omega1(t), Omega2(t) including a noise realization's
/// static detunings and envelope offsets.
class DriveSchedule {
 public:
  DriveSchedule(const PulseSet& pulses, const NoiseRealization& noise);

  std::array<Complex, kDriveChannels> at(double t) const;
  double duration() const { return pulses_.duration(); }
  double amplitude_bound(int channel) const;

 private:
  PulseSet pulses_;
  double detuning_[kDriveChannels];
  double offset_[kDriveChannels];
};

struct TrajectorySample {
  double t = 0.0;
  std::vector<double> populations;  // indexed by basis_index over 3^n
};

struct PropagationResult {
  DensityMatrix final_state;
  std::vector<TrajectorySample> trajectory;
  int steps_taken = 0;
};

/// Result of integrating a (possibly reduced) Lindblad model.
struct ModelEvolution {
  Operator rho;  // in the model's local basis
  std::vector<TrajectorySample> trajectory;
  int steps_taken = 0;
};

/// Step count actually used: the configured count, raised if needed so that
/// |H| dt stays below cfg.max_phase_per_step and the drive part below
/// cfg.max_drive_phase_per_step.
int resolve_steps(const LindbladModel& model, const DriveSchedule& drive,
                  const PropagationConfig& cfg);

/// Fixed-step RK4 on drho/dt = -i[H, rho] + sum_j D[L_j] rho.
/// Throws NumericalError on non-finite entries or |Tr rho - 1| >= 1e-8.
ModelEvolution evolve_model(const LindbladModel& model, const DriveSchedule& drive,
                            const Operator& rho0, const PropagationConfig& cfg);

/// Full 3^n master-equation evolution over [0, T_g]. The final state must be
/// positive to within -1e-4; anything worse is a NumericalError.
PropagationResult propagate(const GateSystem& sys, const PulseSet& pulses,
                            const DensityMatrix& rho0,
                            const PropagationConfig& cfg = {},
                            const NoiseRealization& noise = {});

struct PureConfig {
  /// RK4 steps over [0, T]; 0 picks enough steps that |H| dt <= 0.005.
  int steps = 0;
  int record_stride = 1;
};

struct PureTrajectory {
  std::vector<double> times;
  std::vector<StateVector> states;
};

using PureObserver = std::function<void(double t, const StateVector& psi)>;

/// RK4 on dpsi/dt = -i H psi for a constant Hermitian H. The observer sees
/// every grid point including t = 0 and t = T. Throws NumericalError when the
/// norm drifts by 1e-8 or more.
StateVector propagate_pure(const Operator& h, const StateVector& psi0, double duration,
                           const PureConfig& cfg, const PureObserver& observer);

PureTrajectory propagate_pure(const Operator& h, const StateVector& psi0,
                              double duration, const PureConfig& cfg = {});

}  // namespace rydgate
