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

#include <string_view>
#include <vector>

#include "rydgate/model.hpp"
#include "rydgate/noise_realization.hpp"
#include "rydgate/propagator.hpp"
#include "rydgate/pulses.hpp"
#include "rydgate/qops.hpp"

namespace rydgate {

enum class GateKind { kCnot, kToffoli };

/// Permutation target on the computational subspace: the target qubit flips
/// iff every control is |1>.
class TargetGate {
 public:
  static TargetGate cnot();
  static TargetGate toffoli();
  static TargetGate for_atoms(int atoms);

  GateKind kind() const { return kind_; }
  int atoms() const { return atoms_; }
  int inputs() const { return 1 << atoms_; }

  /// Computational input number `k` (bit order: first atom most significant).
  BasisKet input(int k) const;
  BasisKet image(const BasisKet& input) const;

  /// 2^n x 2^n permutation matrix in the computational basis.
  Eigen::MatrixXd matrix() const;

 private:
  TargetGate(GateKind kind, int atoms) : kind_(kind), atoms_(atoms) {}
  GateKind kind_;
  int atoms_;
};

enum class MetricMode {
  kPopulation,  // mean <psi_b|rho_b|psi_b>
  kUhlmann,     // mean sqrt(<psi_b|rho_b|psi_b>)
};

std::string_view to_string(MetricMode mode);
MetricMode metric_mode_from_string(std::string_view name);

struct InputOverlap {
  BasisKet input;
  BasisKet image;
  double overlap = 0.0;  // <image|rho(T)|image>
};

/// Propagates every computational input and reads the overlap with its
/// ideal image. Each input runs in the smallest exact subspace (see
/// build_sector_model), which gives the same overlaps as the full 3^n
/// evolution at a fraction of the cost.
std::vector<InputOverlap> basis_overlaps(const GateSystem& sys, const PulseSet& pulses,
                                         const PropagationConfig& cfg,
                                         const NoiseRealization& noise,
                                         const TargetGate& gate);

/// Same overlaps from the full 3^n propagation.
std::vector<InputOverlap> basis_overlaps_full(const GateSystem& sys, const PulseSet& pulses,
                                              const PropagationConfig& cfg,
                                              const NoiseRealization& noise,
                                              const TargetGate& gate);

double fidelity_from_overlaps(const std::vector<InputOverlap>& overlaps, MetricMode mode);

double gate_fidelity(const GateSystem& sys, const PulseSet& pulses,
                     const PropagationConfig& cfg, const NoiseRealization& noise,
                     const TargetGate& gate, MetricMode mode = MetricMode::kUhlmann);

/// 1 - F, meaningful for a gamma = 0 run.
double optimization_error(double fidelity);

}  // namespace rydgate
