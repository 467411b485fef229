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

#include "rydgate/fidelity.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace rydgate {

namespace {

void check_gate(const GateSystem& sys, const TargetGate& gate) {
  if (gate.atoms() != sys.atoms) {
    throw std::invalid_argument("a " + std::to_string(gate.atoms()) +
                                "-qubit gate cannot be run on " +
                                std::to_string(sys.atoms) + " atoms");
  }
}

const Eigen::MatrixXd& interactions_of(const GateSystem& sys, const NoiseRealization& noise) {
  return noise.interactions ? *noise.interactions : sys.interactions;
}

}  // namespace

TargetGate TargetGate::cnot() { return {GateKind::kCnot, 2}; }
TargetGate TargetGate::toffoli() { return {GateKind::kToffoli, 3}; }

TargetGate TargetGate::for_atoms(int atoms) {
  if (atoms == 2) return cnot();
  if (atoms == 3) return toffoli();
  throw std::invalid_argument("no target gate for " + std::to_string(atoms) + " atoms");
}

BasisKet TargetGate::input(int k) const {
  if (k < 0 || k >= inputs()) throw std::out_of_range("computational input out of range");
  std::vector<Level> levels(atoms_);
  for (int a = 0; a < atoms_; ++a) {
    levels[a] = ((k >> (atoms_ - 1 - a)) & 1) ? Level::kOne : Level::kZero;
  }
  return BasisKet(std::move(levels));
}

BasisKet TargetGate::image(const BasisKet& in) const {
  std::vector<Level> levels = in.levels();
  bool controls_set = true;
  for (int a = 0; a + 1 < atoms_; ++a) controls_set = controls_set && levels[a] == Level::kOne;
  if (controls_set) {
    Level& t = levels[atoms_ - 1];
    t = t == Level::kZero ? Level::kOne : Level::kZero;
  }
  return BasisKet(std::move(levels));
}

Eigen::MatrixXd TargetGate::matrix() const {
  const int n = inputs();
  Eigen::MatrixXd u = Eigen::MatrixXd::Zero(n, n);
  for (int k = 0; k < n; ++k) {
    const BasisKet out = image(input(k));
    int row = 0;
    for (Level l : out.levels()) row = 2 * row + (l == Level::kOne ? 1 : 0);
    u(row, k) = 1.0;
  }
  return u;
}

std::string_view to_string(MetricMode mode) {
  return mode == MetricMode::kPopulation ? "population" : "uhlmann";
}

MetricMode metric_mode_from_string(std::string_view name) {
  if (name == "population") return MetricMode::kPopulation;
  if (name == "uhlmann") return MetricMode::kUhlmann;
  throw std::invalid_argument("unknown metric mode '" + std::string(name) +
                              "' (expected population or uhlmann)");
}

std::vector<InputOverlap> basis_overlaps(const GateSystem& sys, const PulseSet& pulses,
                                         const PropagationConfig& cfg,
                                         const NoiseRealization& noise,
                                         const TargetGate& gate) {
  check_gate(sys, gate);
  const DriveSchedule drive(pulses, noise);
  PropagationConfig quiet = cfg;
  quiet.record_stride = 0;

  std::vector<InputOverlap> out;
  out.reserve(gate.inputs());
  for (int k = 0; k < gate.inputs(); ++k) {
    const BasisKet in = gate.input(k);
    const BasisKet img = gate.image(in);
    const LindbladModel model = build_sector_model(sys, interactions_of(sys, noise), in);
    Operator rho0 = Operator::Zero(model.dim, model.dim);
    const int i = model.local_index(in);
    rho0(i, i) = 1.0;
    const ModelEvolution ev = evolve_model(model, drive, rho0, quiet);
    const int j = model.local_index(img);
    out.push_back({in, img, ev.rho(j, j).real()});
  }
  return out;
}

std::vector<InputOverlap> basis_overlaps_full(const GateSystem& sys, const PulseSet& pulses,
                                              const PropagationConfig& cfg,
                                              const NoiseRealization& noise,
                                              const TargetGate& gate) {
  check_gate(sys, gate);
  PropagationConfig quiet = cfg;
  quiet.record_stride = 0;
  std::vector<InputOverlap> out;
  for (int k = 0; k < gate.inputs(); ++k) {
    const BasisKet in = gate.input(k);
    const BasisKet img = gate.image(in);
    const PropagationResult r = propagate(sys, pulses, DensityMatrix::pure(in), quiet, noise);
    out.push_back({in, img, expectation(r.final_state, img)});
  }
  return out;
}

double fidelity_from_overlaps(const std::vector<InputOverlap>& overlaps, MetricMode mode) {
  if (overlaps.empty()) throw std::invalid_argument("no overlaps to average");
  double sum = 0.0;
  for (const InputOverlap& o : overlaps) {
    const double p = std::clamp(o.overlap, 0.0, 1.0);
    sum += mode == MetricMode::kUhlmann ? std::sqrt(p) : p;
  }
  return sum / static_cast<double>(overlaps.size());
}

double gate_fidelity(const GateSystem& sys, const PulseSet& pulses,
                     const PropagationConfig& cfg, const NoiseRealization& noise,
                     const TargetGate& gate, MetricMode mode) {
  return fidelity_from_overlaps(basis_overlaps(sys, pulses, cfg, noise, gate), mode);
}

double optimization_error(double fidelity) { return 1.0 - fidelity; }

}  // namespace rydgate
