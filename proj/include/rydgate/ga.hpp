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
#include <functional>
#include <span>
#include <vector>

#include "rydgate/fidelity.hpp"
#include "rydgate/model.hpp"
#include "rydgate/propagator.hpp"
#include "rydgate/pulses.hpp"
#include "rydgate/units.hpp"

namespace rydgate {

/// Per-parameter closed box [lo, hi]. A zero-width interval pins that
/// parameter.
struct SearchSpace {
  std::vector<double> lo;
  std::vector<double> hi;

  static SearchSpace uniform(int parameters, double lo, double hi);
  static SearchSpace around(std::span<const double> center, double half_width);

  int size() const { return static_cast<int>(lo.size()); }
  double width(int i) const { return hi[i] - lo[i]; }
  bool contains(std::span<const double> x) const;
  bool degenerate() const;
  void validate() const;
};

struct GAConfig {
  int population = 20;
  int generations = 50;
  int elite_count = 1;
  double crossover_prob = 0.9;
  double mutation_prob = 0.1;    // per gene
  double mutation_scale = 0.1;   // sigma as a fraction of the box width
  int tournament_size = 2;
  int max_rounds = 12;
  double stop_tol = 1e-4;
  double shrink_factor = 0.5;
  double min_box_width = mhz_to_angular(0.05);
  std::uint64_t seed = 1;
  /// Worker cap for fitness evaluations (0 = hardware concurrency). Does not
  /// affect results.
  int threads = 1;

  void validate() const;
};

struct GARound {
  std::vector<double> best_params;
  double best_fidelity = 0.0;
  SearchSpace box;  // the box this round searched
};

struct GAResult {
  std::vector<double> best_params;
  double best_fidelity = 0.0;
  std::vector<double> history;  // best-so-far after each round
  std::vector<GARound> rounds;
  int rounds_used = 0;
  long evaluations = 0;
  bool converged = false;  // stopped on |F_n - F_{n-1}| < stop_tol
  std::uint64_t seed = 0;
};

using Objective = std::function<double(std::span<const double>)>;

/// Observer called after each round (round index from 1, result so far).
using RoundObserver = std::function<void(int round, const GAResult&)>;

/// Maximizes `objective` with a multi-round elitist real-coded GA. Each round
/// runs `generations` generations of tournament selection, blend crossover and
/// Gaussian mutation inside the round's box; the next round's box is centred
/// on the best individual with widths scaled by `shrink_factor`.
/// The objective must be thread-safe when cfg.threads != 1.
GAResult optimize(const Objective& objective, const SearchSpace& space,
                  const GAConfig& cfg, const RoundObserver& observer = {});

/// Everything needed to score a parameter vector.
struct Scenario {
  GateSystem system;
  PulseMode mode = PulseMode::kTwoPulse;
  double duration = 1.0;
  PropagationConfig propagation;
  MetricMode metric = MetricMode::kUhlmann;

  TargetGate gate() const { return TargetGate::for_atoms(system.atoms); }
  PulseSet pulses(std::span<const double> params) const;
};

/// Noise-free gate fidelity of the pulse set described by `params` (rad/us).
double fitness_of(std::span<const double> params, const Scenario& scenario);

}  // namespace rydgate
