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
#include <cmath>
#include <vector>

#include "doctest.h"
#include "reference.hpp"
#include "rydgate/ga.hpp"
#include "rydgate/units.hpp"

using namespace rydgate;

namespace {

const std::vector<double> kCenter{0.3, -0.2, 0.1, 0.45, -0.35, 0.05};

double quadratic(std::span<const double> x) {
  double s = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) s += (x[i] - kCenter[i]) * (x[i] - kCenter[i]);
  return 1.0 - s;
}

std::vector<double> mhz(const std::array<double, 3>& a, const std::array<double, 3>& b) {
  return {mhz_to_angular(a[0]), mhz_to_angular(a[1]), mhz_to_angular(a[2]),
          mhz_to_angular(b[0]), mhz_to_angular(b[1]), mhz_to_angular(b[2])};
}

}  // namespace

TEST_CASE("GA finds the optimum of a smooth unimodal target") {
  GAConfig cfg;
  cfg.min_box_width = 1e-4;
  const GAResult r = optimize(quadratic, SearchSpace::uniform(6, -1.0, 1.0), cfg);
  CHECK(r.best_fidelity >= 1.0 - 1e-4);
  for (int i = 0; i < 6; ++i) CHECK(std::abs(r.best_params[i] - kCenter[i]) < 0.02);
  CHECK(r.rounds_used <= cfg.max_rounds);
}

TEST_CASE("collapsed box evaluates its single point once") {
  const std::vector<double> point{0.1, 0.2, 0.3};
  SearchSpace s{point, point};
  int calls = 0;
  const GAResult r = optimize(
      [&](std::span<const double> x) {
        ++calls;
        return x[0] + x[1] + x[2];
      },
      s, GAConfig{});
  CHECK(calls == 1);
  CHECK(r.best_params == point);
  CHECK(r.best_fidelity == doctest::Approx(0.6));
  CHECK(r.rounds_used == 1);
}

TEST_CASE("history never decreases and candidates stay inside the round box") {
  GAConfig cfg;
  cfg.population = 8;
  cfg.generations = 10;
  cfg.max_rounds = 5;
  cfg.stop_tol = 1e-12;
  std::vector<std::vector<double>> seen;
  const Objective f = [&](std::span<const double> x) {
    seen.emplace_back(x.begin(), x.end());
    return std::sin(3 * x[0]) * std::cos(2 * x[1]) - 0.1 * x[2] * x[2];
  };
  const GAResult r = optimize(f, SearchSpace::uniform(3, -2.0, 2.0), cfg);
  for (std::size_t i = 1; i < r.history.size(); ++i) CHECK(r.history[i] >= r.history[i - 1]);
  // Rounds evaluate in order; map every evaluation back to its round.
  std::size_t k = 0;
  for (std::size_t round = 0; round < r.rounds.size(); ++round) {
    const std::size_t fresh = cfg.population - (round == 0 ? 0 : 1);
    const std::size_t per_round = fresh + cfg.generations * (cfg.population - cfg.elite_count);
    for (std::size_t e = 0; e < per_round; ++e, ++k) CHECK(r.rounds[round].box.contains(seen[k]));
  }
  CHECK(k == seen.size());
}

TEST_CASE("results do not depend on the evaluation thread count") {
  GAConfig cfg;
  cfg.population = 10;
  cfg.generations = 8;
  cfg.max_rounds = 3;
  cfg.seed = 99;
  const GAResult serial = optimize(quadratic, SearchSpace::uniform(6, -1, 1), cfg);
  cfg.threads = 4;
  const GAResult parallel = optimize(quadratic, SearchSpace::uniform(6, -1, 1), cfg);
  CHECK(serial.best_params == parallel.best_params);
  CHECK(serial.history == parallel.history);
  cfg.seed = 100;
  CHECK(optimize(quadratic, SearchSpace::uniform(6, -1, 1), cfg).best_params != serial.best_params);
}

TEST_CASE("non-finite objective aborts with the offending point") {
  const Objective bad = [](std::span<const double> x) { return x[0] > 0.0 ? NAN : 0.0; };
  CHECK_THROWS_AS(optimize(bad, SearchSpace::uniform(2, -1, 1), GAConfig{}), NumericalError);
}

TEST_CASE("configuration checks") {
  GAConfig cfg;
  cfg.population = 1;
  CHECK_THROWS(cfg.validate());
  cfg = {};
  cfg.stop_tol = 0.0;
  CHECK_THROWS(cfg.validate());
  CHECK_THROWS(SearchSpace({1.0}, {0.0}).validate());
  CHECK_THROWS(SearchSpace({}, {}).validate());
}

TEST_CASE("fitness_of scores reference pulse sets") {
  const auto& r1 = testing::two_pulse_v1();
  const Scenario s1 = testing::scenario_at(1.0, PulseMode::kTwoPulse);
  CHECK(std::abs(fitness_of(mhz(r1.omega1, r1.omega2), s1) - 0.9951) < 0.01);

  const Scenario zero = testing::scenario_at(7.0, PulseMode::kTwoPulse);
  CHECK(fitness_of(std::vector<double>(6, 0.0), zero) == doctest::Approx(0.5));

  const auto& r2 = testing::one_pulse_rows()[1];
  const Scenario s2 = testing::scenario_at(2.0, PulseMode::kOnePulse);
  const std::vector<double> p{mhz_to_angular(r2.omega[0]), mhz_to_angular(r2.omega[1]),
                              mhz_to_angular(r2.omega[2])};
  CHECK(std::abs(fitness_of(p, s2) - 0.9938) < 0.01);
}

TEST_CASE("local refinement around a reference optimum does not lose fidelity") {
  const auto& row = testing::two_pulse_v7();
  const std::vector<double> center = mhz(row.omega1, row.omega2);
  Scenario s = testing::scenario_at(7.0, PulseMode::kTwoPulse);
  s.propagation.steps = 1500;
  GAConfig cfg;
  cfg.population = 8;
  cfg.generations = 4;
  cfg.max_rounds = 2;
  const GAResult r = optimize([&](std::span<const double> x) { return fitness_of(x, s); },
                              SearchSpace::around(center, mhz_to_angular(0.05)), cfg);
  CHECK(r.best_fidelity >= row.fidelity - 0.005);
}
