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

#include "rydgate/ga.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>

#include "rydgate/parallel.hpp"

namespace rydgate {

namespace {

struct Individual {
  std::vector<double> x;
  double fitness = 0.0;
};

std::string describe(std::span<const double> x) {
  std::ostringstream os;
  os.precision(17);
  os << '[';
  for (std::size_t i = 0; i < x.size(); ++i) os << (i ? ", " : "") << x[i];
  os << ']';
  return os.str();
}

class Evaluator {
 public:
  Evaluator(const Objective& f, int threads) : f_(f), threads_(threads) {}

  // Scores every individual whose fitness is not yet known (index >= from).
  void score(std::vector<Individual>& pop, std::size_t from) {
    parallel_for(pop.size() - from, threads_, [&](std::size_t k) {
      Individual& ind = pop[from + k];
      const double v = f_(ind.x);
      if (!std::isfinite(v)) {
        throw NumericalError("objective returned " + std::to_string(v) + " at " +
                             describe(ind.x));
      }
      ind.fitness = v;
    });
    evaluations += static_cast<long>(pop.size() - from);
  }

  long evaluations = 0;

 private:
  const Objective& f_;
  int threads_;
};

// Index of the best individual; ties resolved towards the lower index.
std::size_t best_index(const std::vector<Individual>& pop) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < pop.size(); ++i) {
    if (pop[i].fitness > pop[best].fitness) best = i;
  }
  return best;
}

class Round {
 public:
  Round(const SearchSpace& box, const GAConfig& cfg, std::mt19937_64& rng)
      : box_(box), cfg_(cfg), rng_(rng) {}

  std::vector<double> random_point() {
    std::vector<double> x(box_.size());
    for (int i = 0; i < box_.size(); ++i) {
      x[i] = box_.width(i) > 0.0
                 ? std::uniform_real_distribution<double>(box_.lo[i], box_.hi[i])(rng_)
                 : box_.lo[i];
    }
    return x;
  }

  const Individual& tournament(const std::vector<Individual>& pop) {
    std::uniform_int_distribution<std::size_t> pick(0, pop.size() - 1);
    std::size_t best = pick(rng_);
    for (int k = 1; k < cfg_.tournament_size; ++k) {
      const std::size_t c = pick(rng_);
      if (pop[c].fitness > pop[best].fitness) best = c;
    }
    return pop[best];
  }

  std::vector<double> child(const std::vector<Individual>& pop) {
    const Individual& p1 = tournament(pop);
    const Individual& p2 = tournament(pop);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::vector<double> x = p1.x;
    if (u(rng_) < cfg_.crossover_prob) {
      const double alpha = u(rng_);
      for (std::size_t i = 0; i < x.size(); ++i) x[i] = alpha * p1.x[i] + (1.0 - alpha) * p2.x[i];
    }
    for (int i = 0; i < box_.size(); ++i) {
      if (u(rng_) < cfg_.mutation_prob && box_.width(i) > 0.0) {
        x[i] += std::normal_distribution<double>(0.0, cfg_.mutation_scale * box_.width(i))(rng_);
      }
      x[i] = std::clamp(x[i], box_.lo[i], box_.hi[i]);
    }
    return x;
  }

 private:
  const SearchSpace& box_;
  const GAConfig& cfg_;
  std::mt19937_64& rng_;
};

SearchSpace shrink_around(const SearchSpace& box, std::span<const double> center,
                          const GAConfig& cfg) {
  SearchSpace next;
  next.lo.resize(box.size());
  next.hi.resize(box.size());
  for (int i = 0; i < box.size(); ++i) {
    double w = box.width(i);
    if (w > 0.0) w = std::max(w * cfg.shrink_factor, cfg.min_box_width);
    next.lo[i] = center[i] - 0.5 * w;
    next.hi[i] = center[i] + 0.5 * w;
  }
  return next;
}

}  // namespace

SearchSpace SearchSpace::uniform(int parameters, double lo, double hi) {
  SearchSpace s;
  s.lo.assign(parameters, lo);
  s.hi.assign(parameters, hi);
  s.validate();
  return s;
}

SearchSpace SearchSpace::around(std::span<const double> center, double half_width) {
  SearchSpace s;
  for (double c : center) {
    s.lo.push_back(c - half_width);
    s.hi.push_back(c + half_width);
  }
  s.validate();
  return s;
}

bool SearchSpace::contains(std::span<const double> x) const {
  if (static_cast<int>(x.size()) != size()) return false;
  for (int i = 0; i < size(); ++i) {
    if (x[i] < lo[i] || x[i] > hi[i]) return false;
  }
  return true;
}

bool SearchSpace::degenerate() const {
  for (int i = 0; i < size(); ++i) {
    if (width(i) > 0.0) return false;
  }
  return true;
}

void SearchSpace::validate() const {
  if (lo.empty() || lo.size() != hi.size()) {
    throw std::invalid_argument("search space needs matching, non-empty lo/hi bounds");
  }
  for (int i = 0; i < size(); ++i) {
    if (!std::isfinite(lo[i]) || !std::isfinite(hi[i])) {
      throw std::invalid_argument("search bounds must be finite");
    }
    if (lo[i] > hi[i]) {
      throw std::invalid_argument("search bound " + std::to_string(i) + " has lo > hi");
    }
  }
}

void GAConfig::validate() const {
  if (population < 2) throw std::invalid_argument("GA population must be >= 2");
  if (generations < 0) throw std::invalid_argument("GA generations must be >= 0");
  if (elite_count < 1 || elite_count >= population) {
    throw std::invalid_argument("GA elite_count must be in [1, population)");
  }
  auto prob = [](double p, const char* name) {
    if (!(p >= 0.0 && p <= 1.0)) {
      throw std::invalid_argument(std::string("GA ") + name + " must be in [0, 1]");
    }
  };
  prob(crossover_prob, "crossover_prob");
  prob(mutation_prob, "mutation_prob");
  if (!(mutation_scale >= 0.0)) throw std::invalid_argument("GA mutation_scale must be >= 0");
  if (tournament_size < 1) throw std::invalid_argument("GA tournament_size must be >= 1");
  if (max_rounds < 1) throw std::invalid_argument("GA max_rounds must be >= 1");
  if (!(stop_tol > 0.0)) throw std::invalid_argument("GA stop_tol must be > 0");
  if (!(shrink_factor > 0.0 && shrink_factor <= 1.0)) {
    throw std::invalid_argument("GA shrink_factor must be in (0, 1]");
  }
  if (!(min_box_width >= 0.0)) throw std::invalid_argument("GA min_box_width must be >= 0");
  if (threads < 0) throw std::invalid_argument("GA threads must be >= 0");
}

GAResult optimize(const Objective& objective, const SearchSpace& space,
                  const GAConfig& cfg, const RoundObserver& observer) {
  space.validate();
  cfg.validate();
  if (!objective) throw std::invalid_argument("GA needs an objective");

  std::mt19937_64 rng(cfg.seed);
  Evaluator eval(objective, cfg.threads);
  GAResult result;
  result.seed = cfg.seed;

  if (space.degenerate()) {
    std::vector<Individual> one{{space.lo, 0.0}};
    eval.score(one, 0);
    result.best_params = one[0].x;
    result.best_fidelity = one[0].fitness;
    result.history = {one[0].fitness};
    result.rounds = {{one[0].x, one[0].fitness, space}};
    result.rounds_used = 1;
    result.evaluations = eval.evaluations;
    result.converged = true;
    if (observer) observer(1, result);
    return result;
  }

  SearchSpace box = space;
  std::vector<Individual> pop;
  bool have_best = false;
  Individual best;

  for (int round = 1; round <= cfg.max_rounds; ++round) {
    Round r(box, cfg, rng);
    pop.clear();
    std::size_t known = 0;
    if (have_best) {
      pop.push_back(best);  // carried over with its fitness
      known = 1;
    }
    while (static_cast<int>(pop.size()) < cfg.population) pop.push_back({r.random_point(), 0.0});
    eval.score(pop, known);

    for (int g = 0; g < cfg.generations; ++g) {
      std::vector<std::size_t> order(pop.size());
      std::iota(order.begin(), order.end(), 0);
      std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return pop[a].fitness > pop[b].fitness;
      });
      std::vector<Individual> next;
      next.reserve(pop.size());
      for (int e = 0; e < cfg.elite_count; ++e) next.push_back(pop[order[e]]);
      while (static_cast<int>(next.size()) < cfg.population) next.push_back({r.child(pop), 0.0});
      eval.score(next, cfg.elite_count);
      pop = std::move(next);
    }

    const Individual& round_best = pop[best_index(pop)];
    if (!have_best || round_best.fitness > best.fitness) best = round_best;
    have_best = true;

    result.rounds.push_back({round_best.x, round_best.fitness, box});
    result.history.push_back(best.fitness);
    result.rounds_used = round;
    result.best_params = best.x;
    result.best_fidelity = best.fitness;
    result.evaluations = eval.evaluations;
    if (observer) observer(round, result);

    const std::size_t n = result.history.size();
    if (n >= 2 && std::abs(result.history[n - 1] - result.history[n - 2]) < cfg.stop_tol) {
      result.converged = true;
      break;
    }
    box = shrink_around(box, best.x, cfg);
  }
  return result;
}

PulseSet Scenario::pulses(std::span<const double> params) const {
  return PulseSet::from_parameters(params, mode, duration);
}

double fitness_of(std::span<const double> params, const Scenario& scenario) {
  return gate_fidelity(scenario.system, scenario.pulses(params), scenario.propagation,
                       NoiseRealization{}, scenario.gate(), scenario.metric);
}

}  // namespace rydgate
