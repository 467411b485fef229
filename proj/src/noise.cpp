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

#include "rydgate/noise.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

#include "rydgate/fidelity.hpp"
#include "rydgate/parallel.hpp"
#include "rydgate/units.hpp"

namespace rydgate {

namespace {

constexpr int kMaxRedraws = 1000;

void check_sigma(double s, const char* name) {
  if (!(s >= 0.0) || !std::isfinite(s)) {
    throw std::invalid_argument(std::string(name) + " must be finite and >= 0");
  }
}

double gauss(Rng& rng, double mean, double sigma) {
  if (sigma == 0.0) return mean;
  return std::normal_distribution<double>(mean, sigma)(rng);
}

double deterministic_fidelity(const Scenario& s, const PulseSet& pulses,
                              const NoiseRealization& noise = {}) {
  return gate_fidelity(s.system, pulses, s.propagation, noise, s.gate(), s.metric);
}

}  // namespace

Rng trial_rng(std::uint64_t seed, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  return Rng(seq);
}

void PositionNoise::validate() const {
  check_sigma(sigma_x, "sigma_x");
  check_sigma(sigma_y, "sigma_y");
  check_sigma(sigma_z, "sigma_z");
}

void DopplerNoise::validate() const { check_sigma(temperature_uk, "Ta"); }

void AmplitudeNoise::validate() const { check_sigma(delta_rel, "delta_omega"); }

void NoiseModel::validate() const {
  position.validate();
  doppler.validate();
  amplitude.validate();
}

Eigen::MatrixXd sample_interaction(const PositionNoise& pos, const GateSystem& sys, Rng& rng) {
  pos.validate();
  sys.validate();
  if (!pos.active()) return sys.interactions;
  if (!(sys.r0 > 0.0)) throw std::invalid_argument("position noise needs a nominal spacing");

  const int n = sys.atoms;
  Eigen::MatrixXd v = Eigen::MatrixXd::Zero(n, n);
  for (int attempt = 0; attempt < kMaxRedraws; ++attempt) {
    if (n == 2) {
      const double x = gauss(rng, sys.r0, pos.sigma_x);
      const double y = gauss(rng, 0.0, pos.sigma_y);
      const double z = gauss(rng, 0.0, pos.sigma_z);
      const double r = std::sqrt(x * x + y * y + z * z);
      if (r < kMinPairDistance) continue;
      v(0, 1) = v(1, 0) = interaction_at(sys.c6, r);
      return v;
    }
    // Controls at -r0 and +r0, target at the origin.
    const double site[3] = {-sys.r0, sys.r0, 0.0};
    const double k = 1.0 / std::sqrt(2.0);
    std::array<std::array<double, 3>, 3> p{};
    for (int a = 0; a < 3; ++a) {
      p[a] = {gauss(rng, site[a], k * pos.sigma_x), gauss(rng, 0.0, k * pos.sigma_y),
              gauss(rng, 0.0, k * pos.sigma_z)};
    }
    bool ok = true;
    for (int a = 0; a < 3 && ok; ++a) {
      for (int b = a + 1; b < 3; ++b) {
        const double dx = p[a][0] - p[b][0];
        const double dy = p[a][1] - p[b][1];
        const double dz = p[a][2] - p[b][2];
        const double r = std::sqrt(dx * dx + dy * dy + dz * dz);
        if (r < kMinPairDistance) {
          ok = false;
          break;
        }
        v(a, b) = v(b, a) = interaction_at(sys.c6, r);
      }
    }
    if (ok) return v;
  }
  throw NumericalError("position sampling kept producing overlapping atoms");
}

double doppler_sigma(double temperature_uk) {
  check_sigma(temperature_uk, "Ta");
  const double v_rms = std::sqrt(constants::kBoltzmann * temperature_uk * 1e-6 /
                                 constants::kRb87Mass);        // m/s
  return constants::kEffectiveWaveNumber * v_rms * 1e-6;       // 1/s -> rad/us
}

NoiseRealization draw_realization(const NoiseModel& model, const GateSystem& sys,
                                  const PulseSet& pulses, Rng& rng) {
  NoiseRealization out;
  if (model.position.active()) out.interactions = sample_interaction(model.position, sys, rng);
  const bool shared = pulses.mode == PulseMode::kOnePulse;
  if (model.doppler.active()) {
    const double s = doppler_sigma(model.doppler.temperature_uk);
    out.detuning1 = gauss(rng, 0.0, s);
    out.detuning2 = shared ? out.detuning1 : gauss(rng, 0.0, s);
  }
  if (model.amplitude.active()) {
    auto offset = [&](const PulseWaveform& w) {
      const double d = 0.5 * w.peak_to_peak() * model.amplitude.delta_rel;
      return d > 0.0 ? std::uniform_real_distribution<double>(-d, d)(rng) : 0.0;
    };
    out.offset1 = offset(pulses.omega1);
    out.offset2 = shared ? out.offset1 : offset(pulses.omega2);
  }
  return out;
}

MonteCarloResult average_fidelity(const Scenario& scenario, const PulseSet& pulses,
                                  const NoiseModel& model, int trials, std::uint64_t seed,
                                  int threads) {
  model.validate();
  if (trials < 1) throw std::invalid_argument("need at least one trial");
  MonteCarloResult r;
  r.trials = trials;
  r.seed = seed;
  if (!model.active()) {
    r.mean = deterministic_fidelity(scenario, pulses);
    r.samples.assign(trials, r.mean);
    return r;
  }
  r.samples.assign(trials, 0.0);
  parallel_for(static_cast<std::size_t>(trials), threads, [&](std::size_t i) {
    Rng rng = trial_rng(seed, i);
    const NoiseRealization noise = draw_realization(model, scenario.system, pulses, rng);
    r.samples[i] = deterministic_fidelity(scenario, pulses, noise);
  });
  double sum = 0.0;
  for (double f : r.samples) sum += f;
  r.mean = sum / trials;
  if (trials > 1) {
    double ss = 0.0;
    for (double f : r.samples) ss += (f - r.mean) * (f - r.mean);
    r.std_error = std::sqrt(ss / (trials - 1) / trials);
  }
  return r;
}

namespace {

template <class MakeModel>
std::vector<ScanPoint> run_scan(const Scenario& scenario, const PulseSet& pulses,
                                std::span<const double> grid, int trials, std::uint64_t seed,
                                int threads, MakeModel make, bool relative_to_clean) {
  const double clean = relative_to_clean ? deterministic_fidelity(scenario, pulses) : 1.0;
  std::vector<ScanPoint> out;
  out.reserve(grid.size());
  for (double value : grid) {
    const NoiseModel model = make(value);
    const MonteCarloResult mc = average_fidelity(scenario, pulses, model, trials, seed, threads);
    out.push_back({value, mc.mean, mc.std_error, clean - mc.mean, trials, seed});
  }
  return out;
}

}  // namespace

std::vector<ScanPoint> sigma_scan(const Scenario& scenario, const PulseSet& pulses,
                                  const PositionNoise& base, std::span<const double> sigma_x,
                                  int trials, std::uint64_t seed, int threads) {
  return run_scan(
      scenario, pulses, sigma_x, trials, seed, threads,
      [&](double sx) {
        NoiseModel m;
        m.position = base;
        m.position.sigma_x = sx;
        return m;
      },
      false);
}

std::vector<ScanPoint> doppler_scan(const Scenario& scenario, const PulseSet& pulses,
                                    std::span<const double> temperatures_uk, int trials,
                                    std::uint64_t seed, int threads) {
  return run_scan(
      scenario, pulses, temperatures_uk, trials, seed, threads,
      [](double ta) {
        NoiseModel m;
        m.doppler.temperature_uk = ta;
        return m;
      },
      true);
}

std::vector<ScanPoint> amplitude_scan(const Scenario& scenario, const PulseSet& pulses,
                                      std::span<const double> delta_rel, int trials,
                                      std::uint64_t seed, int threads) {
  return run_scan(
      scenario, pulses, delta_rel, trials, seed, threads,
      [](double d) {
        NoiseModel m;
        m.amplitude.delta_rel = d;
        return m;
      },
      true);
}

LinearFit fit_line(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size() || x.size() < 2) {
    throw std::invalid_argument("a line fit needs at least two (x, y) pairs");
  }
  const double n = static_cast<double>(x.size());
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0.0, sxy = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
    syy += (y[i] - my) * (y[i] - my);
  }
  if (sxx == 0.0) throw std::invalid_argument("a line fit needs distinct x values");
  LinearFit f;
  f.slope = sxy / sxx;
  f.intercept = my - f.slope * mx;
  f.r_squared = syy == 0.0 ? 1.0 : (sxy * sxy) / (sxx * syy);
  return f;
}

DecayScan decay_scan(const Scenario& scenario, const PulseSet& pulses,
                     std::span<const double> gammas_khz, int threads) {
  for (double g : gammas_khz) {
    if (!(g >= 0.0) || !std::isfinite(g)) throw std::invalid_argument("gamma must be >= 0");
  }
  // Slot 0 is the gamma = 0 baseline.
  std::vector<double> f(gammas_khz.size() + 1);
  parallel_for(f.size(), threads, [&](std::size_t i) {
    Scenario s = scenario;
    s.system = scenario.system.with_gamma(i == 0 ? 0.0 : khz_to_rate(gammas_khz[i - 1]));
    f[i] = deterministic_fidelity(s, pulses);
  });

  DecayScan out;
  out.baseline_fidelity = f[0];
  std::vector<double> xs, ys;
  for (std::size_t i = 0; i < gammas_khz.size(); ++i) {
    const double e_sp = (1.0 - f[i + 1]) - (1.0 - f[0]);
    out.points.push_back({gammas_khz[i], f[i + 1], 0.0, e_sp, 1, 0});
    xs.push_back(gammas_khz[i]);
    ys.push_back(e_sp);
  }
  if (xs.size() >= 2) {
    const LinearFit fit = fit_line(xs, ys);
    out.slope = fit.slope;
    out.intercept = fit.intercept;
    out.r_squared = fit.r_squared;
  }
  return out;
}

}  // namespace rydgate
