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

#include "rydgate/propagator.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "rydgate/units.hpp"

namespace rydgate {

namespace {

constexpr double kTraceDriftTol = 1e-8;
constexpr double kNormDriftTol = 1e-8;
constexpr double kPurePhasePerStep = 0.005;
constexpr int kFiniteCheckInterval = 256;
// RK4 is not positivity preserving: a pure state at gamma = 0 picks up
// O(dt^4) negative eigenvalues (up to ~1e-5 at the default grid on the
// stiffest reference pulses). Blow-ups are far larger than this floor.
constexpr double kPropagatedEigenvalueTol = -1e-4;

// Right-hand side of the master equation for a sparse model. Matrices are
// column-major dim x dim.
class LindbladRhs {
 public:
  explicit LindbladRhs(const LindbladModel& m) : m_(m), d_(m.dim) {
    diag_.resize(static_cast<std::size_t>(d_) * d_);
    for (int j = 0; j < d_; ++j) {
      for (int i = 0; i < d_; ++i) {
        diag_[i + j * d_] =
            Complex(-0.5 * (m.loss[i] + m.loss[j]), -(m.energy[i] - m.energy[j]));
      }
    }
  }

  void operator()(const std::array<Complex, kDriveChannels>& drive, const Complex* rho,
                  Complex* out) const {
    const int d = d_;
    const std::size_t n = static_cast<std::size_t>(d) * d;
    for (std::size_t k = 0; k < n; ++k) out[k] = diag_[k] * rho[k];

    constexpr Complex kMinusI(0.0, -1.0);
    for (const LindbladModel::Coupling& c : m_.couplings) {
      const Complex h_up = 0.5 * drive[c.channel];  // H(lower, upper)
      const Complex h_dn = std::conj(h_up);         // H(upper, lower)
      const Complex a = kMinusI * h_up;
      const Complex b = kMinusI * h_dn;
      const int l = c.lower;
      const int u = c.upper;
      // -i H rho: rows l and u
      for (int j = 0; j < d; ++j) {
        const int col = j * d;
        out[l + col] += a * rho[u + col];
        out[u + col] += b * rho[l + col];
      }
      // +i rho H: columns u and l
      Complex* out_u = out + u * d;
      Complex* out_l = out + l * d;
      const Complex* rho_l = rho + l * d;
      const Complex* rho_u = rho + u * d;
      for (int i = 0; i < d; ++i) {
        out_u[i] -= rho_l[i] * a;
        out_l[i] -= rho_u[i] * b;
      }
    }

    const double g = m_.gamma;
    if (g == 0.0) return;
    for (const LindbladModel::Jump& jump : m_.jumps) {
      for (const auto& [to2, from2] : jump.entries) {
        for (const auto& [to1, from1] : jump.entries) {
          out[to1 + to2 * d] += g * rho[from1 + from2 * d];
        }
      }
    }
  }

 private:
  const LindbladModel& m_;
  int d_;
  std::vector<Complex> diag_;
};

void hermitize_in_place(Operator& rho) {
  const int d = static_cast<int>(rho.rows());
  for (int j = 0; j < d; ++j) {
    rho(j, j) = Complex(rho(j, j).real(), 0.0);
    for (int i = j + 1; i < d; ++i) {
      const Complex avg = 0.5 * (rho(i, j) + std::conj(rho(j, i)));
      rho(i, j) = avg;
      rho(j, i) = std::conj(avg);
    }
  }
}

TrajectorySample sample(const LindbladModel& m, double t, const Operator& rho) {
  TrajectorySample s;
  s.t = t;
  s.populations.assign(hilbert_dim(m.atoms), 0.0);
  for (std::size_t k = 0; k < m.kets.size(); ++k) {
    s.populations[basis_index(m.kets[k])] = rho(k, k).real();
  }
  return s;
}

}  // namespace

void PropagationConfig::validate() const {
  if (steps < 1) throw std::invalid_argument("propagation needs at least one step");
  if (record_stride < 0) throw std::invalid_argument("record_stride must be >= 0");
  if (!(max_phase_per_step > 0.0)) {
    throw std::invalid_argument("max_phase_per_step must be positive");
  }
  if (!(max_drive_phase_per_step > 0.0)) {
    throw std::invalid_argument("max_drive_phase_per_step must be positive");
  }
}

DriveSchedule::DriveSchedule(const PulseSet& pulses, const NoiseRealization& noise)
    : pulses_(pulses),
      detuning_{noise.detuning1, noise.detuning2},
      offset_{noise.offset1, noise.offset2} {
  for (double v : {noise.detuning1, noise.detuning2, noise.offset1, noise.offset2}) {
    if (!std::isfinite(v)) throw std::invalid_argument("noise realization must be finite");
  }
}

std::array<Complex, kDriveChannels> DriveSchedule::at(double t) const {
  const PulseWaveform* w[kDriveChannels] = {&pulses_.omega1, &pulses_.omega2};
  std::array<Complex, kDriveChannels> out;
  for (int c = 0; c < kDriveChannels; ++c) {
    out[c] = (w[c]->envelope(t) + offset_[c]) *
             std::polar(1.0, w[c]->phase() + detuning_[c] * t);
  }
  return out;
}

double DriveSchedule::amplitude_bound(int channel) const {
  const PulseWaveform& w = channel == 0 ? pulses_.omega1 : pulses_.omega2;
  return w.amplitude_bound() + std::abs(offset_[channel]);
}

int resolve_steps(const LindbladModel& model, const DriveSchedule& drive,
                  const PropagationConfig& cfg) {
  cfg.validate();
  // Row-sum bound on |H|: largest diagonal energy plus half of each drive
  // amplitude times the number of couplings that can touch one row.
  double max_energy = 0.0;
  for (double e : model.energy) max_energy = std::max(max_energy, std::abs(e));
  const double drive_bound =
      0.5 * (model.atoms + 1) * std::max(drive.amplitude_bound(0), drive.amplitude_bound(1));
  const double h_bound = max_energy + drive_bound;
  const double needed =
      std::max(std::ceil(drive.duration() * h_bound / cfg.max_phase_per_step),
               std::ceil(drive.duration() * drive_bound / cfg.max_drive_phase_per_step));
  return std::max(cfg.steps, static_cast<int>(std::min(needed, 1e8)));
}

ModelEvolution evolve_model(const LindbladModel& model, const DriveSchedule& drive,
                            const Operator& rho0, const PropagationConfig& cfg) {
  const int d = model.dim;
  if (rho0.rows() != d || rho0.cols() != d) {
    throw std::invalid_argument("initial state dimension " + std::to_string(rho0.rows()) +
                                " does not match model dimension " + std::to_string(d));
  }
  const int steps = resolve_steps(model, drive, cfg);
  const double duration = drive.duration();
  const double dt = duration / steps;

  LindbladRhs rhs(model);
  Operator rho = rho0;
  Operator k1(d, d), k2(d, d), k3(d, d), k4(d, d), tmp(d, d);

  ModelEvolution result;
  result.steps_taken = steps;
  const bool record = cfg.record_stride > 0;
  if (record) result.trajectory.push_back(sample(model, 0.0, rho));

  for (int s = 0; s < steps; ++s) {
    const double t = s * dt;
    const auto f0 = drive.at(t);
    const auto fh = drive.at(t + 0.5 * dt);
    const auto f1 = drive.at(t + dt);

    rhs(f0, rho.data(), k1.data());
    tmp = rho + (0.5 * dt) * k1;
    rhs(fh, tmp.data(), k2.data());
    tmp = rho + (0.5 * dt) * k2;
    rhs(fh, tmp.data(), k3.data());
    tmp = rho + dt * k3;
    rhs(f1, tmp.data(), k4.data());
    rho += (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);

    if (cfg.hermitize_every_step) hermitize_in_place(rho);
    if ((s + 1) % kFiniteCheckInterval == 0 && !rho.allFinite()) {
      throw NumericalError("density matrix became non-finite at t = " +
                           std::to_string((s + 1) * dt));
    }
    if (record && ((s + 1) % cfg.record_stride == 0 || s + 1 == steps)) {
      result.trajectory.push_back(sample(model, (s + 1) == steps ? duration : (s + 1) * dt, rho));
    }
  }

  if (!rho.allFinite()) throw NumericalError("density matrix became non-finite");
  const double drift = std::abs(rho.trace() - rho0.trace());
  if (drift >= kTraceDriftTol) {
    std::ostringstream os;
    os << "trace drifted by " << drift << " over " << steps
       << " steps; the time step is too coarse";
    throw NumericalError(os.str());
  }
  result.rho = std::move(rho);
  return result;
}

PropagationResult propagate(const GateSystem& sys, const PulseSet& pulses,
                            const DensityMatrix& rho0, const PropagationConfig& cfg,
                            const NoiseRealization& noise) {
  if (rho0.dim() != sys.dim()) {
    throw std::invalid_argument("initial state dimension does not match the system");
  }
  const LindbladModel model =
      build_full_model(sys, noise.interactions ? *noise.interactions : sys.interactions);
  const DriveSchedule drive(pulses, noise);
  ModelEvolution ev = evolve_model(model, drive, rho0.matrix(), cfg);
  try {
    return PropagationResult{DensityMatrix(std::move(ev.rho), kPropagatedEigenvalueTol),
                             std::move(ev.trajectory),
                             ev.steps_taken};
  } catch (const std::invalid_argument& e) {
    throw NumericalError(std::string("propagated state is not a density matrix: ") +
                         e.what());
  }
}

StateVector propagate_pure(const Operator& h, const StateVector& psi0, double duration,
                           const PureConfig& cfg, const PureObserver& observer) {
  const int d = static_cast<int>(h.rows());
  if (h.cols() != d || psi0.size() != d) {
    throw std::invalid_argument("Hamiltonian and state dimensions do not match");
  }
  if (!(duration > 0.0)) throw std::invalid_argument("duration must be positive");
  if (hermiticity_defect(h) > 1e-12 * std::max(1.0, h.cwiseAbs().maxCoeff())) {
    throw std::invalid_argument("propagate_pure needs a Hermitian Hamiltonian");
  }
  if (cfg.record_stride < 1) throw std::invalid_argument("record_stride must be >= 1");

  int steps = cfg.steps;
  if (steps <= 0) {
    const double h_bound = h.cwiseAbs().rowwise().sum().maxCoeff();
    steps = std::max(1000, static_cast<int>(std::ceil(duration * h_bound / kPurePhasePerStep)));
  }
  const double dt = duration / steps;
  const Operator a = Complex(0.0, -1.0) * h;  // dpsi/dt = a psi

  StateVector psi = psi0;
  StateVector k1(d), k2(d), k3(d), k4(d);
  const double norm0 = psi0.squaredNorm();
  if (observer) observer(0.0, psi);
  for (int s = 0; s < steps; ++s) {
    k1.noalias() = a * psi;
    k2.noalias() = a * (psi + (0.5 * dt) * k1);
    k3.noalias() = a * (psi + (0.5 * dt) * k2);
    k4.noalias() = a * (psi + dt * k3);
    psi += (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    if (observer && ((s + 1) % cfg.record_stride == 0 || s + 1 == steps)) {
      observer(s + 1 == steps ? duration : (s + 1) * dt, psi);
    }
  }
  if (!psi.allFinite()) throw NumericalError("state vector became non-finite");
  const double drift = std::abs(psi.squaredNorm() - norm0);
  if (drift >= kNormDriftTol) {
    std::ostringstream os;
    os << "norm drifted by " << drift << " over " << steps << " steps";
    throw NumericalError(os.str());
  }
  return psi;
}

PureTrajectory propagate_pure(const Operator& h, const StateVector& psi0, double duration,
                              const PureConfig& cfg) {
  PureTrajectory out;
  propagate_pure(h, psi0, duration, cfg, [&](double t, const StateVector& psi) {
    out.times.push_back(t);
    out.states.push_back(psi);
  });
  return out;
}

}  // namespace rydgate
