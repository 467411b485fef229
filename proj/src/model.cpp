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

#include "rydgate/model.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace rydgate {

namespace {

constexpr double kControlControlFactor = 1.0 / 64.0;  // (2 r0)^-6 / r0^-6

Operator interaction_operator(int atoms, const Eigen::MatrixXd& v) {
  const int dim = hilbert_dim(atoms);
  Operator out = Operator::Zero(dim, dim);
  for (int i = 0; i < dim; ++i) {
    const BasisKet ket = ket_from_index(i, atoms);
    double e = 0.0;
    for (int a = 0; a < atoms; ++a) {
      for (int b = a + 1; b < atoms; ++b) {
        if (ket[a] == Level::kRydberg && ket[b] == Level::kRydberg) e += v(a, b);
      }
    }
    out(i, i) = e;
  }
  return out;
}

void check_interactions(const GateSystem& sys, const Eigen::MatrixXd& v) {
  if (v.rows() != sys.atoms || v.cols() != sys.atoms) {
    throw std::invalid_argument("interaction matrix must be " +
                                std::to_string(sys.atoms) + "x" +
                                std::to_string(sys.atoms));
  }
  if (!v.allFinite()) throw std::invalid_argument("interactions must be finite");
}

}  // namespace

double interaction_at(double c6, double r) { return c6 / std::pow(r, 6); }

double spacing_for(double c6, double v0) { return std::pow(c6 / v0, 1.0 / 6.0); }

Eigen::MatrixXd line_interactions(int atoms, double v0) {
  Eigen::MatrixXd v = Eigen::MatrixXd::Zero(atoms, atoms);
  if (atoms == 2) {
    v(0, 1) = v(1, 0) = v0;
  } else if (atoms == 3) {
    // controls 0 and 1 on the outside, target 2 in the middle
    v(0, 2) = v(2, 0) = v0;
    v(1, 2) = v(2, 1) = v0;
    v(0, 1) = v(1, 0) = v0 * kControlControlFactor;
  } else {
    throw std::invalid_argument("only 2- and 3-atom systems are supported");
  }
  return v;
}

GateSystem GateSystem::two_atom(double v0, double gamma, double c6) {
  return make(2, v0, gamma, c6);
}

GateSystem GateSystem::three_atom_line(double v0, double gamma, double c6) {
  return make(3, v0, gamma, c6);
}

GateSystem GateSystem::make(int atoms, double v0, double gamma, double c6) {
  GateSystem sys;
  sys.atoms = atoms;
  sys.interactions = line_interactions(atoms, v0);
  sys.gamma = gamma;
  sys.c6 = c6;
  sys.r0 = v0 > 0.0 ? spacing_for(c6, v0) : 0.0;
  sys.validate();
  return sys;
}

GateSystem GateSystem::with_gamma(double g) const {
  GateSystem copy = *this;
  copy.gamma = g;
  copy.validate();
  return copy;
}

void GateSystem::validate() const {
  if (atoms != 2 && atoms != 3) {
    throw std::invalid_argument("atom count must be 2 or 3");
  }
  check_interactions(*this, interactions);
  for (int a = 0; a < atoms; ++a) {
    if (interactions(a, a) != 0.0) {
      throw std::invalid_argument("interaction matrix must have zero diagonal");
    }
    for (int b = 0; b < atoms; ++b) {
      if (interactions(a, b) < 0.0) {
        throw std::invalid_argument("interactions must be non-negative");
      }
      if (interactions(a, b) != interactions(b, a)) {
        throw std::invalid_argument("interaction matrix must be symmetric");
      }
    }
  }
  if (!(gamma >= 0.0) || !std::isfinite(gamma)) {
    throw std::invalid_argument("decay rate must be finite and >= 0");
  }
}

Operator hamiltonian(const GateSystem& sys, const PulseSet& pulses, double t,
                     double detuning1, double detuning2) {
  NoiseRealization noise;
  noise.detuning1 = detuning1;
  noise.detuning2 = detuning2;
  return hamiltonian(sys, pulses, t, noise);
}

Operator hamiltonian(const GateSystem& sys, const PulseSet& pulses, double t,
                     const NoiseRealization& noise) {
  sys.validate();
  const Eigen::MatrixXd& v = noise.interactions ? *noise.interactions : sys.interactions;
  check_interactions(sys, v);

  pulses.omega1.evaluate(t);  // range check on t
  const Complex omega1 = (pulses.omega1.envelope(t) + noise.offset1) *
                         std::polar(1.0, pulses.omega1.phase() + noise.detuning1 * t);
  const Complex omega2 = (pulses.omega2.envelope(t) + noise.offset2) *
                         std::polar(1.0, pulses.omega2.phase() + noise.detuning2 * t);

  const int n = sys.atoms;
  Operator h = interaction_operator(n, v);
  const Eigen::Matrix3cd lower0 = transition(Level::kZero, Level::kRydberg);
  const Eigen::Matrix3cd lower1 = transition(Level::kOne, Level::kRydberg);
  for (int a = 0; a < n; ++a) {
    const Operator drive = embed_single_atom(lower0, a, n) * (omega1 / 2.0);
    h += drive + drive.adjoint();
  }
  const Operator drive2 = embed_single_atom(lower1, sys.target(), n) * (omega2 / 2.0);
  h += drive2 + drive2.adjoint();
  return h;
}

std::vector<Operator> collapse_operators(const GateSystem& sys) {
  sys.validate();
  const double amp = std::sqrt(sys.gamma);
  std::vector<Operator> ops;
  ops.reserve(2 * sys.atoms);
  for (int a = 0; a < sys.atoms; ++a) {
    for (Level g : {Level::kOne, Level::kZero}) {
      ops.push_back(amp * embed_single_atom(transition(g, Level::kRydberg), a, sys.atoms));
    }
  }
  return ops;
}

int LindbladModel::local_index(const BasisKet& ket) const {
  if (static_cast<int>(ket.atom_count()) != atoms) return -1;
  return global_to_local[basis_index(ket)];
}

Operator LindbladModel::dense_hamiltonian(std::array<Complex, kDriveChannels> drive) const {
  Operator h = Operator::Zero(dim, dim);
  for (int i = 0; i < dim; ++i) h(i, i) = energy[i];
  for (const Coupling& c : couplings) {
    const Complex half = drive[c.channel] / 2.0;
    h(c.lower, c.upper) += half;
    h(c.upper, c.lower) += std::conj(half);
  }
  return h;
}

LindbladModel build_lindblad_model(const GateSystem& sys,
                                   const Eigen::MatrixXd& interactions,
                                   std::span<const std::vector<Level>> allowed) {
  sys.validate();
  check_interactions(sys, interactions);
  const int n = sys.atoms;
  if (static_cast<int>(allowed.size()) != n) {
    throw std::invalid_argument("need one allowed-level set per atom");
  }
  auto permitted = [&](int atom, Level l) {
    return std::find(allowed[atom].begin(), allowed[atom].end(), l) != allowed[atom].end();
  };
  // Closure under the drives.
  for (int a = 0; a < n; ++a) {
    if (allowed[a].empty()) throw std::invalid_argument("empty level set");
    if (permitted(a, Level::kZero) != permitted(a, Level::kRydberg)) {
      throw std::invalid_argument("subspace not closed under the |0> <-> |r> drive");
    }
    if (a == sys.target() && permitted(a, Level::kOne) != permitted(a, Level::kRydberg)) {
      throw std::invalid_argument("subspace not closed under the |1> <-> |r> drive");
    }
  }

  LindbladModel m;
  m.atoms = n;
  m.gamma = sys.gamma;
  const int full_dim = hilbert_dim(n);
  m.global_to_local.assign(full_dim, -1);
  for (int g = 0; g < full_dim; ++g) {
    BasisKet ket = ket_from_index(g, n);
    bool inside = true;
    for (int a = 0; a < n && inside; ++a) inside = permitted(a, ket[a]);
    if (!inside) continue;
    m.global_to_local[g] = static_cast<int>(m.kets.size());
    m.kets.push_back(std::move(ket));
  }
  const int kets = static_cast<int>(m.kets.size());

  // Decay branches that leave the subspace need a sink.
  std::vector<int> to_sink;  // sources whose decay leaves the subspace
  std::vector<LindbladModel::Jump> jumps;
  for (int a = 0; a < n; ++a) {
    for (Level g : {Level::kOne, Level::kZero}) {
      LindbladModel::Jump jump;
      for (int k = 0; k < kets; ++k) {
        if (m.kets[k][a] != Level::kRydberg) continue;
        std::vector<Level> dest = m.kets[k].levels();
        dest[a] = g;
        const int to = m.global_to_local[basis_index(BasisKet(dest))];
        if (to >= 0) {
          jump.entries.emplace_back(to, k);
        } else {
          to_sink.push_back(k);
        }
      }
      if (!jump.entries.empty()) jumps.push_back(std::move(jump));
    }
  }
  m.has_sink = !to_sink.empty();
  m.dim = kets + (m.has_sink ? 1 : 0);
  const int sink = m.dim - 1;
  for (int source : to_sink) {
    jumps.push_back(LindbladModel::Jump{{{sink, source}}});
  }
  m.jumps = std::move(jumps);

  m.energy.assign(m.dim, 0.0);
  m.loss.assign(m.dim, 0.0);
  for (int k = 0; k < kets; ++k) {
    int rydberg = 0;
    for (int a = 0; a < n; ++a) {
      if (m.kets[k][a] != Level::kRydberg) continue;
      ++rydberg;
      for (int b = a + 1; b < n; ++b) {
        if (m.kets[k][b] == Level::kRydberg) m.energy[k] += interactions(a, b);
      }
    }
    // Two decay branches per Rydberg atom, each at the full rate.
    m.loss[k] = 2.0 * sys.gamma * rydberg;
  }

  for (int k = 0; k < kets; ++k) {
    for (int a = 0; a < n; ++a) {
      const Level l = m.kets[k][a];
      const bool ch0 = l == Level::kZero;
      const bool ch1 = l == Level::kOne && a == sys.target();
      if (!ch0 && !ch1) continue;
      std::vector<Level> up = m.kets[k].levels();
      up[a] = Level::kRydberg;
      const int u = m.global_to_local[basis_index(BasisKet(up))];
      m.couplings.push_back({k, u, ch0 ? 0 : 1});
    }
  }
  return m;
}

LindbladModel build_full_model(const GateSystem& sys, const Eigen::MatrixXd& interactions) {
  const std::vector<Level> all{Level::kZero, Level::kOne, Level::kRydberg};
  std::vector<std::vector<Level>> allowed(sys.atoms, all);
  return build_lindblad_model(sys, interactions, allowed);
}

LindbladModel build_sector_model(const GateSystem& sys, const Eigen::MatrixXd& interactions,
                                 const BasisKet& input) {
  if (static_cast<int>(input.atom_count()) != sys.atoms) {
    throw std::invalid_argument("input ket has the wrong atom count");
  }
  std::vector<std::vector<Level>> allowed(sys.atoms);
  for (int a = 0; a < sys.atoms; ++a) {
    if (input[a] == Level::kRydberg) {
      throw std::invalid_argument("sector models start from computational states");
    }
    if (sys.is_control(a)) {
      allowed[a] = input[a] == Level::kOne ? std::vector<Level>{Level::kOne}
                                           : std::vector<Level>{Level::kZero, Level::kRydberg};
    } else {
      allowed[a] = {Level::kZero, Level::kOne, Level::kRydberg};
    }
  }
  return build_lindblad_model(sys, interactions, allowed);
}

}  // namespace rydgate
