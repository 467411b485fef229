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
#include <span>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "rydgate/noise_realization.hpp"
#include "rydgate/pulses.hpp"
#include "rydgate/qops.hpp"
#include "rydgate/units.hpp"

namespace rydgate {

/// Atoms, their roles and couplings. Atom n-1 is the target; all others are
/// controls. For the three-atom line the controls sit on the outside, so the
/// control-control interaction is V0 / 2^6.
struct GateSystem {
  int atoms = 2;
  Eigen::MatrixXd interactions;  // symmetric, zero diagonal, rad/us
  double gamma = 0.0;            // per decay channel, 1/us
  double c6 = constants::kDefaultC6;  // rad/us um^6
  double r0 = 0.0;               // nominal nearest-neighbour spacing, um

  static GateSystem two_atom(double v0, double gamma,
                             double c6 = constants::kDefaultC6);
  static GateSystem three_atom_line(double v0, double gamma,
                                    double c6 = constants::kDefaultC6);
  /// Two or three atoms at nearest-neighbour interaction v0.
  static GateSystem make(int atoms, double v0, double gamma,
                         double c6 = constants::kDefaultC6);

  int target() const { return atoms - 1; }
  bool is_control(int atom) const { return atom < target(); }
  int dim() const { return hilbert_dim(atoms); }
  double nominal_interaction() const { return interactions(0, atoms - 1); }

  GateSystem with_gamma(double g) const;

  /// Throws std::invalid_argument on any broken invariant.
  void validate() const;
};

/// V0 = C6 / r^6 and its inverse.
double interaction_at(double c6, double r);
double spacing_for(double c6, double v0);

/// Pairwise interaction matrix for the system's geometry at spacing-derived
/// nearest-neighbour strength v0.
Eigen::MatrixXd line_interactions(int atoms, double v0);

/// Full 3^n Hamiltonian at time t:
///   sum_a [Omega1/2 |0><r|_a + h.c.] + [Omega2/2 |1><r|_target + h.c.]
///   + sum_{a<b} V_ab |rr><rr|_ab
Operator hamiltonian(const GateSystem& sys, const PulseSet& pulses, double t,
                     double detuning1 = 0.0, double detuning2 = 0.0);
Operator hamiltonian(const GateSystem& sys, const PulseSet& pulses, double t,
                     const NoiseRealization& noise);

/// sqrt(gamma) |g><r| on every atom, ordered atom by atom with g = 1 before
/// g = 0. For two atoms this is L1 (control r->1), L2 (control r->0),
/// L3 (target r->1), L4 (target r->0).
std::vector<Operator> collapse_operators(const GateSystem& sys);

/// Drive channel 0 is omega1 (|0> <-> |r>, every atom); channel 1 is omega2
/// (|1> <-> |r>, target only).
inline constexpr int kDriveChannels = 2;

/// Sparse form of the master equation restricted to a product subspace of
/// allowed levels per atom, optionally with one extra "sink" state that
/// collects population decaying out of the subspace.
///
/// The subspace must be closed under the drives. A control atom that starts
/// in |1> is never driven, so restricting it to {1} is exact; a control
/// starting in |0> can only leave {0, r} by decaying to |1>, after which it is
/// inert, so that decay branch is routed to the sink.
struct LindbladModel {
  struct Coupling {
    int lower;    // local index of the ground-level ket
    int upper;    // local index of the ket with that atom in |r>
    int channel;  // 0 = omega1, 1 = omega2
  };
  /// sqrt(gamma) * sum |to><from|
  struct Jump {
    std::vector<std::pair<int, int>> entries;  // (to, from)
  };

  int atoms = 0;
  int dim = 0;
  std::vector<BasisKet> kets;  // local basis; sink (if any) is index dim-1
  bool has_sink = false;
  double gamma = 0.0;
  std::vector<double> energy;  // diagonal interaction energies
  std::vector<double> loss;    // diagonal of sum_j L_j^dagger L_j
  std::vector<Coupling> couplings;
  std::vector<Jump> jumps;

  /// Local index of a ket, or -1 when it is outside the subspace.
  int local_index(const BasisKet& ket) const;

  /// Dense Hamiltonian in the local basis for the given channel amplitudes.
  Operator dense_hamiltonian(std::array<Complex, kDriveChannels> drive) const;

  std::vector<int> global_to_local;  // size 3^n, -1 where absent
};

/// Every atom restricted to `allowed[atom]` (ascending level order).
LindbladModel build_lindblad_model(const GateSystem& sys,
                                   const Eigen::MatrixXd& interactions,
                                   std::span<const std::vector<Level>> allowed);

/// All 3^n levels; local index equals basis_index.
LindbladModel build_full_model(const GateSystem& sys,
                               const Eigen::MatrixXd& interactions);

/// Smallest exact subspace for a computational input state.
LindbladModel build_sector_model(const GateSystem& sys,
                                 const Eigen::MatrixXd& interactions,
                                 const BasisKet& input);

}  // namespace rydgate
