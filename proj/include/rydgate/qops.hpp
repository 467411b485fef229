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

#include <complex>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace rydgate {

using Complex = std::complex<double>;
using Operator = Eigen::MatrixXcd;
using StateVector = Eigen::VectorXcd;

/// Atomic level of a single three-level atom.
enum class Level : std::uint8_t { kZero = 0, kOne = 1, kRydberg = 2 };

inline constexpr int kLevelsPerAtom = 3;
inline constexpr int kMaxAtoms = 3;

char level_symbol(Level level);

/// Product basis state, one level per atom. Controls come first and the
/// target atom is last: (control, target) or (control1, control2, target).
class BasisKet {
 public:
  BasisKet() = default;
  BasisKet(std::initializer_list<int> levels);
  explicit BasisKet(std::vector<Level> levels);

  std::size_t atom_count() const { return levels_.size(); }
  Level operator[](std::size_t atom) const { return levels_[atom]; }
  const std::vector<Level>& levels() const { return levels_; }

  /// e.g. "0r1".
  std::string label() const;

  friend bool operator==(const BasisKet&, const BasisKet&) = default;

 private:
  std::vector<Level> levels_;
};

/// 3^n for n atoms.
int hilbert_dim(int atoms);

/// Base-3 positional index, first atom most significant.
int basis_index(const BasisKet& ket);
BasisKet ket_from_index(int index, int atoms);

/// |to><from| on a single three-level atom.
Eigen::Matrix3cd transition(Level to, Level from);

/// op3 on `atom`, identity on every other atom of an n-atom register.
Operator embed_single_atom(const Eigen::Matrix3cd& op3, int atom, int atoms);

/// Hermitian, unit-trace, positive semidefinite state of a 3^n register.
/// Construction checks the invariants; it never repairs them.
class DensityMatrix {
 public:
  static constexpr double kHermiticityTol = 1e-10;
  static constexpr double kTraceTol = 1e-8;
  static constexpr double kEigenvalueTol = -1e-9;

  explicit DensityMatrix(Operator matrix);
  /// Same checks with a caller-chosen floor on the smallest eigenvalue, for
  /// states whose positivity is only as good as the integrator producing them.
  DensityMatrix(Operator matrix, double eigenvalue_tol);

  static DensityMatrix pure(const BasisKet& ket);
  static DensityMatrix pure(const StateVector& psi);
  static DensityMatrix maximally_mixed(int dim);

  int dim() const { return static_cast<int>(matrix_.rows()); }
  const Operator& matrix() const { return matrix_; }

  Complex trace() const { return matrix_.trace(); }
  double purity() const;
  double min_eigenvalue() const;

 private:
  Operator matrix_;
};

/// <ket|rho|ket>; throws on dimension mismatch or a non-negligible
/// imaginary part.
double expectation(const DensityMatrix& rho, const BasisKet& ket);
double expectation(const Operator& rho, const BasisKet& ket);

/// (A + A^dagger) / 2.
Operator hermitize(const Operator& a);

/// max |A - A^dagger|.
double hermiticity_defect(const Operator& a);

}  // namespace rydgate
