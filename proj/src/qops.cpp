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

#include "rydgate/qops.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace rydgate {

char level_symbol(Level level) {
  switch (level) {
    case Level::kZero:
      return '0';
    case Level::kOne:
      return '1';
    case Level::kRydberg:
      return 'r';
  }
  return '?';
}

BasisKet::BasisKet(std::initializer_list<int> levels) {
  levels_.reserve(levels.size());
  for (int v : levels) {
    if (v < 0 || v >= kLevelsPerAtom) {
      throw std::invalid_argument("level index must be 0, 1 or 2, got " +
                                  std::to_string(v));
    }
    levels_.push_back(static_cast<Level>(v));
  }
}

BasisKet::BasisKet(std::vector<Level> levels) : levels_(std::move(levels)) {}

std::string BasisKet::label() const {
  std::string s;
  for (Level l : levels_) s.push_back(level_symbol(l));
  return s;
}

int hilbert_dim(int atoms) {
  if (atoms < 1 || atoms > kMaxAtoms) {
    throw std::invalid_argument("atom count must be in [1, 3], got " +
                                std::to_string(atoms));
  }
  int dim = 1;
  for (int i = 0; i < atoms; ++i) dim *= kLevelsPerAtom;
  return dim;
}

int basis_index(const BasisKet& ket) {
  int index = 0;
  for (Level l : ket.levels()) index = index * kLevelsPerAtom + static_cast<int>(l);
  return index;
}

BasisKet ket_from_index(int index, int atoms) {
  const int dim = hilbert_dim(atoms);
  if (index < 0 || index >= dim) {
    throw std::out_of_range("basis index " + std::to_string(index) +
                            " outside [0, " + std::to_string(dim) + ")");
  }
  std::vector<Level> levels(atoms);
  for (int a = atoms - 1; a >= 0; --a) {
    levels[a] = static_cast<Level>(index % kLevelsPerAtom);
    index /= kLevelsPerAtom;
  }
  return BasisKet(std::move(levels));
}

Eigen::Matrix3cd transition(Level to, Level from) {
  Eigen::Matrix3cd m = Eigen::Matrix3cd::Zero();
  m(static_cast<int>(to), static_cast<int>(from)) = 1.0;
  return m;
}

Operator embed_single_atom(const Eigen::Matrix3cd& op3, int atom, int atoms) {
  if (atom < 0 || atom >= atoms) {
    throw std::out_of_range("atom " + std::to_string(atom) +
                            " out of range for a " + std::to_string(atoms) +
                            "-atom register");
  }
  const int dim = hilbert_dim(atoms);
  int stride = 1;  // weight of `atom` in the base-3 index
  for (int a = atoms - 1; a > atom; --a) stride *= kLevelsPerAtom;

  Operator out = Operator::Zero(dim, dim);
  for (int col = 0; col < dim; ++col) {
    const int level_in = (col / stride) % kLevelsPerAtom;
    const int rest = col - level_in * stride;
    for (int level_out = 0; level_out < kLevelsPerAtom; ++level_out) {
      const Complex v = op3(level_out, level_in);
      if (v != Complex{}) out(rest + level_out * stride, col) += v;
    }
  }
  return out;
}

DensityMatrix::DensityMatrix(Operator matrix) : DensityMatrix(std::move(matrix), kEigenvalueTol) {}

DensityMatrix::DensityMatrix(Operator matrix, double eigenvalue_tol)
    : matrix_(std::move(matrix)) {
  if (matrix_.rows() != matrix_.cols()) {
    throw std::invalid_argument("density matrix must be square");
  }
  if (!matrix_.allFinite()) {
    throw std::invalid_argument("density matrix has non-finite entries");
  }
  const double herm = hermiticity_defect(matrix_);
  if (herm > kHermiticityTol) {
    std::ostringstream os;
    os << "density matrix not Hermitian (defect " << herm << ")";
    throw std::invalid_argument(os.str());
  }
  const Complex tr = matrix_.trace();
  if (std::abs(tr - 1.0) > kTraceTol) {
    std::ostringstream os;
    os << "density matrix trace " << tr << " differs from 1";
    throw std::invalid_argument(os.str());
  }
  const double min_eig = min_eigenvalue();
  if (min_eig < eigenvalue_tol) {
    std::ostringstream os;
    os << "density matrix has negative eigenvalue " << min_eig;
    throw std::invalid_argument(os.str());
  }
}

DensityMatrix DensityMatrix::pure(const BasisKet& ket) {
  const int dim = hilbert_dim(static_cast<int>(ket.atom_count()));
  Operator m = Operator::Zero(dim, dim);
  const int i = basis_index(ket);
  m(i, i) = 1.0;
  return DensityMatrix(std::move(m));
}

DensityMatrix DensityMatrix::pure(const StateVector& psi) {
  return DensityMatrix(psi * psi.adjoint());
}

DensityMatrix DensityMatrix::maximally_mixed(int dim) {
  return DensityMatrix(Operator::Identity(dim, dim) / static_cast<double>(dim));
}

double DensityMatrix::purity() const {
  return (matrix_ * matrix_).trace().real();
}

double DensityMatrix::min_eigenvalue() const {
  Eigen::SelfAdjointEigenSolver<Operator> solver(hermitize(matrix_),
                                                 Eigen::EigenvaluesOnly);
  return solver.eigenvalues().minCoeff();
}

double expectation(const Operator& rho, const BasisKet& ket) {
  const int dim = hilbert_dim(static_cast<int>(ket.atom_count()));
  if (rho.rows() != dim || rho.cols() != dim) {
    throw std::invalid_argument("expectation: ket of dimension " +
                                std::to_string(dim) +
                                " does not match operator of dimension " +
                                std::to_string(rho.rows()));
  }
  const int i = basis_index(ket);
  const Complex v = rho(i, i);
  if (std::abs(v.imag()) >= 1e-10) {
    throw std::domain_error("expectation has imaginary part " +
                            std::to_string(v.imag()));
  }
  return v.real();
}

double expectation(const DensityMatrix& rho, const BasisKet& ket) {
  return expectation(rho.matrix(), ket);
}

Operator hermitize(const Operator& a) { return 0.5 * (a + a.adjoint()); }

double hermiticity_defect(const Operator& a) {
  if (a.size() == 0) return 0.0;
  return (a - a.adjoint()).cwiseAbs().maxCoeff();
}

}  // namespace rydgate
