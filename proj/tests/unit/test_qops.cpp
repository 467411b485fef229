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

#include <random>
#include <set>

#include "doctest.h"
#include "rydgate/qops.hpp"

using namespace rydgate;

TEST_CASE("basis_index encodes base 3 with the first atom most significant") {
  CHECK(basis_index(BasisKet{0, 0}) == 0);
  CHECK(basis_index(BasisKet{2, 2}) == 8);
  CHECK(basis_index(BasisKet{1, 0, 1}) == 10);
  CHECK(BasisKet{0, 2, 1}.label() == "0r1");
}

TEST_CASE("basis_index is a bijection onto [0, 3^n)") {
  for (int n : {1, 2, 3}) {
    std::set<int> seen;
    for (int i = 0; i < hilbert_dim(n); ++i) {
      const BasisKet k = ket_from_index(i, n);
      CHECK(basis_index(k) == i);
      seen.insert(basis_index(k));
    }
    CHECK(static_cast<int>(seen.size()) == hilbert_dim(n));
  }
  CHECK_THROWS(ket_from_index(9, 2));
  CHECK_THROWS(BasisKet{0, 3});
}

TEST_CASE("embed_single_atom") {
  SUBCASE("identity embeds to identity") {
    for (int a : {0, 1}) {
      CHECK(embed_single_atom(Eigen::Matrix3cd::Identity(), a, 2).isApprox(Operator::Identity(9, 9)));
    }
  }
  SUBCASE("|0><r| on atom 0 touches only (0l, rl)") {
    const Operator op = embed_single_atom(transition(Level::kZero, Level::kRydberg), 0, 2);
    for (int i = 0; i < 9; ++i) {
      for (int j = 0; j < 9; ++j) {
        const BasisKet bi = ket_from_index(i, 2), bj = ket_from_index(j, 2);
        const bool expected = bi[0] == Level::kZero && bj[0] == Level::kRydberg && bi[1] == bj[1];
        CHECK(std::abs(op(i, j)) == doctest::Approx(expected ? 1.0 : 0.0));
      }
    }
  }
  SUBCASE("|1><r| on atom 1 has the pattern |01><0r| + |11><1r| + |r1><rr|") {
    const Operator op = embed_single_atom(transition(Level::kOne, Level::kRydberg), 1, 2);
    Operator expected = Operator::Zero(9, 9);
    expected(basis_index({0, 1}), basis_index({0, 2})) = 1.0;
    expected(basis_index({1, 1}), basis_index({1, 2})) = 1.0;
    expected(basis_index({2, 1}), basis_index({2, 2})) = 1.0;
    CHECK((op - expected).norm() == 0.0);
  }
  SUBCASE("product at one slot equals the embedded product") {
    std::mt19937_64 rng(4);
    std::normal_distribution<double> g;
    for (int trial = 0; trial < 5; ++trial) {
      Eigen::Matrix3cd a, b;
      for (int i = 0; i < 9; ++i) {
        a.data()[i] = {g(rng), g(rng)};
        b.data()[i] = {g(rng), g(rng)};
      }
      for (int atom = 0; atom < 3; ++atom) {
        const Operator lhs = embed_single_atom(a, atom, 3) * embed_single_atom(b, atom, 3);
        CHECK((lhs - embed_single_atom(a * b, atom, 3)).norm() < 1e-12);
      }
    }
  }
  CHECK_THROWS_AS(embed_single_atom(Eigen::Matrix3cd::Identity(), 2, 2), std::out_of_range);
}

TEST_CASE("expectation") {
  const DensityMatrix rho = DensityMatrix::pure(BasisKet{0, 0});
  CHECK(expectation(rho, BasisKet{0, 0}) == 1.0);
  CHECK(expectation(rho, BasisKet{1, 1}) == 0.0);
  const DensityMatrix mixed = DensityMatrix::maximally_mixed(9);
  for (int i = 0; i < 9; ++i) CHECK(expectation(mixed, ket_from_index(i, 2)) == doctest::Approx(1.0 / 9));
  CHECK_THROWS(expectation(rho, BasisKet{0, 0, 0}));
}

TEST_CASE("DensityMatrix rejects broken invariants") {
  Operator m = Operator::Zero(3, 3);
  m(0, 0) = 0.5;
  CHECK_THROWS(DensityMatrix{m});  // trace 0.5
  m(1, 1) = 0.5;
  m(0, 1) = Complex(0.0, 0.1);     // not Hermitian
  CHECK_THROWS(DensityMatrix{m});
  m(1, 0) = Complex(0.0, -0.1);
  CHECK_NOTHROW(DensityMatrix{m});
  Operator neg = Operator::Zero(2, 2);
  neg(0, 0) = 1.5;
  neg(1, 1) = -0.5;
  CHECK_THROWS(DensityMatrix{neg});
  CHECK(DensityMatrix::pure(BasisKet{1, 2}).purity() == doctest::Approx(1.0));
}

TEST_CASE("hermitize is idempotent and preserves the trace exactly") {
  std::mt19937_64 rng(9);
  std::normal_distribution<double> g;
  Operator a(9, 9);
  for (int i = 0; i < 81; ++i) a.data()[i] = {g(rng), g(rng)};
  const Operator h = hermitize(a);
  CHECK(hermiticity_defect(h) == 0.0);
  CHECK((hermitize(h) - h).norm() == 0.0);
  CHECK(h.trace().real() == a.trace().real());
}
