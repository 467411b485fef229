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
#include "rydgate/model.hpp"
#include "rydgate/units.hpp"

using namespace rydgate;
using testing::pulses_of;

namespace {

PulseSet zero_pulses(double duration = 1.0) {
  return PulseSet::two_pulse(PulseWaveform(0, 0, 0, duration), PulseWaveform(0, 0, 0, duration));
}

// Swaps the two controls of a 3-atom operator.
Operator swap_controls(const Operator& h) {
  Eigen::PermutationMatrix<Eigen::Dynamic> p(27);
  for (int i = 0; i < 27; ++i) {
    const BasisKet k = ket_from_index(i, 3);
    p.indices()[i] = basis_index(BasisKet(std::vector<Level>{k[1], k[0], k[2]}));
  }
  return p * h * p.transpose();
}

}  // namespace

TEST_CASE("interaction geometry") {
  const GateSystem two = GateSystem::two_atom(mhz_to_angular(7.0), 0.003);
  CHECK(two.target() == 1);
  CHECK(two.is_control(0));
  CHECK_FALSE(two.is_control(1));
  CHECK(two.r0 == doctest::Approx(std::pow(constants::kDefaultC6 / mhz_to_angular(7.0), 1.0 / 6)));

  const GateSystem three = GateSystem::three_atom_line(64.0, 0.0);
  CHECK(three.interactions(0, 2) == 64.0);
  CHECK(three.interactions(1, 2) == 64.0);
  CHECK(three.interactions(0, 1) == doctest::Approx(1.0));
  CHECK_THROWS(GateSystem::make(4, 1.0, 0.0));
  CHECK_THROWS(GateSystem::make(2, 1.0, -1e-3));
}

TEST_CASE("hamiltonian examples") {
  const GateSystem sys = testing::system_at(7.0);
  const PulseSet p = pulses_of(testing::two_pulse_v7());
  const int rr = basis_index({2, 2});
  for (double t : {0.0, 0.3, 1.0}) {
    CHECK(hamiltonian(sys, p, t)(rr, rr).real() == doctest::Approx(mhz_to_angular(7.0)));
  }

  SUBCASE("no coupling out of |11> when omega2 is off") {
    const PulseSet only1 = PulseSet::two_pulse(p.omega1, PulseWaveform(0, 0, 0, 1.0));
    const Operator h = hamiltonian(sys, only1, 0.4);
    CHECK(h(basis_index({1, 1}), basis_index({1, 2})) == Complex(0.0));
  }
  SUBCASE("all pulses zero leaves V|rr><rr|") {
    Operator expected = Operator::Zero(9, 9);
    expected(rr, rr) = mhz_to_angular(7.0);
    CHECK((hamiltonian(sys, zero_pulses(), 0.5) - expected).norm() == 0.0);
  }
  CHECK_THROWS(hamiltonian(sys, p, 1.5));
}

TEST_CASE("hamiltonian properties") {
  const GateSystem three = testing::system_at(7.0, 3.0, 3);
  for (const auto& row : testing::two_pulse_rows()) {
    const PulseSet p = pulses_of(row);
    for (double t = 0.0; t <= 1.0; t += 0.125) {
      const Operator h2 = hamiltonian(testing::system_at(row.v0_mhz), p, t, 0.4, -0.2);
      CHECK(hermiticity_defect(h2) < 1e-12);
      const Operator real_h = hamiltonian(testing::system_at(row.v0_mhz), p, t);
      CHECK(real_h.imag().norm() < 1e-12);
      const Operator h3 = hamiltonian(three, p, t);
      CHECK((swap_controls(h3) - h3).norm() < 1e-12);
    }
  }
}

TEST_CASE("collapse operators") {
  const GateSystem sys = GateSystem::two_atom(1.0, 0.003);
  const std::vector<Operator> ls = collapse_operators(sys);
  REQUIRE(ls.size() == 4);
  const double a = std::sqrt(0.003);
  // L1..L4: control r->1, control r->0, target r->1, target r->0
  CHECK(std::abs(ls[0](basis_index({1, 0}), basis_index({2, 0})) - a) < 1e-15);
  CHECK(std::abs(ls[1](basis_index({0, 1}), basis_index({2, 1})) - a) < 1e-15);
  CHECK(std::abs(ls[2](basis_index({0, 1}), basis_index({0, 2})) - a) < 1e-15);
  CHECK(std::abs(ls[2](basis_index({2, 1}), basis_index({2, 2})) - a) < 1e-15);
  CHECK(std::abs(ls[3](basis_index({1, 0}), basis_index({1, 2})) - a) < 1e-15);
  for (const Operator& l : ls) CHECK((l.array().abs() > 0).count() == 3);

  for (const Operator& l : collapse_operators(sys.with_gamma(0.0))) CHECK(l.norm() == 0.0);

  const std::vector<Operator> l3 = collapse_operators(GateSystem::make(3, 1.0, 0.01));
  REQUIRE(l3.size() == 6);
  for (const Operator& l : l3) {
    CHECK((l.array().abs() > 0).count() == 9);
    CHECK(l.cwiseAbs().maxCoeff() == doctest::Approx(std::sqrt(0.01)));
  }
}

TEST_CASE("sparse model reproduces the dense generator") {
  const GateSystem sys = testing::system_at(7.0, 3.0, 3);
  const PulseSet p = pulses_of(testing::two_pulse_v7());
  const LindbladModel m = build_full_model(sys, sys.interactions);
  CHECK(m.dim == 27);
  CHECK_FALSE(m.has_sink);
  for (double t : {0.0, 0.37, 0.9}) {
    const std::array<Complex, kDriveChannels> drive{p.omega1.evaluate(t), p.omega2.evaluate(t)};
    CHECK((m.dense_hamiltonian(drive) - hamiltonian(sys, p, t)).norm() < 1e-12);
  }
  Operator ldl = Operator::Zero(27, 27);
  for (const Operator& l : collapse_operators(sys)) ldl += l.adjoint() * l;
  for (int i = 0; i < 27; ++i) CHECK(m.loss[i] == doctest::Approx(ldl(i, i).real()));
}

TEST_CASE("sector models") {
  const GateSystem sys = testing::system_at(7.0);
  CHECK(build_sector_model(sys, sys.interactions, BasisKet{1, 0}).dim == 3);
  const LindbladModel m0 = build_sector_model(sys, sys.interactions, BasisKet{0, 1});
  CHECK(m0.dim == 7);
  CHECK(m0.has_sink);
  CHECK(m0.local_index(BasisKet{1, 1}) == -1);

  const GateSystem three = testing::system_at(7.0, 3.0, 3);
  CHECK(build_sector_model(three, three.interactions, BasisKet{0, 0, 1}).dim == 13);
  CHECK(build_sector_model(three, three.interactions, BasisKet{0, 1, 0}).dim == 7);
  CHECK(build_sector_model(three, three.interactions, BasisKet{1, 1, 0}).dim == 3);
  CHECK_THROWS(build_sector_model(sys, sys.interactions, BasisKet{2, 0}));

  const std::vector<std::vector<Level>> open{{Level::kZero}, {Level::kZero, Level::kOne, Level::kRydberg}};
  CHECK_THROWS(build_lindblad_model(sys, sys.interactions, open));
}
