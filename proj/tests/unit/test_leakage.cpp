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
#include "rydgate/leakage.hpp"
#include "rydgate/units.hpp"

using namespace rydgate;

TEST_CASE("single channel") {
  CHECK(single_channel_leakage(0.0, 1.0, 1.0) == 0.0);
  const LeakageChannel c1 = default_leakage_channels()[0];
  const double b = c1.coupling(7.10);
  CHECK(angular_to_mhz(b) == doctest::Approx(22.18).epsilon(1e-3));
  const double e = single_channel_leakage(b, c1.defect, 1.0);
  CHECK(e == doctest::Approx(1.9e-3).epsilon(0.1));
  CHECK(leakage_oracle(b, c1.defect) == doctest::Approx(1.944e-3).epsilon(1e-3));
  CHECK(e == doctest::Approx(leakage_oracle(b, c1.defect)).epsilon(0.05));
}

TEST_CASE("single-channel leakage scales as r^-6 when B << delta") {
  for (const LeakageChannel& c : default_leakage_channels()) {
    const double near = single_channel_leakage(c.coupling(7.10), c.defect, 1.0);
    const double far = single_channel_leakage(c.coupling(9.76), c.defect, 1.0);
    CHECK(near / far == doctest::Approx(std::pow(9.76 / 7.10, 6)).epsilon(0.05));
  }
}

TEST_CASE("total leakage") {
  std::vector<LeakageChannel> off = default_leakage_channels();
  for (LeakageChannel& c : off) c.c3 = 0.0;
  CHECK(total_leakage(off, 7.10, 1.0) == 0.0);

  const auto rows = leakage_table(default_leakage_channels(), std::vector<double>{9.76, 7.10, 4.89}, 1.0);
  const double expected[3] = {4.3e-4, 2.9e-3, 2.5e-2};
  for (int i = 0; i < 3; ++i) {
    double sum = 0.0;
    for (double e : rows[i].single) sum += e;
    CHECK(rows[i].total <= 1.1 * sum);
    CHECK(rows[i].total >= 0.5 * sum);
    CHECK(rows[i].total == doctest::Approx(expected[i]).epsilon(0.25));
  }
}

TEST_CASE("channel validation") {
  CHECK_THROWS(LeakageChannel::from_ghz(1.0, 0.0));
  CHECK_THROWS(LeakageChannel::from_ghz(-1.0, 1.0));
  CHECK_THROWS(default_leakage_channels()[0].coupling(0.0));
}
