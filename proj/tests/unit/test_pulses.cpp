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
#include "rydgate/pulses.hpp"
#include "rydgate/units.hpp"

using namespace rydgate;

TEST_CASE("evaluate at the endpoints and the midpoint") {
  const PulseWaveform w = PulseWaveform::from_mhz({-3.9621, -0.7858, 1.5915}, 1.0);
  CHECK(w.evaluate(0.0).real() == doctest::Approx(mhz_to_angular(-4.7479)).epsilon(1e-12));
  CHECK(w.evaluate(0.0).imag() == 0.0);
  CHECK(std::abs(w.evaluate(1.0) - w.evaluate(0.0)) < 1e-12);
  CHECK(w.evaluate(0.5).real() ==
        doctest::Approx(w.a0() - w.a_cos() + w.a_sin()).epsilon(1e-12));
}

TEST_CASE("evaluate rejects times outside the gate") {
  const PulseWaveform w(1.0, 0.0, 0.0, 2.0);
  CHECK_THROWS_AS(w.evaluate(-1e-9), std::out_of_range);
  CHECK_THROWS_AS(w.evaluate(2.0 + 1e-9), std::out_of_range);
  CHECK_NOTHROW(w.evaluate(2.0));
}

TEST_CASE("waveform construction validates its inputs") {
  CHECK_THROWS(PulseWaveform(1.0, 0.0, 0.0, 0.0));
  CHECK_THROWS(PulseWaveform(NAN, 0.0, 0.0, 1.0));
  CHECK_THROWS(PulseWaveform(1.0, INFINITY, 0.0, 1.0));
}

TEST_CASE("|Omega| does not depend on detuning or phase") {
  for (double phase : {0.0, 0.7, 3.14159}) {
    const PulseWaveform w(2.0, -3.0, 5.0, 1.3, phase);
    const PulseWaveform w0(2.0, -3.0, 5.0, 1.3, 0.0);
    for (double t = 0.0; t <= 1.3; t += 0.05) {
      for (double d : {0.0, 0.35, -2.0}) {
        CHECK(std::abs(w.evaluate(t, d)) == doctest::Approx(std::abs(w0.evaluate(t))));
      }
    }
  }
}

TEST_CASE("envelope is periodic-consistent for any coefficients") {
  for (double a : {-7.0, 0.0, 3.3}) {
    for (double b : {-2.0, 11.0}) {
      for (double c : {-5.0, 0.25}) {
        const PulseWaveform w(a, b, c, 1.7);
        CHECK(w.envelope(0.0) == doctest::Approx(w.envelope(1.7)).epsilon(1e-14));
      }
    }
  }
}

TEST_CASE("peak_to_peak") {
  CHECK(PulseWaveform(5.0, 0.0, 0.0, 1.0).peak_to_peak() == 0.0);
  CHECK(PulseWaveform::from_mhz({0.0, 1.0, 0.0}, 1.0).peak_to_peak() ==
        doctest::Approx(mhz_to_angular(2.0)).epsilon(1e-12));

  SUBCASE("agrees with a dense brute-force grid") {
    const PulseWaveform w = PulseWaveform::from_mhz({-0.7619, -15.7833, 8.9923}, 1.0);
    double lo = INFINITY, hi = -INFINITY;
    const int n = 1000000;
    for (int i = 0; i <= n; ++i) {
      const double e = w.envelope(static_cast<double>(i) / n);
      lo = std::min(lo, e);
      hi = std::max(hi, e);
    }
    CHECK(w.peak_to_peak() == doctest::Approx(hi - lo).epsilon(5e-5));
  }

  SUBCASE("invariant under a global sign flip") {
    for (const auto& row : testing::one_pulse_rows()) {
      const auto& c = row.omega;
      const PulseWaveform w = PulseWaveform::from_mhz(c, 1.0);
      const PulseWaveform m = PulseWaveform::from_mhz({-c[0], -c[1], -c[2]}, 1.0);
      CHECK(w.peak_to_peak() == doctest::Approx(m.peak_to_peak()).epsilon(1e-14));
    }
  }
}

TEST_CASE("pulse sets and parameter vectors") {
  CHECK(parameter_count(PulseMode::kOnePulse) == 3);
  CHECK(parameter_count(PulseMode::kTwoPulse) == 6);
  CHECK(pulse_mode_from_string("one-pulse") == PulseMode::kOnePulse);
  CHECK(to_string(PulseMode::kTwoPulse) == "two-pulse");
  CHECK_THROWS(pulse_mode_from_string("three-pulse"));

  const std::vector<double> p1{1.0, 2.0, 3.0};
  const PulseSet one = PulseSet::from_parameters(p1, PulseMode::kOnePulse, 1.0);
  CHECK(one.omega2.coefficients() == one.omega1.coefficients());
  CHECK(one.parameters() == p1);

  const std::vector<double> p2{1.0, 2.0, 3.0, -4.0, -5.0, -6.0};
  const PulseSet two = PulseSet::from_parameters(p2, PulseMode::kTwoPulse, 1.0);
  CHECK(two.omega2.a0() == -4.0);
  CHECK(two.parameters() == p2);
  CHECK_THROWS(PulseSet::from_parameters(p1, PulseMode::kTwoPulse, 1.0));
}
