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

#include "rydgate/leakage.hpp"

#include <cmath>
#include <stdexcept>

#include "rydgate/parallel.hpp"
#include "rydgate/propagator.hpp"
#include "rydgate/qops.hpp"
#include "rydgate/units.hpp"

namespace rydgate {

namespace {

// Trapezoidal time average of 1 - |<0|psi(t)>|^2, state 0 being |rr>.
double averaged_escape(const Operator& h, double window) {
  if (!(window > 0.0)) throw std::invalid_argument("leakage window must be positive");
  StateVector psi0 = StateVector::Zero(h.rows());
  psi0(0) = 1.0;
  double integral = 0.0;
  double last_t = 0.0;
  double last_p = 0.0;
  propagate_pure(h, psi0, window, PureConfig{}, [&](double t, const StateVector& psi) {
    const double p = 1.0 - std::norm(psi(0));
    integral += 0.5 * (p + last_p) * (t - last_t);
    last_t = t;
    last_p = p;
  });
  return integral / window;
}

}  // namespace

LeakageChannel LeakageChannel::from_ghz(double c3_ghz, double defect_ghz) {
  LeakageChannel c{mhz_to_angular(c3_ghz * 1e3), mhz_to_angular(defect_ghz * 1e3)};
  c.validate();
  return c;
}

double LeakageChannel::coupling(double r0) const {
  if (!(r0 > 0.0)) throw std::invalid_argument("pair distance must be positive");
  return c3 / (r0 * r0 * r0);
}

void LeakageChannel::validate() const {
  if (!std::isfinite(c3) || c3 < 0.0) throw std::invalid_argument("C3 must be finite and >= 0");
  if (!std::isfinite(defect) || defect == 0.0) {
    throw std::invalid_argument("Foerster defect must be finite and non-zero");
  }
}

std::vector<LeakageChannel> default_leakage_channels() {
  return {LeakageChannel::from_ghz(7.94, 0.71), LeakageChannel::from_ghz(6.37, 1.01),
          LeakageChannel::from_ghz(6.59, 0.99), LeakageChannel::from_ghz(5.28, 1.29)};
}

double single_channel_leakage(double coupling, double defect, double window) {
  if (coupling == 0.0) return 0.0;
  Operator h = Operator::Zero(2, 2);
  h(0, 1) = h(1, 0) = coupling;
  h(1, 1) = defect;
  return averaged_escape(h, window);
}

double leakage_oracle(double coupling, double defect) {
  const double b2 = coupling * coupling;
  if (b2 == 0.0) return 0.0;
  return 2.0 * b2 / (4.0 * b2 + defect * defect);
}

double total_leakage(std::span<const LeakageChannel> channels, double r0, double window) {
  const int n = static_cast<int>(channels.size());
  Operator h = Operator::Zero(n + 1, n + 1);
  bool coupled = false;
  for (int j = 0; j < n; ++j) {
    channels[j].validate();
    const double b = channels[j].coupling(r0);
    coupled = coupled || b != 0.0;
    h(0, j + 1) = h(j + 1, 0) = b;
    h(j + 1, j + 1) = channels[j].defect;
  }
  if (!coupled) return 0.0;
  return averaged_escape(h, window);
}

std::vector<LeakageRow> leakage_table(std::span<const LeakageChannel> channels,
                                      std::span<const double> distances, double window,
                                      int threads) {
  std::vector<LeakageRow> rows(distances.size());
  parallel_for(distances.size(), threads, [&](std::size_t i) {
    LeakageRow& row = rows[i];
    row.r0 = distances[i];
    for (const LeakageChannel& c : channels) {
      c.validate();
      const double b = c.coupling(row.r0);
      row.coupling.push_back(b);
      row.single.push_back(single_channel_leakage(b, c.defect, window));
      row.oracle.push_back(leakage_oracle(b, c.defect));
    }
    row.total = total_leakage(channels, row.r0, window);
  });
  return rows;
}

}  // namespace rydgate
