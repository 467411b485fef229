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

// Thin bindings: configs and summaries cross the boundary as JSON text so the
// Python side sees exactly what the command-line tool writes.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "rydgate/commands.hpp"
#include "rydgate/config.hpp"
#include "rydgate/fidelity.hpp"
#include "rydgate/leakage.hpp"
#include "rydgate/noise.hpp"
#include "rydgate/units.hpp"

namespace py = pybind11;

namespace {

using rydgate::CommandOptions;
using rydgate::RunConfig;

using Command = nlohmann::json (*)(const RunConfig&, const CommandOptions&);

std::string run(Command cmd, const std::string& config_json, const std::string& out_dir,
                int threads, const std::optional<std::string>& axis, std::vector<double> grid,
                bool selftest) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(config_json);
  } catch (const nlohmann::json::parse_error& e) {
    throw rydgate::ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
  const RunConfig cfg = rydgate::parse_config(doc);
  CommandOptions opts;
  opts.out_dir = out_dir;
  opts.threads = threads;
  opts.axis = axis;
  opts.grid = std::move(grid);
  opts.selftest = selftest;
  nlohmann::json out;
  {
    py::gil_scoped_release release;
    out = cmd(cfg, opts);
  }
  return out.dump();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Rydberg CNOT/Toffoli gate simulator";

  py::register_exception<rydgate::ConfigError>(m, "ConfigError", PyExc_ValueError);
  py::register_exception<rydgate::NumericalError>(m, "NumericalError", PyExc_RuntimeError);

  const auto bind_command = [&](const char* name, Command cmd) {
    m.def(
        name,
        [cmd](const std::string& config_json, const std::string& out_dir, int threads,
              std::optional<std::string> axis, std::vector<double> grid, bool selftest) {
          return run(cmd, config_json, out_dir, threads, axis, std::move(grid), selftest);
        },
        py::arg("config_json"), py::arg("out_dir"), py::arg("threads") = 1,
        py::arg("axis") = py::none(), py::arg("grid") = std::vector<double>{},
        py::arg("selftest") = false);
  };
  bind_command("simulate", rydgate::cmd_simulate);
  bind_command("optimize", rydgate::cmd_optimize);
  bind_command("scan", rydgate::cmd_scan);
  bind_command("leakage", rydgate::cmd_leakage);

  m.def("doppler_sigma", &rydgate::doppler_sigma, py::arg("temperature_uk"),
        "Doppler detuning spread k v_rms in rad/us (the figure usually quoted in MHz).");

  m.def("leakage_oracle",
        [](double coupling_mhz, double defect_mhz) {
          return rydgate::leakage_oracle(rydgate::mhz_to_angular(coupling_mhz),
                                         rydgate::mhz_to_angular(defect_mhz));
        },
        py::arg("coupling_mhz"), py::arg("defect_mhz"),
        "Time-averaged two-level leakage 2B^2/(4B^2 + delta^2).");

  m.def("single_channel_leakage",
        [](double coupling_mhz, double defect_mhz, double window_us) {
          return rydgate::single_channel_leakage(rydgate::mhz_to_angular(coupling_mhz),
                                                 rydgate::mhz_to_angular(defect_mhz), window_us);
        },
        py::arg("coupling_mhz"), py::arg("defect_mhz"), py::arg("window_us") = 1.0);
}
