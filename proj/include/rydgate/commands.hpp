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

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "rydgate/config.hpp"

namespace rydgate {

/// Process exit codes of the command-line tool.
enum ExitCode : int { kExitOk = 0, kExitFailure = 1, kExitConfig = 2, kExitNumerical = 3 };

struct CommandOptions {
  std::filesystem::path out_dir = ".";
  int threads = 1;                    // 0 = hardware concurrency
  std::optional<std::string> axis;    // scan: overrides scan.axis
  std::vector<double> grid;           // scan: overrides scan.grid when non-empty
  bool selftest = false;              // optimize: quadratic self-test
  bool verbose = false;               // progress lines on stderr
};

/// Each command writes its CSV/JSON files into opts.out_dir and returns the
/// JSON summary (also written as <command>.json). Output is a pure function
/// of the config and seed.
nlohmann::json cmd_simulate(const RunConfig& cfg, const CommandOptions& opts);
nlohmann::json cmd_optimize(const RunConfig& cfg, const CommandOptions& opts);
nlohmann::json cmd_scan(const RunConfig& cfg, const CommandOptions& opts);
nlohmann::json cmd_leakage(const RunConfig& cfg, const CommandOptions& opts);

/// Default grid for a scan axis.
std::vector<double> default_scan_grid(const std::string& axis);

/// Shortest text that parses back to exactly the same double.
std::string format_double(double v);

}  // namespace rydgate
