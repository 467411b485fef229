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

// rydgate: simulate, optimize, scan and leakage workflows for Rydberg
// CNOT/Toffoli gates.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "rydgate/commands.hpp"
#include "rydgate/config.hpp"
#include "rydgate/units.hpp"

namespace {

using rydgate::CommandOptions;
using rydgate::RunConfig;

struct Common {
  std::string config;
  std::optional<std::uint64_t> seed;
  std::string out = ".";
  int threads = 1;
  std::optional<std::string> metric;
  bool verbose = false;
};

void add_common(CLI::App* cmd, Common& c, bool needs_config) {
  auto* opt = cmd->add_option("--config", c.config, "JSON run configuration");
  if (needs_config) opt->required();
  cmd->add_option("--seed", c.seed, "RNG seed (overrides the config)");
  cmd->add_option("--out", c.out, "output directory")->capture_default_str();
  cmd->add_option("--threads", c.threads, "worker cap; 0 = all cores")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  cmd->add_option("--metric", c.metric, "fidelity metric")
      ->check(CLI::IsMember({"population", "uhlmann"}));
  cmd->add_flag("-v,--verbose", c.verbose, "progress on stderr");
}

RunConfig resolve(const Common& c) {
  RunConfig cfg = c.config.empty() ? rydgate::parse_config(nlohmann::json::object())
                                   : rydgate::load_config(c.config);
  if (c.seed) {
    cfg.seed = *c.seed;
    cfg.ga.ga.seed = *c.seed;
  }
  if (c.metric) cfg.metric = rydgate::metric_mode_from_string(*c.metric);
  return cfg;
}

CommandOptions options(const Common& c) {
  CommandOptions o;
  o.out_dir = c.out;
  o.threads = c.threads;
  o.verbose = c.verbose;
  return o;
}

void report(const nlohmann::json& summary) {
  nlohmann::json brief = summary;
  brief.erase("config");
  brief.erase("rounds");
  std::cout << brief.dump(2) << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Open-system simulation and pulse optimization for Rydberg CNOT/Toffoli gates"};
  app.require_subcommand(1);

  Common sim, opt, scan, leak;
  auto* simulate = app.add_subcommand("simulate", "fidelity and population trajectories");
  add_common(simulate, sim, true);

  auto* optimize = app.add_subcommand("optimize", "genetic pulse optimization");
  add_common(optimize, opt, false);
  bool selftest = false;
  optimize->add_flag("--selftest", selftest, "optimize a quadratic with a known optimum");

  auto* scanner = app.add_subcommand("scan", "Monte-Carlo noise and decay scans");
  add_common(scanner, scan, true);
  std::optional<std::string> axis;
  std::vector<double> grid;
  scanner->add_option("--axis", axis, "sigma_x | Ta | delta_omega | gamma");
  scanner->add_option("--grid", grid, "grid values (um, uK, relative, kHz)");

  auto* leakage = app.add_subcommand("leakage", "dipole-dipole leakage table");
  add_common(leakage, leak, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? rydgate::kExitOk : rydgate::kExitConfig;
  }

  try {
    nlohmann::json summary;
    if (*simulate) {
      summary = rydgate::cmd_simulate(resolve(sim), options(sim));
    } else if (*optimize) {
      if (opt.config.empty() && !selftest) {
        throw rydgate::ConfigError("optimize needs --config (or --selftest)");
      }
      CommandOptions o = options(opt);
      o.selftest = selftest;
      summary = rydgate::cmd_optimize(resolve(opt), o);
    } else if (*scanner) {
      CommandOptions o = options(scan);
      o.axis = axis;
      o.grid = grid;
      summary = rydgate::cmd_scan(resolve(scan), o);
    } else {
      summary = rydgate::cmd_leakage(resolve(leak), options(leak));
    }
    report(summary);
    return rydgate::kExitOk;
  } catch (const rydgate::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return rydgate::kExitConfig;
  } catch (const rydgate::NumericalError& e) {
    std::cerr << "numerical failure: " << e.what() << '\n';
    return rydgate::kExitNumerical;
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return rydgate::kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return rydgate::kExitFailure;
  }
}
