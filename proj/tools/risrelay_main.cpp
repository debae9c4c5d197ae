// Copyright 2026 The risrelay Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include "risrelay/config.hpp"
#include "risrelay/run.hpp"
#include "risrelay/version.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Hybrid RIS and decode-and-forward relay link simulator"};
  app.set_version_flag("--version", std::string(risrelay::kVersion));
  app.require_subcommand(1);

  risrelay::RunOptions run;
  std::uint64_t seed = 0;
  unsigned threads = 0;
  auto* run_cmd = app.add_subcommand("run", "Run a named experiment and write CSV and manifest");
  run_cmd->add_option("--config", run.config, "Scenario YAML file")->required();
  run_cmd
      ->add_option("--experiment", run.experiment,
                   "ber-sweep | rate-vs-position | rate-vs-N | power-allocation-map | "
                   "oracle-validation")
      ->required();
  run_cmd->add_option("--out", run.out, "Output directory")->required();
  auto* seed_opt = run_cmd->add_option("--seed", seed, "Master seed (overrides scenario.seed)");
  auto* threads_opt = run_cmd->add_option(
      "--threads", threads, "Worker threads; default RISRELAY_THREADS or all cores");

  std::string check_path;
  bool emit = false;
  auto* check_cmd = app.add_subcommand("validate", "Check a config and list every violation");
  check_cmd->add_option("--config", check_path, "Scenario YAML file")->required();
  check_cmd->add_flag("--emit", emit, "Print the resolved config");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : risrelay::kExitParse;
  }

  if (*run_cmd) {
    if (*seed_opt) run.seed = seed;
    if (*threads_opt) run.threads = threads;
    return risrelay::run_experiment(run, std::cerr);
  }

  risrelay::ConfigResult result;
  try {
    result = risrelay::load_config(check_path);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return risrelay::kExitIo;
  }
  for (const auto& d : result.diagnostics) std::cerr << check_path << ": " << d.to_string() << "\n";
  if (!result.ok()) return result.has_parse_errors() ? risrelay::kExitParse : risrelay::kExitInfeasible;
  if (emit) std::cout << risrelay::emit_config(*result.config);
  return risrelay::kExitOk;
}
