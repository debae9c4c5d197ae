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

#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>

#include "risrelay/config.hpp"
#include "risrelay/montecarlo.hpp"

namespace risrelay {

/// Process exit statuses of a run.
enum ExitStatus : int {
  kExitOk = 0,
  kExitIo = 1,          // unreadable config or unwritable output
  kExitParse = 2,       // malformed config or unknown experiment
  kExitInfeasible = 3,  // well-formed but unusable scenario
};

struct RunOptions {
  std::filesystem::path config;
  std::string experiment;
  std::filesystem::path out;
  std::optional<std::uint64_t> seed;  // overrides scenario.seed
  std::optional<unsigned> threads;
};

/// Worker count: the explicit value, else RISRELAY_THREADS, else 0
/// (hardware concurrency). Malformed environment values are ignored.
unsigned resolve_thread_count(std::optional<unsigned> requested);

/// Hex digest identifying a run by resolved config, experiment and tool
/// version. Equal inputs give equal ids.
std::string run_id(const RunConfig& cfg, std::string_view experiment);

/// CSV with header swept,metric,value,ci_halfwidth,trials,seed,run_id.
std::string to_csv(const ExperimentResult& result, std::string_view id);

/// JSON manifest: run id, tool version, experiment, seed, resolved config
/// (YAML text and structured), sweep axes and low-confidence rows.
std::string to_manifest(const ExperimentResult& result, const RunConfig& cfg,
                        std::string_view experiment, std::string_view id);

/// Loads the config, runs the experiment and writes
/// <out>/<experiment>.csv and <out>/<experiment>.manifest.json.
/// Diagnostics go to `log`. Returns an ExitStatus.
int run_experiment(const RunOptions& options, std::ostream& log);

}  // namespace risrelay
