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

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "risrelay/scenario.hpp"

namespace risrelay {

/// Sweep and sampling settings of the `experiment` config section.
struct ExperimentSettings {
  std::vector<double> snr_db;
  std::vector<double> elements;
  std::vector<double> y_ris;
  std::vector<double> y_relay;
  std::vector<double> mgf_s{-0.01, -0.1, -1.0};
  std::size_t trials = 10000;
  std::size_t min_errors = 200;
  std::size_t max_trials = 10'000'000;
  std::size_t samples = 100000;

  friend bool operator==(const ExperimentSettings&, const ExperimentSettings&) = default;
};

struct RunConfig {
  ScenarioConfig scenario;
  ExperimentSettings experiment;

  friend bool operator==(const RunConfig&, const RunConfig&) = default;
};

struct Diagnostic {
  enum class Kind {
    parse,       // syntax, type, unknown or missing field, out-of-domain value
    infeasible,  // well-formed but physically unusable scenario
  };
  Kind kind = Kind::parse;
  int line = 0;  // 1-based; 0 when unknown
  std::string field;
  std::string message;

  /// "line 7: scenario.N: must be a non-negative integer"
  std::string to_string() const;
};

struct ConfigResult {
  std::optional<RunConfig> config;  // set only when there are no diagnostics
  std::vector<Diagnostic> diagnostics;

  bool ok() const noexcept { return config.has_value(); }
  bool has_parse_errors() const noexcept;
};

/// Parses and resolves a YAML scenario. Applies defaults, converts dB
/// quantities to linear and collects every violation rather than stopping
/// at the first one. Never throws for malformed input.
ConfigResult validate_config(std::string_view text);

/// Reads `path` and validates it. Throws std::runtime_error when the file
/// cannot be read.
ConfigResult load_config(const std::filesystem::path& path);

/// Resolved config as YAML that `validate_config` maps back to an equal
/// RunConfig (K and N0 are written in linear units, doubles at full
/// precision).
std::string emit_config(const RunConfig& cfg);

}  // namespace risrelay
