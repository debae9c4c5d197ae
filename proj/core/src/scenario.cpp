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

#include "risrelay/scenario.hpp"

#include <cmath>

namespace risrelay {

std::string_view to_string(RelayMode mode) noexcept {
  return mode == RelayMode::ideal ? "ideal" : "nonideal";
}

std::optional<RelayMode> parse_relay_mode(std::string_view text) noexcept {
  if (text == "ideal") return RelayMode::ideal;
  if (text == "nonideal" || text == "non-ideal") return RelayMode::nonideal;
  return std::nullopt;
}

std::string_view to_string(Objective objective) noexcept {
  return objective == Objective::printed ? "printed" : "narrative";
}

std::optional<Objective> parse_objective(std::string_view text) noexcept {
  if (text == "printed") return Objective::printed;
  if (text == "narrative") return Objective::narrative;
  return std::nullopt;
}

double total_power(const ScenarioConfig& cfg) {
  if (const auto* budget = std::get_if<PowerBudget>(&cfg.power)) return budget->total;
  const auto& p = std::get<ExplicitPowers>(cfg.power);
  switch (cfg.scheme) {
    case Scheme::joint:
      return p.p1 + 2.0 * p.p2;
    case Scheme::integrated:
    case Scheme::relay_only:
      return p.p1 + p.p2;
    case Scheme::ris_only:
      return p.p1;
  }
  return p.p1 + p.p2;
}

ScenarioConfig with_snr_db(ScenarioConfig cfg, double snr_db) {
  cfg.noise_power = total_power(cfg) / db_to_linear(snr_db);
  return cfg;
}

double db_to_linear(double db) noexcept { return std::pow(10.0, db / 10.0); }
double linear_to_db(double linear) noexcept { return 10.0 * std::log10(linear); }
double dbm_to_watts(double dbm) noexcept { return std::pow(10.0, (dbm - 30.0) / 10.0); }

}  // namespace risrelay
