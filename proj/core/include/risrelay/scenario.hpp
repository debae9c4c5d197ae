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
#include <optional>
#include <string_view>
#include <variant>

#include "risrelay/geometry.hpp"

namespace risrelay {

enum class RelayMode { ideal, nonideal };

/// Which destination-arm expression the power split maximizes.
enum class Objective {
  printed,    // both hybrid arms scaled by P2
  narrative,  // slot-1 arm scaled by P1, slot-2 arm by P2
};

std::string_view to_string(RelayMode mode) noexcept;
std::optional<RelayMode> parse_relay_mode(std::string_view text) noexcept;
std::string_view to_string(Objective objective) noexcept;
std::optional<Objective> parse_objective(std::string_view text) noexcept;

/// Fixed per-slot transmit powers in watts. The relay transmits with P2 in
/// the joint scheme.
struct ExplicitPowers {
  double p1 = 0.0;
  double p2 = 0.0;

  friend bool operator==(const ExplicitPowers&, const ExplicitPowers&) = default;
};

/// Total budget in watts, split per realization by the optimizer.
struct PowerBudget {
  double total = 0.0;

  friend bool operator==(const PowerBudget&, const PowerBudget&) = default;
};

using PowerSpec = std::variant<ExplicitPowers, PowerBudget>;

struct ScenarioConfig {
  Scheme scheme = Scheme::joint;
  NodeLayout layout;
  std::size_t elements = 0;  // N
  double k_factor = 0.0;     // linear
  PathLossModel pathloss;
  PowerSpec power = ExplicitPowers{};
  double noise_power = 1.0;  // N0, watts
  int modulation_order = 2;
  RelayMode relay_mode = RelayMode::ideal;
  Objective objective = Objective::printed;
  int phase_bits = 0;  // 0 = continuous phases
  LinkSet blocked;
  std::uint64_t seed = 1;

  friend bool operator==(const ScenarioConfig&, const ScenarioConfig&) = default;
};

/// Total transmit power of one channel use: P1 + 2 P2 for the joint scheme,
/// P1 + P2 for the integrated and relay-only schemes, P1 for the RIS-only
/// benchmark, or the budget itself.
double total_power(const ScenarioConfig& cfg);

/// Same scenario with N0 chosen so that total_power / N0 equals `snr_db`.
ScenarioConfig with_snr_db(ScenarioConfig cfg, double snr_db);

double db_to_linear(double db) noexcept;
double linear_to_db(double linear) noexcept;
double dbm_to_watts(double dbm) noexcept;

}  // namespace risrelay
