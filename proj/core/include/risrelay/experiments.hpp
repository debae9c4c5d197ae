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

#include <optional>
#include <stdexcept>
#include <string_view>

#include "risrelay/config.hpp"
#include "risrelay/montecarlo.hpp"

namespace risrelay {

enum class ExperimentKind {
  ber_sweep,             // simulated and analytic BER over experiment.snr_db (x elements)
  rate_vs_position,      // ideal and non-ideal rate over y_ris x y_relay
  rate_vs_n,             // ideal and non-ideal rate over experiment.elements
  power_allocation_map,  // P1*, P2* and non-ideal rate over y_ris x y_relay, needs P_tot
  oracle_validation,     // analytic vs sampled moments of A, B and slot MGFs
};

std::string_view to_string(ExperimentKind kind) noexcept;
std::optional<ExperimentKind> parse_experiment(std::string_view text) noexcept;

/// A well-formed config that cannot run the requested experiment.
class InfeasibleExperiment : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Sweep plan of `kind` built from the experiment section.
SweepPlan make_plan(ExperimentKind kind, const RunConfig& cfg, unsigned threads);

/// Runs one named experiment. Throws InfeasibleExperiment when the
/// config lacks what the experiment needs (P_tot for the allocation map,
/// fixed powers for BER and oracle runs, a sweep list) or a sweep point is
/// physically unusable.
ExperimentResult run_named_experiment(ExperimentKind kind, const RunConfig& cfg,
                                      unsigned threads = 0);

}  // namespace risrelay
