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
#include <string_view>

#include "risrelay/fading.hpp"
#include "risrelay/scenario.hpp"
#include "risrelay/schemes.hpp"

namespace risrelay {

/// Per-watt slopes of the two arms of the max-min power problem.
///
///   relay arm       = relay * P1
///   destination arm = destination * P2 + destination_p1 * P1
///
/// With destination_p1 = 0 this is the pure two-line problem; the
/// narrative objective puts the slot-1 term A^2/N0 into destination_p1.
struct ArmCoefficients {
  double relay = 0.0;           // a
  double destination = 0.0;     // b
  double destination_p1 = 0.0;  // slot-1 share of the destination arm
};

enum class ActiveConstraint {
  interior_equalized,  // both arms equal
  boundary_p1,         // P1 = P_tot
  boundary_p2,         // P1 = 0, the whole budget on slot 2
};

std::string_view to_string(ActiveConstraint c) noexcept;

struct PowerSolution {
  double p1 = 0.0;
  double p2 = 0.0;
  double objective = 0.0;  // min(arms) at (p1, p2)
  ActiveConstraint active = ActiveConstraint::boundary_p1;
  bool degenerate = false;  // the objective is zero for every split
};

/// P2 implied by P1 under the budget: (P_tot - P1)/2 for the joint scheme
/// (relay and RIS slot share P2), P_tot - P1 for the integrated and
/// relay-only schemes, 0 for the RIS-only benchmark.
double second_slot_power(double p1, double total, Scheme scheme) noexcept;

/// Value of min(relay arm, destination arm) at P1 (RIS-only: destination
/// arm only, evaluated with P1).
double split_objective(const ArmCoefficients& c, double p1, double total, Scheme scheme) noexcept;

/// Exact maximizer of the max-min split. For the two-line problem the
/// interior optimum is
///   joint:      P1* = b P_tot / (b + 2a)
///   integrated: P1* = b P_tot / (a + b).
/// A zero objective for every split is flagged degenerate and returns
/// P1 = P_tot. Throws std::invalid_argument for negative slopes or budget.
PowerSolution solve_power_split(const ArmCoefficients& c, double total, Scheme scheme);

/// Uniform-grid reference solver over `points` values of P1 in [0, P_tot].
PowerSolution grid_search_power_split(const ArmCoefficients& c, double total, Scheme scheme,
                                      std::size_t points = 10000);

/// SNRs of one realization with optimized phases at unit powers
/// (P1 = P2 = P3 = 1 W).
struct PerWattSnrs {
  double gamma1 = 0.0;   // A^2 / N0
  double gamma2 = 0.0;   // joint: B^2 / N0; otherwise |g_RD|^2 / N0
  double gamma_r = 0.0;  // relay receive SNR; 0 without a relay
  double a = 0.0;
  double b = 0.0;
};

PerWattSnrs per_watt_snrs(const ChannelRealization& real, const ScenarioConfig& cfg);

/// Arm slopes of one realization with optimized phases (noise included).
///   joint, printed:      a = |g_R^T Phi1 h_SR|^2/N0, b = (A^2 + B^2)/N0
///   joint, narrative:    a as above, b = B^2/N0, destination_p1 = A^2/N0
///   integrated:          a = |g_SR|^2/N0, b = (A^2 + |g_RD|^2)/N0 (printed)
///   relay-only:          a = |g_SR|^2/N0, b = |g_RD|^2/N0
///   RIS-only:            destination_p1 = A^2/N0
ArmCoefficients arm_coefficients(const PerWattSnrs& snrs, const ScenarioConfig& cfg);
ArmCoefficients arm_coefficients(const ChannelRealization& real, const ScenarioConfig& cfg);

struct SequentialResult {
  PhaseProfile slot1_phases;
  PhaseProfile slot2_phases;
  PowerSolution power;
  SnrBreakdown snr;   // physical SNRs at (P1*, P2*)
  double rate = 0.0;  // non-ideal rate of the optimized objective
};

/// Phases first, then the power split, under the scenario's total power.
/// The rate is 1/2 log2(1 + objective), or log2(1 + objective) for the
/// RIS-only benchmark.
SequentialResult sequential_optimize(const ChannelRealization& real, const ScenarioConfig& cfg);

}  // namespace risrelay
