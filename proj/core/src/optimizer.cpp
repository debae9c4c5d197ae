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

#include "risrelay/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace risrelay {

namespace {

// Destination arm as g0 + gs * P1 over the budget line.
struct Line {
  double intercept;
  double slope;
};

Line destination_line(const ArmCoefficients& c, double total, Scheme scheme) {
  switch (scheme) {
    case Scheme::joint:
      return {0.5 * c.destination * total, c.destination_p1 - 0.5 * c.destination};
    case Scheme::integrated:
    case Scheme::relay_only:
      return {c.destination * total, c.destination_p1 - c.destination};
    case Scheme::ris_only:
      return {0.0, c.destination_p1};
  }
  return {0.0, 0.0};
}

void check_inputs(const ArmCoefficients& c, double total) {
  if (!(c.relay >= 0.0) || !(c.destination >= 0.0) || !(c.destination_p1 >= 0.0)) {
    throw std::invalid_argument("power split: arm slopes must be non-negative");
  }
  if (!(total >= 0.0) || !std::isfinite(total)) {
    throw std::invalid_argument("power split: budget must be finite and non-negative");
  }
}

PowerSolution make_solution(const ArmCoefficients& c, double p1, double total, Scheme scheme,
                            ActiveConstraint active) {
  PowerSolution s;
  s.p1 = p1;
  s.p2 = second_slot_power(p1, total, scheme);
  s.objective = split_objective(c, p1, total, scheme);
  s.active = active;
  return s;
}

}  // namespace

std::string_view to_string(ActiveConstraint c) noexcept {
  switch (c) {
    case ActiveConstraint::interior_equalized:
      return "interior-equalized";
    case ActiveConstraint::boundary_p1:
      return "boundary-P1";
    case ActiveConstraint::boundary_p2:
      return "boundary-P2";
  }
  return "?";
}

double second_slot_power(double p1, double total, Scheme scheme) noexcept {
  switch (scheme) {
    case Scheme::joint:
      return std::max(0.0, 0.5 * (total - p1));
    case Scheme::integrated:
    case Scheme::relay_only:
      return std::max(0.0, total - p1);
    case Scheme::ris_only:
      return 0.0;
  }
  return 0.0;
}

double split_objective(const ArmCoefficients& c, double p1, double total, Scheme scheme) noexcept {
  const double p2 = second_slot_power(p1, total, scheme);
  const double destination = c.destination * p2 + c.destination_p1 * p1;
  if (scheme == Scheme::ris_only) return destination;
  return std::min(c.relay * p1, destination);
}

PowerSolution solve_power_split(const ArmCoefficients& c, double total, Scheme scheme) {
  check_inputs(c, total);

  if (scheme == Scheme::ris_only) {
    PowerSolution s = make_solution(c, total, total, scheme, ActiveConstraint::boundary_p1);
    s.degenerate = s.objective == 0.0;
    return s;
  }

  // min(a P1, g0 + gs P1) is concave on [0, P_tot]; its maximum is at an
  // endpoint or at the crossing of the two lines.
  const Line g = destination_line(c, total, scheme);
  PowerSolution best = make_solution(c, total, total, scheme, ActiveConstraint::boundary_p1);
  const PowerSolution at_zero = make_solution(c, 0.0, total, scheme, ActiveConstraint::boundary_p2);
  if (at_zero.objective > best.objective) best = at_zero;

  const double denom = c.relay - g.slope;
  if (denom > 0.0) {
    const double cross = g.intercept / denom;
    if (cross > 0.0 && cross < total) {
      const PowerSolution interior =
          make_solution(c, cross, total, scheme, ActiveConstraint::interior_equalized);
      if (interior.objective >= best.objective) best = interior;
    }
  }

  if (best.objective == 0.0) {
    best = make_solution(c, total, total, scheme, ActiveConstraint::boundary_p1);
    best.degenerate = true;
  }
  return best;
}

PowerSolution grid_search_power_split(const ArmCoefficients& c, double total, Scheme scheme,
                                      std::size_t points) {
  check_inputs(c, total);
  if (points < 2) throw std::invalid_argument("grid search needs at least two points");
  PowerSolution best;
  best.objective = -1.0;
  for (std::size_t i = 0; i < points; ++i) {
    const double p1 = total * static_cast<double>(i) / static_cast<double>(points - 1);
    const double value = split_objective(c, p1, total, scheme);
    if (value > best.objective) {
      best.p1 = p1;
      best.objective = value;
    }
  }
  best.p2 = second_slot_power(best.p1, total, scheme);
  best.degenerate = best.objective == 0.0;
  if (best.p1 >= total) {
    best.active = ActiveConstraint::boundary_p1;
  } else if (best.p1 <= 0.0) {
    best.active = ActiveConstraint::boundary_p2;
  } else {
    best.active = ActiveConstraint::interior_equalized;
  }
  return best;
}

PerWattSnrs per_watt_snrs(const ChannelRealization& real, const ScenarioConfig& cfg) {
  const PowerAllocation unit{1.0, 1.0, 1.0, cfg.noise_power};
  const EffectiveGains g = optimal_gains(real, unit, cfg.scheme, cfg.phase_bits);
  PerWattSnrs u;
  u.a = std::abs(g.slot1);
  u.b = g.has_second_slot ? std::abs(g.slot2) : 0.0;
  u.gamma1 = u.a * u.a / cfg.noise_power;
  u.gamma2 = u.b * u.b / cfg.noise_power;
  u.gamma_r = g.has_relay ? std::norm(g.relay) / cfg.noise_power : 0.0;
  return u;
}

ArmCoefficients arm_coefficients(const PerWattSnrs& u, const ScenarioConfig& cfg) {
  ArmCoefficients c;
  c.relay = u.gamma_r;
  switch (cfg.scheme) {
    case Scheme::ris_only:
      c.relay = 0.0;
      c.destination_p1 = u.gamma1;
      break;
    case Scheme::relay_only:
      c.destination = u.gamma2;
      break;
    case Scheme::joint:
    case Scheme::integrated:
      if (cfg.objective == Objective::printed) {
        c.destination = u.gamma1 + u.gamma2;
      } else {
        c.destination = u.gamma2;
        c.destination_p1 = u.gamma1;
      }
      break;
  }
  return c;
}

ArmCoefficients arm_coefficients(const ChannelRealization& real, const ScenarioConfig& cfg) {
  return arm_coefficients(per_watt_snrs(real, cfg), cfg);
}

SequentialResult sequential_optimize(const ChannelRealization& real, const ScenarioConfig& cfg) {
  SequentialResult out;
  out.slot1_phases =
      quantize_phases(optimize_phases(real, cfg.scheme, Slot::first), cfg.phase_bits);
  out.slot2_phases =
      quantize_phases(optimize_phases(real, cfg.scheme, Slot::second), cfg.phase_bits);

  const PerWattSnrs u = per_watt_snrs(real, cfg);
  out.power = solve_power_split(arm_coefficients(u, cfg), total_power(cfg), cfg.scheme);

  const double p1 = out.power.p1;
  const double p2 = out.power.p2;
  out.snr.gamma1 = p1 * u.gamma1;
  out.snr.gamma2 = p2 * u.gamma2;
  out.snr.gamma_tot = out.snr.gamma1 + out.snr.gamma2;
  out.snr.gamma_r = cfg.scheme == Scheme::ris_only ? std::numeric_limits<double>::infinity()
                                                   : p1 * u.gamma_r;
  out.snr.a = u.a;
  out.snr.b = u.b;

  out.rate = cfg.scheme == Scheme::ris_only ? std::log2(1.0 + out.power.objective)
                                            : 0.5 * std::log2(1.0 + out.power.objective);
  return out;
}

}  // namespace risrelay
