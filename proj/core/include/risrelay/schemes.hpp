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

#include <complex>
#include <span>
#include <vector>

#include "risrelay/fading.hpp"
#include "risrelay/scenario.hpp"

namespace risrelay {

/// Per-slot powers in watts. The joint scheme fixes P3 (relay) = P2.
struct PowerAllocation {
  double p1 = 0.0;
  double p2 = 0.0;
  double p3 = 0.0;
  double noise = 1.0;  // N0

  /// Allocation with P3 = P2.
  static PowerAllocation hybrid(double p1, double p2, double noise) { return {p1, p2, p2, noise}; }

  /// Sum of powers spent by `scheme` in one channel use.
  double total(Scheme scheme) const;
};

/// Throws std::invalid_argument on negative powers, non-positive N0, or
/// P3 != P2 for the joint scheme.
void validate(const PowerAllocation& pa, Scheme scheme);

/// Instantaneous SNRs of one realization (linear).
struct SnrBreakdown {
  double gamma1 = 0.0;     // destination, slot 1
  double gamma2 = 0.0;     // destination, slot 2
  double gamma_tot = 0.0;  // after MRC, gamma1 + gamma2
  double gamma_r = 0.0;    // relay receive SNR; +inf when there is no relay
  double a = 0.0;          // |reflected sum| in slot 1
  double b = 0.0;          // joint: |g_RD + reflected sum|; otherwise |g_RD|
};

enum class Slot { first, second };

using PhaseProfile = std::vector<double>;

/// RIS phases for one slot. Slot 1 cancels the cascaded phase of every
/// element so the reflected sum becomes sum |h_RD,i||h_SR,i|. Slot 2 of the
/// joint scheme additionally rotates onto arg(g_RD) so the relay and RIS
/// contributions add in magnitude. Phases are wrapped to (-pi, pi].
PhaseProfile optimize_phases(const ChannelRealization& real, Scheme scheme, Slot slot);

/// Rounds each phase to the nearest of 2^bits uniform levels; bits == 0 is
/// a no-op.
PhaseProfile quantize_phases(PhaseProfile phases, int bits);

/// sum_i exp(j phi_i) * outgoing_i * incoming_i
Complex reflected_sum(std::span<const Complex> incoming, std::span<const Complex> outgoing,
                      std::span<const double> phases);

/// Complex end-to-end gains with power applied: y_k = slot_k * s + n_k.
struct EffectiveGains {
  Complex slot1{};
  Complex slot2{};
  Complex relay{};  // source -> relay in slot 1
  bool has_second_slot = false;
  bool has_relay = false;
};

/// Gains for the given phases (both profiles may be empty where unused).
EffectiveGains effective_gains(const ChannelRealization& real, const PowerAllocation& pa,
                               Scheme scheme, std::span<const double> slot1_phases,
                               std::span<const double> slot2_phases);

/// Gains with optimized (optionally quantized) phases. For continuous
/// phases this avoids trigonometry: the co-phasing factor of element i is
/// conj(p_i)/|p_i| with p_i = h_RD,i h_SR,i.
EffectiveGains optimal_gains(const ChannelRealization& real, const PowerAllocation& pa,
                             Scheme scheme, int phase_bits = 0);

/// Optimizes (and optionally quantizes) the phases, then evaluates the SNRs.
SnrBreakdown instantaneous_snrs(const ChannelRealization& real, const PowerAllocation& pa,
                                Scheme scheme, int phase_bits = 0);

/// BPSK maximal ratio combining; bit 0 <-> s = +1.
int mrc_decision_bpsk(Complex y1, Complex y2, Complex eff1, Complex eff2) noexcept;

/// M-PSK maximal ratio combining over constellation exp(j 2 pi m / M).
int mrc_decision_mpsk(Complex y1, Complex y2, Complex eff1, Complex eff2, int order) noexcept;

/// exp(j 2 pi m / M)
Complex psk_symbol(int index, int order) noexcept;

}  // namespace risrelay
