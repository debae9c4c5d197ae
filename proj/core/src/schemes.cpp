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

#include "risrelay/schemes.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace risrelay {

namespace {

double wrap_phase(double phi) {
  double w = std::remainder(phi, 2.0 * std::numbers::pi);
  if (w <= -std::numbers::pi) w += 2.0 * std::numbers::pi;
  return w;
}

bool has_ris(Scheme scheme) { return scheme != Scheme::relay_only; }

// Reflected sums seen by the destination (both slots) and the relay.
struct ReflectedSums {
  Complex slot1{};
  Complex slot2{};
  Complex relay{};
};

ReflectedSums reflected_sums(const ChannelRealization& real, Scheme scheme,
                             std::span<const double> phi1, std::span<const double> phi2) {
  ReflectedSums out;
  if (!has_ris(scheme)) return out;
  out.slot1 = reflected_sum(real.h_sr, real.h_rd, phi1);
  if (scheme == Scheme::joint) {
    out.slot2 = reflected_sum(real.h_sr, real.h_rd, phi2);
    out.relay = reflected_sum(real.h_sr, real.g_r, phi1);
  }
  return out;
}

Complex require(const std::optional<Complex>& h, const char* what) {
  if (!h) throw std::invalid_argument(std::string("realization has no ") + what + " channel");
  return *h;
}

}  // namespace

double PowerAllocation::total(Scheme scheme) const {
  switch (scheme) {
    case Scheme::joint:
      return p1 + p2 + p3;
    case Scheme::integrated:
    case Scheme::relay_only:
      return p1 + p2;
    case Scheme::ris_only:
      return p1;
  }
  return p1 + p2;
}

void validate(const PowerAllocation& pa, Scheme scheme) {
  if (!(pa.p1 >= 0.0) || !(pa.p2 >= 0.0) || !(pa.p3 >= 0.0)) {
    throw std::invalid_argument("powers must be non-negative");
  }
  if (!(pa.noise > 0.0)) throw std::invalid_argument("noise power must be positive");
  if (scheme == Scheme::joint && pa.p3 != pa.p2) {
    throw std::invalid_argument("joint scheme requires P3 == P2");
  }
}

PhaseProfile optimize_phases(const ChannelRealization& real, Scheme scheme, Slot slot) {
  if (!has_ris(scheme)) return {};
  if (real.h_sr.size() != real.h_rd.size()) {
    throw std::invalid_argument("h_SR and h_RD lengths differ");
  }
  double common = 0.0;
  if (slot == Slot::second) {
    if (scheme != Scheme::joint) return {};
    common = std::arg(require(real.g_rd, "g_RD"));
  }
  PhaseProfile phases(real.h_sr.size());
  for (std::size_t i = 0; i < phases.size(); ++i) {
    phases[i] = wrap_phase(common - std::arg(real.h_rd[i]) - std::arg(real.h_sr[i]));
  }
  return phases;
}

PhaseProfile quantize_phases(PhaseProfile phases, int bits) {
  if (bits <= 0) return phases;
  const double step = 2.0 * std::numbers::pi / static_cast<double>(1u << bits);
  for (double& phi : phases) phi = wrap_phase(step * std::round(phi / step));
  return phases;
}

Complex reflected_sum(std::span<const Complex> incoming, std::span<const Complex> outgoing,
                      std::span<const double> phases) {
  if (incoming.size() != outgoing.size() || incoming.size() != phases.size()) {
    throw std::invalid_argument("reflected_sum: length mismatch");
  }
  Complex acc{};
  for (std::size_t i = 0; i < incoming.size(); ++i) {
    acc += std::polar(1.0, phases[i]) * outgoing[i] * incoming[i];
  }
  return acc;
}

EffectiveGains effective_gains(const ChannelRealization& real, const PowerAllocation& pa,
                               Scheme scheme, std::span<const double> slot1_phases,
                               std::span<const double> slot2_phases) {
  const ReflectedSums sums = reflected_sums(real, scheme, slot1_phases, slot2_phases);
  const double a1 = std::sqrt(pa.p1);
  const double a2 = std::sqrt(pa.p2);

  EffectiveGains g;
  switch (scheme) {
    case Scheme::joint:
      g.slot1 = a1 * sums.slot1;
      g.relay = a1 * sums.relay;
      g.slot2 = a2 * sums.slot2 + std::sqrt(pa.p3) * require(real.g_rd, "g_RD");
      g.has_relay = true;
      g.has_second_slot = true;
      break;
    case Scheme::integrated:
      g.slot1 = a1 * sums.slot1;
      g.relay = a1 * require(real.g_sr, "g_SR");
      g.slot2 = a2 * require(real.g_rd, "g_RD");
      g.has_relay = true;
      g.has_second_slot = true;
      break;
    case Scheme::ris_only:
      g.slot1 = a1 * sums.slot1;
      break;
    case Scheme::relay_only:
      g.relay = a1 * require(real.g_sr, "g_SR");
      g.slot2 = a2 * require(real.g_rd, "g_RD");
      g.has_relay = true;
      g.has_second_slot = true;
      break;
  }
  return g;
}

EffectiveGains optimal_gains(const ChannelRealization& real, const PowerAllocation& pa,
                             Scheme scheme, int phase_bits) {
  if (phase_bits > 0 || !has_ris(scheme)) {
    const PhaseProfile phi1 =
        quantize_phases(optimize_phases(real, scheme, Slot::first), phase_bits);
    const PhaseProfile phi2 =
        quantize_phases(optimize_phases(real, scheme, Slot::second), phase_bits);
    return effective_gains(real, pa, scheme, phi1, phi2);
  }
  if (real.h_sr.size() != real.h_rd.size()) {
    throw std::invalid_argument("h_SR and h_RD lengths differ");
  }

  const bool joint = scheme == Scheme::joint;
  double aligned = 0.0;
  Complex relay_sum{};
  for (std::size_t i = 0; i < real.h_sr.size(); ++i) {
    const Complex p = real.h_rd[i] * real.h_sr[i];
    const double mag = std::abs(p);
    aligned += mag;
    if (joint) {
      const Complex u = mag > 0.0 ? std::conj(p) / mag : Complex(1.0, 0.0);
      relay_sum += u * real.g_r[i] * real.h_sr[i];
    }
  }

  const double a1 = std::sqrt(pa.p1);
  const double a2 = std::sqrt(pa.p2);
  EffectiveGains g;
  g.slot1 = a1 * aligned;
  switch (scheme) {
    case Scheme::joint: {
      const Complex grd = require(real.g_rd, "g_RD");
      const double mag = std::abs(grd);
      const Complex rot = mag > 0.0 ? grd / mag : Complex(1.0, 0.0);
      g.relay = a1 * relay_sum;
      g.slot2 = a2 * aligned * rot + std::sqrt(pa.p3) * grd;
      g.has_relay = true;
      g.has_second_slot = true;
      break;
    }
    case Scheme::integrated:
      g.relay = a1 * require(real.g_sr, "g_SR");
      g.slot2 = a2 * require(real.g_rd, "g_RD");
      g.has_relay = true;
      g.has_second_slot = true;
      break;
    case Scheme::ris_only:
    case Scheme::relay_only:
      break;
  }
  return g;
}

SnrBreakdown instantaneous_snrs(const ChannelRealization& real, const PowerAllocation& pa,
                                Scheme scheme, int phase_bits) {
  const PhaseProfile phi1 = quantize_phases(optimize_phases(real, scheme, Slot::first), phase_bits);
  const PhaseProfile phi2 = quantize_phases(optimize_phases(real, scheme, Slot::second), phase_bits);
  const EffectiveGains g = effective_gains(real, pa, scheme, phi1, phi2);
  const ReflectedSums sums = reflected_sums(real, scheme, phi1, phi2);

  SnrBreakdown out;
  out.gamma1 = std::norm(g.slot1) / pa.noise;
  out.gamma2 = g.has_second_slot ? std::norm(g.slot2) / pa.noise : 0.0;
  out.gamma_tot = out.gamma1 + out.gamma2;
  out.gamma_r = g.has_relay ? std::norm(g.relay) / pa.noise
                            : std::numeric_limits<double>::infinity();
  out.a = std::abs(sums.slot1);
  switch (scheme) {
    case Scheme::joint:
      out.b = std::abs(sums.slot2 + *real.g_rd);
      break;
    case Scheme::integrated:
    case Scheme::relay_only:
      out.b = std::abs(*real.g_rd);
      break;
    case Scheme::ris_only:
      out.b = 0.0;
      break;
  }
  return out;
}

int mrc_decision_bpsk(Complex y1, Complex y2, Complex eff1, Complex eff2) noexcept {
  const double z = (std::conj(eff1) * y1 + std::conj(eff2) * y2).real();
  return z < 0.0 ? 1 : 0;
}

int mrc_decision_mpsk(Complex y1, Complex y2, Complex eff1, Complex eff2, int order) noexcept {
  const Complex z = std::conj(eff1) * y1 + std::conj(eff2) * y2;
  const double sector = std::arg(z) * order / (2.0 * std::numbers::pi);
  int m = static_cast<int>(std::lround(sector)) % order;
  if (m < 0) m += order;
  return m;
}

Complex psk_symbol(int index, int order) noexcept {
  return std::polar(1.0, 2.0 * std::numbers::pi * index / order);
}

}  // namespace risrelay
