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
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <vector>

#include "risrelay/geometry.hpp"
#include "risrelay/scenario.hpp"

namespace risrelay {

using Complex = std::complex<double>;
using ComplexVector = std::vector<Complex>;

/// 64-bit finalizer (splitmix64 output function).
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Seed of sub-stream `tag` under `base`. Distinct tags give statistically
/// independent streams; the mapping is pure, so results never depend on the
/// order in which streams are consumed.
constexpr std::uint64_t derive_seed(std::uint64_t base, std::uint64_t tag) noexcept {
  return mix64(mix64(base + 0x9e3779b97f4a7c15ULL) ^ (tag * 0xd1b54a32d192ed03ULL + 1));
}

/// Counter-based uniform bit generator: output i is mix64(key + (i+1)*golden).
/// Satisfies UniformRandomBitGenerator; construction is free.
class RandomStream {
 public:
  using result_type = std::uint64_t;

  explicit constexpr RandomStream(std::uint64_t key) noexcept : state_(key) {}

  static constexpr result_type min() noexcept { return 0; }
  static constexpr result_type max() noexcept { return std::numeric_limits<result_type>::max(); }

  constexpr result_type operator()() noexcept {
    state_ += 0x9e3779b97f4a7c15ULL;
    return mix64(state_);
  }

  double normal();         // N(0, 1)
  double uniform();        // [0, 1)
  Complex complex_normal();  // CN(0, 1)

 private:
  std::uint64_t state_;
};

/// Per-link stream tags. Values are part of the reproducibility contract.
enum class StreamTag : std::uint64_t {
  source_ris = 1,
  ris_destination = 2,
  ris_relay = 3,
  source_relay = 4,
  relay_destination = 5,
  noise = 6,
  symbols = 7,
};

constexpr std::uint64_t stream_seed(std::uint64_t seed, StreamTag tag) noexcept {
  return derive_seed(seed, static_cast<std::uint64_t>(tag));
}

struct RicianSpec {
  double k_factor = 0.0;    // linear
  double mean_power = 1.0;  // E|h|^2
  std::size_t elements = 1;
};

/// Throws std::invalid_argument unless K >= 0, mean_power > 0, N >= 1.
void validate(const RicianSpec& spec);

/// Fills `out` with i.i.d. Rician coefficients
///   sqrt(P) * ( sqrt(K/(K+1)) + sqrt(1/(K+1)) * CN(0,1) ),
/// LOS phase zero on every element.
void draw_rician(double k_factor, double mean_power, RandomStream& rng, std::span<Complex> out);

ComplexVector draw_rician(const RicianSpec& spec, std::uint64_t seed);

/// One draw of every channel of a scheme, path loss included.
/// `g_r` is set for the joint scheme only, `g_sr` for integrated and
/// relay-only; `h_sr`, `h_rd` are empty for relay-only.
struct ChannelRealization {
  ComplexVector h_sr;  // source -> RIS
  ComplexVector h_rd;  // RIS -> destination
  ComplexVector g_r;   // RIS -> relay
  std::optional<Complex> g_sr;  // source -> relay
  std::optional<Complex> g_rd;  // relay -> destination
  std::uint64_t seed = 0;

  friend bool operator==(const ChannelRealization&, const ChannelRealization&) = default;
};

/// Draws realizations of a fixed scenario. Link budgets are computed once at
/// construction; `draw` is const and may be called concurrently.
class ScenarioSampler {
 public:
  explicit ScenarioSampler(const ScenarioConfig& cfg);

  const LinkBudget& budget() const noexcept { return budget_; }
  Scheme scheme() const noexcept { return scheme_; }
  std::size_t elements() const noexcept { return elements_; }

  /// Reuses the buffers already held by `out`.
  void draw(std::uint64_t seed, ChannelRealization& out) const;
  ChannelRealization draw(std::uint64_t seed) const;

 private:
  Scheme scheme_;
  std::size_t elements_;
  double k_factor_;
  LinkBudget budget_;
};

ChannelRealization draw_scenario(const ScenarioConfig& cfg, std::uint64_t seed);

}  // namespace risrelay
