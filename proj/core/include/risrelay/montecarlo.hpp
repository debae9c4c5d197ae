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
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "risrelay/scenario.hpp"

namespace risrelay {

// ------------------------------------------------------------------------
// Sweep description
// ------------------------------------------------------------------------

enum class SweepVariable { snr_db, elements, coordinate };

enum class Node { source, destination, ris, relay };

std::string_view to_string(Node node) noexcept;

/// One swept quantity with its values. Coordinate axes move a single node
/// along x or y; in the integrated scheme moving the RIS or the relay moves
/// the shared device.
struct SweepAxis {
  SweepVariable variable = SweepVariable::snr_db;
  Node node = Node::ris;
  bool y_axis = true;  // coordinate axes only
  std::vector<double> values;

  static SweepAxis snr_db(std::vector<double> values);
  static SweepAxis elements(std::vector<double> values);
  static SweepAxis coordinate(Node node, bool y_axis, std::vector<double> values);

  /// "snr_db", "N", "ris.y", ...
  std::string label() const;
};

/// Scenario at `value` of `axis`. Throws std::invalid_argument for a value
/// the axis cannot take (negative or fractional N).
ScenarioConfig apply_axis(const SweepAxis& axis, double value, ScenarioConfig cfg);

struct SweepPlan {
  ScenarioConfig base;
  std::vector<SweepAxis> axes;  // cartesian product, first axis outermost
  std::size_t trials = 10000;   // rate points: exact count; BER points: minimum
  std::size_t min_error_events = 200;
  std::size_t max_trials = 10'000'000;
  std::uint64_t seed = 1;
  unsigned threads = 0;  // 0 = hardware concurrency
  std::size_t block_size = 1024;
};

/// Throws std::invalid_argument on an empty value list, zero trials,
/// max_trials < trials or a zero block size.
void validate(const SweepPlan& plan);

/// One point of the cartesian product.
struct SweepPoint {
  std::string label;  // "ris.y=5;relay.y=10"
  std::vector<double> values;
  ScenarioConfig config;
};

std::vector<SweepPoint> expand(const SweepPlan& plan);

// ------------------------------------------------------------------------
// Results
// ------------------------------------------------------------------------

struct ResultRow {
  std::string swept;
  std::string metric;
  double value = 0.0;
  double ci_halfwidth = 0.0;  // 95 %
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  bool low_confidence = false;  // BER point with fewer error events than the floor

  friend bool operator==(const ResultRow&, const ResultRow&) = default;
};

struct ExperimentResult {
  ScenarioConfig base;
  std::vector<std::string> axes;
  std::uint64_t seed = 0;
  std::vector<ResultRow> rows;

  friend bool operator==(const ExperimentResult&, const ExperimentResult&) = default;
};

/// Shortest decimal text that parses back to the same double.
std::string format_double(double value);

/// Below this many error events a BER point is flagged low-confidence.
inline constexpr std::size_t kConfidentErrorEvents = 100;

/// Half-width of the 95 % Wilson score interval for `events` out of `trials`.
double wilson_halfwidth(std::uint64_t events, std::uint64_t trials) noexcept;

/// Seed of trial `index`. Trials are shared across sweep points, so points
/// of one sweep see common random numbers.
std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t index) noexcept;

// ------------------------------------------------------------------------
// Engines
// ------------------------------------------------------------------------

/// Runs body(i) for i in [0, count) on up to `threads` workers
/// (0 = hardware concurrency). Rethrows the first exception.
void parallel_for(std::size_t count, unsigned threads,
                  const std::function<void(std::size_t)>& body);

/// Bit (BPSK) or symbol (M-PSK) error rate per sweep point. Each trial draws
/// a realization, co-phases the RIS, sends one symbol over both slots with a
/// perfectly decoding relay and combines by MRC at the destination.
/// Blocks run until `min_error_events` and `trials` are both reached or
/// `max_trials` is hit; the result does not depend on the thread count.
/// Metric "ber_simulated" for M = 2, "ser_simulated" otherwise.
ExperimentResult simulate_ber(const SweepPlan& plan);

/// Mean rate per sweep point over exactly `trials` realizations.
/// Fixed powers: "rate_ideal" = log2(1 + gamma_tot) or "rate_nonideal".
/// Power budget: the split comes from the sequential optimizer and the
/// rows "p1_star" and "p2_star" are added.
ExperimentResult simulate_rate(const SweepPlan& plan, RelayMode mode);

struct MgfEstimate {
  double value = 0.0;
  double standard_error = 0.0;
};

/// Sample mean of exp(s * gamma) with its standard error. Meant for at
/// least 1e5 samples.
MgfEstimate empirical_mgf(std::span<const double> samples, double s);

/// Sampled envelopes and SNRs of a fixed-power scenario, index-aligned.
/// `b` is B for the joint scheme and |g_RD| otherwise.
struct GainSamples {
  std::vector<double> a;
  std::vector<double> b;
  std::vector<double> gamma1;
  std::vector<double> gamma2;
  std::vector<double> gamma_r;
};

/// Throws std::invalid_argument in budget mode.
GainSamples sample_gains(const ScenarioConfig& cfg, std::size_t samples, std::uint64_t seed,
                         unsigned threads = 0);

}  // namespace risrelay
