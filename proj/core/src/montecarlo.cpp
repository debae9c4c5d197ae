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

#include "risrelay/montecarlo.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <exception>
#include <limits>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "risrelay/analytic.hpp"
#include "risrelay/fading.hpp"
#include "risrelay/optimizer.hpp"
#include "risrelay/schemes.hpp"

namespace risrelay {

// ------------------------------------------------------------------------
// Sweep description
// ------------------------------------------------------------------------

std::string_view to_string(Node node) noexcept {
  switch (node) {
    case Node::source:
      return "source";
    case Node::destination:
      return "destination";
    case Node::ris:
      return "ris";
    case Node::relay:
      return "relay";
  }
  return "?";
}

SweepAxis SweepAxis::snr_db(std::vector<double> values) {
  return {SweepVariable::snr_db, Node::ris, true, std::move(values)};
}

SweepAxis SweepAxis::elements(std::vector<double> values) {
  return {SweepVariable::elements, Node::ris, true, std::move(values)};
}

SweepAxis SweepAxis::coordinate(Node node, bool y_axis, std::vector<double> values) {
  return {SweepVariable::coordinate, node, y_axis, std::move(values)};
}

std::string SweepAxis::label() const {
  switch (variable) {
    case SweepVariable::snr_db:
      return "snr_db";
    case SweepVariable::elements:
      return "N";
    case SweepVariable::coordinate:
      return std::string(to_string(node)) + (y_axis ? ".y" : ".x");
  }
  return "?";
}

namespace {

void set_coordinate(std::optional<Point2>& p, bool y_axis, double value, Node node) {
  if (!p) {
    throw std::invalid_argument("cannot sweep " + std::string(to_string(node)) +
                                ": node absent from the layout");
  }
  (y_axis ? p->y : p->x) = value;
}

}  // namespace

ScenarioConfig apply_axis(const SweepAxis& axis, double value, ScenarioConfig cfg) {
  switch (axis.variable) {
    case SweepVariable::snr_db:
      return with_snr_db(std::move(cfg), value);
    case SweepVariable::elements:
      if (!(value >= 0.0) || value != std::floor(value) || value > 1e7) {
        throw std::invalid_argument("N must be a non-negative integer");
      }
      cfg.elements = static_cast<std::size_t>(value);
      return cfg;
    case SweepVariable::coordinate: {
      NodeLayout& l = cfg.layout;
      switch (axis.node) {
        case Node::source:
          (axis.y_axis ? l.source.y : l.source.x) = value;
          break;
        case Node::destination:
          (axis.y_axis ? l.destination.y : l.destination.x) = value;
          break;
        case Node::ris:
        case Node::relay:
          if (cfg.scheme == Scheme::integrated) {
            set_coordinate(l.ris, axis.y_axis, value, axis.node);
            set_coordinate(l.relay, axis.y_axis, value, axis.node);
          } else {
            set_coordinate(axis.node == Node::ris ? l.ris : l.relay, axis.y_axis, value,
                           axis.node);
          }
          break;
      }
      return cfg;
    }
  }
  return cfg;
}

void validate(const SweepPlan& plan) {
  for (const auto& axis : plan.axes) {
    if (axis.values.empty()) throw std::invalid_argument("sweep axis " + axis.label() + " is empty");
  }
  if (plan.trials == 0) throw std::invalid_argument("trials must be at least 1");
  if (plan.max_trials < plan.trials) throw std::invalid_argument("max_trials below trials");
  if (plan.block_size == 0) throw std::invalid_argument("block size must be positive");
}

std::string format_double(double value) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, res.ptr);
}

std::vector<SweepPoint> expand(const SweepPlan& plan) {
  std::vector<SweepPoint> points{{"base", {}, plan.base}};
  for (const auto& axis : plan.axes) {
    std::vector<SweepPoint> next;
    next.reserve(points.size() * axis.values.size());
    for (const auto& p : points) {
      for (double v : axis.values) {
        SweepPoint q;
        const std::string item = axis.label() + "=" + format_double(v);
        q.label = p.values.empty() ? item : p.label + ";" + item;
        q.values = p.values;
        q.values.push_back(v);
        q.config = apply_axis(axis, v, p.config);
        next.push_back(std::move(q));
      }
    }
    points = std::move(next);
  }
  return points;
}

// ------------------------------------------------------------------------
// Statistics helpers
// ------------------------------------------------------------------------

namespace {

constexpr double kZ95 = 1.959963984540054;

unsigned resolve_threads(unsigned threads) {
  if (threads > 0) return threads;
  return std::max(1u, std::thread::hardware_concurrency());
}

struct Moments {
  double sum = 0.0;
  double sum_sq = 0.0;

  void add(double x) {
    sum += x;
    sum_sq += x * x;
  }
  void merge(const Moments& o) {
    sum += o.sum;
    sum_sq += o.sum_sq;
  }
  double mean(std::uint64_t n) const { return sum / static_cast<double>(n); }
  double halfwidth(std::uint64_t n) const {
    if (n < 2) return 0.0;
    const double m = mean(n);
    const double var = std::max(0.0, (sum_sq - n * m * m) / static_cast<double>(n - 1));
    return kZ95 * std::sqrt(var / static_cast<double>(n));
  }
};

}  // namespace

double wilson_halfwidth(std::uint64_t events, std::uint64_t trials) noexcept {
  if (trials == 0) return 0.0;
  const double n = static_cast<double>(trials);
  const double p = static_cast<double>(events) / n;
  const double z2 = kZ95 * kZ95;
  return kZ95 / (1.0 + z2 / n) * std::sqrt(p * (1.0 - p) / n + z2 / (4.0 * n * n));
}

std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t index) noexcept {
  return derive_seed(seed, index);
}

void parallel_for(std::size_t count, unsigned threads,
                  const std::function<void(std::size_t)>& body) {
  const unsigned workers =
      static_cast<unsigned>(std::min<std::size_t>(resolve_threads(threads), count));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }

  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1)) {
          try {
            body(i);
          } catch (...) {
            std::lock_guard lock(error_mutex);
            if (!error) error = std::current_exception();
            next.store(count);
          }
        }
      });
    }
  }
  if (error) std::rethrow_exception(error);
}

MgfEstimate empirical_mgf(std::span<const double> samples, double s) {
  if (samples.empty()) throw std::invalid_argument("empirical_mgf: no samples");
  Moments m;
  for (double g : samples) m.add(std::exp(s * g));
  const std::uint64_t n = samples.size();
  MgfEstimate est;
  est.value = m.mean(n);
  est.standard_error = m.halfwidth(n) / kZ95;
  return est;
}

// ------------------------------------------------------------------------
// BER
// ------------------------------------------------------------------------

namespace {

struct BlockErrors {
  std::uint64_t trials = 0;
  std::uint64_t errors = 0;
};

BlockErrors run_ber_block(const ScenarioSampler& sampler, const ScenarioConfig& cfg,
                          const PowerAllocation& pa, std::uint64_t seed, std::uint64_t first,
                          std::uint64_t last) {
  const int order = cfg.modulation_order;
  const double noise_amp = std::sqrt(pa.noise);
  ChannelRealization real;
  BlockErrors out;
  for (std::uint64_t t = first; t < last; ++t) {
    const std::uint64_t ts = trial_seed(seed, t);
    sampler.draw(ts, real);
    const EffectiveGains g = optimal_gains(real, pa, cfg.scheme, cfg.phase_bits);

    RandomStream symbols(stream_seed(ts, StreamTag::symbols));
    const int m = static_cast<int>(symbols() & static_cast<std::uint64_t>(order - 1));
    const Complex x = psk_symbol(m, order);

    RandomStream noise(stream_seed(ts, StreamTag::noise));
    const Complex y1 = g.slot1 * x + noise_amp * noise.complex_normal();
    const Complex eff2 = g.has_second_slot ? g.slot2 : Complex{};
    const Complex y2 = g.has_second_slot ? eff2 * x + noise_amp * noise.complex_normal() : Complex{};

    const int decided = order == 2 ? mrc_decision_bpsk(y1, y2, g.slot1, eff2)
                                   : mrc_decision_mpsk(y1, y2, g.slot1, eff2, order);
    out.errors += decided != m;
  }
  out.trials = last - first;
  return out;
}

}  // namespace

ExperimentResult simulate_ber(const SweepPlan& plan) {
  validate(plan);
  ExperimentResult result;
  result.base = plan.base;
  result.seed = plan.seed;
  for (const auto& axis : plan.axes) result.axes.push_back(axis.label());

  const unsigned workers = resolve_threads(plan.threads);
  for (const SweepPoint& point : expand(plan)) {
    const ScenarioConfig& cfg = point.config;
    const PowerAllocation pa = explicit_allocation(cfg);
    validate(pa, cfg.scheme);
    const ScenarioSampler sampler(cfg);

    const std::uint64_t block = plan.block_size;
    const std::uint64_t max_blocks = (plan.max_trials + block - 1) / block;
    std::uint64_t trials = 0;
    std::uint64_t errors = 0;
    std::uint64_t next_block = 0;
    bool done = false;

    // Waves of blocks; accumulation and the stopping test scan blocks in
    // index order, so the point never depends on the worker count.
    while (!done && next_block < max_blocks) {
      const std::uint64_t wave = std::min<std::uint64_t>(workers, max_blocks - next_block);
      std::vector<BlockErrors> partial(wave);
      parallel_for(wave, workers, [&](std::size_t i) {
        const std::uint64_t b = next_block + i;
        const std::uint64_t first = b * block;
        const std::uint64_t last = std::min<std::uint64_t>(first + block, plan.max_trials);
        partial[i] = run_ber_block(sampler, cfg, pa, plan.seed, first, last);
      });
      for (const BlockErrors& p : partial) {
        trials += p.trials;
        errors += p.errors;
        if ((trials >= plan.trials && errors >= plan.min_error_events) ||
            trials >= plan.max_trials) {
          done = true;
          break;
        }
      }
      next_block += wave;
    }

    ResultRow row;
    row.swept = point.label;
    row.metric = cfg.modulation_order == 2 ? "ber_simulated" : "ser_simulated";
    row.value = static_cast<double>(errors) / static_cast<double>(trials);
    row.ci_halfwidth = wilson_halfwidth(errors, trials);
    row.trials = trials;
    row.seed = plan.seed;
    row.low_confidence = errors < kConfidentErrorEvents;
    result.rows.push_back(std::move(row));
  }
  return result;
}

// ------------------------------------------------------------------------
// Rates
// ------------------------------------------------------------------------

namespace {

struct RateBlock {
  Moments rate;
  Moments p1;
  Moments p2;
};

double trial_rate(const PerWattSnrs& u, const ScenarioConfig& cfg, RelayMode mode, double& p1,
                  double& p2) {
  if (const auto* fixed = std::get_if<ExplicitPowers>(&cfg.power)) {
    p1 = fixed->p1;
    p2 = cfg.scheme == Scheme::ris_only ? 0.0 : fixed->p2;
    SnrBreakdown snr;
    snr.gamma1 = p1 * u.gamma1;
    snr.gamma2 = p2 * u.gamma2;
    snr.gamma_tot = snr.gamma1 + snr.gamma2;
    snr.gamma_r = cfg.scheme == Scheme::ris_only ? std::numeric_limits<double>::infinity()
                                                 : p1 * u.gamma_r;
    return mode == RelayMode::ideal ? rate_ideal(snr) : rate_nonideal(snr, cfg.scheme);
  }

  const double total = std::get<PowerBudget>(cfg.power).total;
  const PowerSolution sol = solve_power_split(arm_coefficients(u, cfg), total, cfg.scheme);
  p1 = sol.p1;
  p2 = sol.p2;
  if (mode == RelayMode::ideal) return std::log2(1.0 + p1 * u.gamma1 + p2 * u.gamma2);
  return cfg.scheme == Scheme::ris_only ? std::log2(1.0 + sol.objective)
                                        : 0.5 * std::log2(1.0 + sol.objective);
}

}  // namespace

ExperimentResult simulate_rate(const SweepPlan& plan, RelayMode mode) {
  validate(plan);
  ExperimentResult result;
  result.base = plan.base;
  result.seed = plan.seed;
  for (const auto& axis : plan.axes) result.axes.push_back(axis.label());

  for (const SweepPoint& point : expand(plan)) {
    const ScenarioConfig& cfg = point.config;
    if (!(cfg.noise_power > 0.0)) throw std::invalid_argument("noise power must be positive");
    const ScenarioSampler sampler(cfg);
    const bool budget = std::holds_alternative<PowerBudget>(cfg.power);

    const std::uint64_t n = plan.trials;
    const std::uint64_t block = plan.block_size;
    const std::size_t blocks = static_cast<std::size_t>((n + block - 1) / block);
    std::vector<RateBlock> partial(blocks);
    parallel_for(blocks, plan.threads, [&](std::size_t b) {
      ChannelRealization real;
      RateBlock& acc = partial[b];
      const std::uint64_t last = std::min<std::uint64_t>((b + 1) * block, n);
      for (std::uint64_t t = b * block; t < last; ++t) {
        sampler.draw(trial_seed(plan.seed, t), real);
        double p1 = 0.0;
        double p2 = 0.0;
        acc.rate.add(trial_rate(per_watt_snrs(real, cfg), cfg, mode, p1, p2));
        acc.p1.add(p1);
        acc.p2.add(p2);
      }
    });
    RateBlock total;
    for (const RateBlock& p : partial) {
      total.rate.merge(p.rate);
      total.p1.merge(p.p1);
      total.p2.merge(p.p2);
    }

    auto push = [&](std::string metric, const Moments& m) {
      ResultRow row;
      row.swept = point.label;
      row.metric = std::move(metric);
      row.value = m.mean(n);
      row.ci_halfwidth = m.halfwidth(n);
      row.trials = n;
      row.seed = plan.seed;
      result.rows.push_back(std::move(row));
    };
    push(mode == RelayMode::ideal ? "rate_ideal" : "rate_nonideal", total.rate);
    if (budget) {
      push("p1_star", total.p1);
      push("p2_star", total.p2);
    }
  }
  return result;
}

// ------------------------------------------------------------------------
// Oracle samples
// ------------------------------------------------------------------------

GainSamples sample_gains(const ScenarioConfig& cfg, std::size_t samples, std::uint64_t seed,
                         unsigned threads) {
  const PowerAllocation pa = explicit_allocation(cfg);
  const ScenarioSampler sampler(cfg);
  GainSamples out;
  out.a.resize(samples);
  out.b.resize(samples);
  out.gamma1.resize(samples);
  out.gamma2.resize(samples);
  out.gamma_r.resize(samples);

  constexpr std::size_t kBlock = 4096;
  const std::size_t blocks = (samples + kBlock - 1) / kBlock;
  parallel_for(blocks, threads, [&](std::size_t b) {
    ChannelRealization real;
    const std::size_t last = std::min(samples, (b + 1) * kBlock);
    for (std::size_t i = b * kBlock; i < last; ++i) {
      sampler.draw(trial_seed(seed, i), real);
      const PerWattSnrs u = per_watt_snrs(real, cfg);
      out.a[i] = u.a;
      out.b[i] = u.b;
      out.gamma1[i] = pa.p1 * u.gamma1;
      out.gamma2[i] = pa.p2 * u.gamma2;
      out.gamma_r[i] = pa.p1 * u.gamma_r;
    }
  });
  return out;
}

}  // namespace risrelay
