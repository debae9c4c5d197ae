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

#include "risrelay/experiments.hpp"

#include <array>
#include <cmath>
#include <string>
#include <utility>

#include "risrelay/analytic.hpp"

namespace risrelay {

namespace {

constexpr std::array<std::pair<ExperimentKind, std::string_view>, 5> kNames{{
    {ExperimentKind::ber_sweep, "ber-sweep"},
    {ExperimentKind::rate_vs_position, "rate-vs-position"},
    {ExperimentKind::rate_vs_n, "rate-vs-N"},
    {ExperimentKind::power_allocation_map, "power-allocation-map"},
    {ExperimentKind::oracle_validation, "oracle-validation"},
}};

void add_position_axes(SweepPlan& plan, const RunConfig& cfg) {
  const ExperimentSettings& e = cfg.experiment;
  if (e.y_ris.empty() && e.y_relay.empty()) {
    throw InfeasibleExperiment("experiment needs experiment.y_ris and/or experiment.y_relay");
  }
  if (!e.y_ris.empty()) plan.axes.push_back(SweepAxis::coordinate(Node::ris, true, e.y_ris));
  if (!e.y_relay.empty()) {
    if (cfg.scenario.scheme == Scheme::integrated) {
      throw InfeasibleExperiment(
          "the integrated scheme has one shared device; sweep it with experiment.y_ris");
    }
    plan.axes.push_back(SweepAxis::coordinate(Node::relay, true, e.y_relay));
  }
}

void require_fixed_powers(const RunConfig& cfg, std::string_view what) {
  if (!std::holds_alternative<ExplicitPowers>(cfg.scenario.power)) {
    throw InfeasibleExperiment(std::string(what) + " needs fixed powers P1, P2 rather than P_tot");
  }
}

// Every point must be a usable scenario before any simulation starts.
void check_points(const SweepPlan& plan) {
  for (const SweepPoint& p : expand(plan)) {
    const auto issues = layout_violations(p.config.layout, p.config.scheme);
    if (!issues.empty()) throw InfeasibleExperiment("sweep point " + p.label + ": " + issues.front());
    try {
      cascaded_loss(p.config.layout, p.config.pathloss, p.config.scheme, p.config.blocked);
    } catch (const std::exception& e) {
      throw InfeasibleExperiment("sweep point " + p.label + ": " + e.what());
    }
  }
}

// Rows of `first` and `second` grouped by sweep point, first's rows leading.
std::vector<ResultRow> interleave(const SweepPlan& plan, const ExperimentResult& first,
                                  const ExperimentResult& second) {
  std::vector<ResultRow> out;
  out.reserve(first.rows.size() + second.rows.size());
  for (const SweepPoint& p : expand(plan)) {
    for (const auto* r : {&first, &second}) {
      for (const ResultRow& row : r->rows) {
        if (row.swept == p.label) out.push_back(row);
      }
    }
  }
  return out;
}

ResultRow analytic_row(std::string swept, std::string metric, double value, std::uint64_t seed) {
  ResultRow row;
  row.swept = std::move(swept);
  row.metric = std::move(metric);
  row.value = value;
  row.seed = seed;
  return row;
}

ResultRow sampled_row(std::string swept, std::string metric, double value, double halfwidth,
                      std::uint64_t trials, std::uint64_t seed) {
  ResultRow row = analytic_row(std::move(swept), std::move(metric), value, seed);
  row.ci_halfwidth = halfwidth;
  row.trials = trials;
  return row;
}

void moment_rows(std::vector<ResultRow>& rows, const std::string& swept, const std::string& name,
                 const GainStatistics& stats, const std::vector<double>& samples,
                 std::uint64_t seed) {
  const double n = static_cast<double>(samples.size());
  double mean = 0.0;
  for (double x : samples) mean += x;
  mean /= n;
  double var = 0.0;
  for (double x : samples) var += (x - mean) * (x - mean);
  var /= n - 1.0;
  const double z = 1.959963984540054;
  rows.push_back(analytic_row(swept, "mean_" + name + "_analytic", stats.mean, seed));
  rows.push_back(sampled_row(swept, "mean_" + name + "_sampled", mean, z * std::sqrt(var / n),
                             samples.size(), seed));
  rows.push_back(analytic_row(swept, "var_" + name + "_analytic", stats.variance, seed));
  rows.push_back(sampled_row(swept, "var_" + name + "_sampled", var,
                             z * var * std::sqrt(2.0 / (n - 1.0)), samples.size(), seed));
}

void mgf_rows(std::vector<ResultRow>& rows, const std::string& swept, const std::string& name,
              const Mgf& mgf, const std::vector<double>& samples,
              const std::vector<double>& arguments, std::uint64_t seed) {
  for (double s : arguments) {
    const std::string label = swept + ";s=" + format_double(s);
    const MgfEstimate est = empirical_mgf(samples, s);
    rows.push_back(analytic_row(label, "mgf_" + name + "_analytic", mgf(s), seed));
    rows.push_back(sampled_row(label, "mgf_" + name + "_sampled", est.value,
                               1.959963984540054 * est.standard_error, samples.size(), seed));
  }
}

ExperimentResult oracle_validation(const SweepPlan& plan, const RunConfig& cfg) {
  ExperimentResult result;
  result.base = plan.base;
  result.seed = plan.seed;
  for (const auto& axis : plan.axes) result.axes.push_back(axis.label());

  for (const SweepPoint& p : expand(plan)) {
    const ScenarioConfig& c = p.config;
    const PowerAllocation pa = explicit_allocation(c);
    const LinkBudget lb = cascaded_loss(c.layout, c.pathloss, c.scheme, c.blocked);
    const GainSamples s = sample_gains(c, cfg.experiment.samples, plan.seed, plan.threads);

    const bool has_ris = c.scheme != Scheme::relay_only;
    const bool has_second = c.scheme != Scheme::ris_only;
    const GainStatistics a = stats_A(c.elements, c.k_factor, lb.ris_cascade);
    // B for the joint scheme; the bare relay envelope |g_RD| otherwise.
    const GainStatistics b =
        c.scheme == Scheme::joint
            ? stats_B(c.elements, c.k_factor, lb.ris_cascade, lb.relay_destination)
            : stats_B(0, c.k_factor, 0.0, lb.relay_destination);

    if (has_ris) moment_rows(result.rows, p.label, "A", a, s.a, plan.seed);
    if (has_second) moment_rows(result.rows, p.label, "B", b, s.b, plan.seed);

    const auto& args = cfg.experiment.mgf_s;
    if (has_ris) {
      mgf_rows(result.rows, p.label, "gamma1", mgf_gamma(a, pa.p1, pa.noise), s.gamma1, args,
               plan.seed);
    }
    if (has_second) {
      const Mgf m2 = c.scheme == Scheme::joint
                         ? mgf_gamma(b, pa.p2, pa.noise)
                         : mgf_gamma2_integrated(c.k_factor, lb.relay_destination, pa.p2, pa.noise);
      mgf_rows(result.rows, p.label, "gamma2", m2, s.gamma2, args, plan.seed);
    }
  }
  return result;
}

}  // namespace

std::string_view to_string(ExperimentKind kind) noexcept {
  for (const auto& [k, name] : kNames) {
    if (k == kind) return name;
  }
  return "?";
}

std::optional<ExperimentKind> parse_experiment(std::string_view text) noexcept {
  for (const auto& [k, name] : kNames) {
    if (name == text) return k;
  }
  return std::nullopt;
}

SweepPlan make_plan(ExperimentKind kind, const RunConfig& cfg, unsigned threads) {
  const ExperimentSettings& e = cfg.experiment;
  SweepPlan plan;
  plan.base = cfg.scenario;
  plan.seed = cfg.scenario.seed;
  plan.threads = threads;
  plan.trials = e.trials;
  plan.min_error_events = e.min_errors;
  plan.max_trials = e.max_trials;

  switch (kind) {
    case ExperimentKind::ber_sweep:
      if (!e.elements.empty()) plan.axes.push_back(SweepAxis::elements(e.elements));
      if (!e.snr_db.empty()) plan.axes.push_back(SweepAxis::snr_db(e.snr_db));
      break;
    case ExperimentKind::rate_vs_position:
    case ExperimentKind::power_allocation_map:
      add_position_axes(plan, cfg);
      break;
    case ExperimentKind::rate_vs_n:
      if (e.elements.empty()) throw InfeasibleExperiment("rate-vs-N needs experiment.elements");
      plan.axes.push_back(SweepAxis::elements(e.elements));
      break;
    case ExperimentKind::oracle_validation:
      if (!e.elements.empty()) plan.axes.push_back(SweepAxis::elements(e.elements));
      break;
  }
  return plan;
}

ExperimentResult run_named_experiment(ExperimentKind kind, const RunConfig& cfg,
                                      unsigned threads) {
  const SweepPlan plan = make_plan(kind, cfg, threads);
  check_points(plan);

  switch (kind) {
    case ExperimentKind::ber_sweep: {
      require_fixed_powers(cfg, "ber-sweep");
      ExperimentResult sim = simulate_ber(plan);
      ExperimentResult analytic;
      const std::string metric =
          cfg.scenario.modulation_order == 2 ? "ber_analytic" : "ser_analytic";
      for (const SweepPoint& p : expand(plan)) {
        analytic.rows.push_back(analytic_row(p.label, metric, analytic_sep(p.config), plan.seed));
      }
      sim.rows = interleave(plan, sim, analytic);
      return sim;
    }
    case ExperimentKind::rate_vs_position:
    case ExperimentKind::rate_vs_n: {
      ExperimentResult ideal = simulate_rate(plan, RelayMode::ideal);
      const ExperimentResult nonideal = simulate_rate(plan, RelayMode::nonideal);
      ideal.rows = interleave(plan, ideal, nonideal);
      return ideal;
    }
    case ExperimentKind::power_allocation_map:
      if (!std::holds_alternative<PowerBudget>(cfg.scenario.power)) {
        throw InfeasibleExperiment("power-allocation-map needs power.P_tot");
      }
      return simulate_rate(plan, RelayMode::nonideal);
    case ExperimentKind::oracle_validation:
      require_fixed_powers(cfg, "oracle-validation");
      return oracle_validation(plan, cfg);
  }
  throw InfeasibleExperiment("unknown experiment");
}

}  // namespace risrelay
