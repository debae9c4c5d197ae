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

#include "risrelay/run.hpp"

#include <nlohmann/json.hpp>

#include <charconv>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>

#include "risrelay/experiments.hpp"
#include "risrelay/version.hpp"

namespace risrelay {

namespace {

// FNV-1a, 64 bit.
std::uint64_t fnv1a(std::string_view text) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

nlohmann::json point_json(Point2 p) { return nlohmann::json::array({p.x, p.y}); }

nlohmann::json config_json(const RunConfig& cfg) {
  const ScenarioConfig& c = cfg.scenario;
  nlohmann::json j;
  j["scheme"] = to_string(c.scheme);
  j["N"] = c.elements;
  j["K_linear"] = c.k_factor;
  j["modulation_order"] = c.modulation_order;
  j["relay_mode"] = to_string(c.relay_mode);
  j["objective"] = to_string(c.objective);
  j["phase_bits"] = c.phase_bits;
  j["seed"] = c.seed;
  auto& blocked = j["blocked_links"] = nlohmann::json::array();
  for (Link l : c.blocked.members()) blocked.push_back(to_string(l));

  auto& layout = j["layout"];
  layout["source"] = point_json(c.layout.source);
  layout["destination"] = point_json(c.layout.destination);
  if (c.layout.ris) layout["ris"] = point_json(*c.layout.ris);
  if (c.layout.relay) layout["relay"] = point_json(*c.layout.relay);

  auto& pl = j["pathloss"];
  pl["model"] = to_string(c.pathloss.kind);
  pl["frequency_hz"] = c.pathloss.carrier_frequency_hz;
  pl["reference_db"] = c.pathloss.reference_db;
  pl["exponent"] = c.pathloss.exponent;
  pl["frequency_coefficient_db"] = c.pathloss.frequency_coefficient_db;
  pl["cascade"] = to_string(c.pathloss.cascade);
  pl["min_distance_m"] = c.pathloss.min_distance_m;

  if (const auto* fixed = std::get_if<ExplicitPowers>(&c.power)) {
    j["power"] = {{"P1", fixed->p1}, {"P2", fixed->p2}};
  } else {
    j["power"] = {{"P_tot", std::get<PowerBudget>(c.power).total}};
  }
  j["noise"] = {{"N0_W", c.noise_power}};
  return j;
}

bool write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) return false;
  out << text;
  out.flush();
  return static_cast<bool>(out);
}

}  // namespace

unsigned resolve_thread_count(std::optional<unsigned> requested) {
  if (requested) return *requested;
  if (const char* env = std::getenv("RISRELAY_THREADS")) {
    unsigned value = 0;
    const std::string_view text(env);
    const auto res = std::from_chars(text.data(), text.data() + text.size(), value);
    if (res.ec == std::errc{} && res.ptr == text.data() + text.size()) return value;
  }
  return 0;
}

std::string run_id(const RunConfig& cfg, std::string_view experiment) {
  const std::string key = emit_config(cfg) + "\n" + std::string(experiment) + "\n" + kVersion;
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a(key)));
  return buf;
}

std::string to_csv(const ExperimentResult& result, std::string_view id) {
  std::ostringstream o;
  o << "swept,metric,value,ci_halfwidth,trials,seed,run_id\n";
  for (const ResultRow& r : result.rows) {
    o << r.swept << ',' << r.metric << ',' << format_double(r.value) << ','
      << format_double(r.ci_halfwidth) << ',' << r.trials << ',' << r.seed << ',' << id << '\n';
  }
  return o.str();
}

std::string to_manifest(const ExperimentResult& result, const RunConfig& cfg,
                        std::string_view experiment, std::string_view id) {
  nlohmann::json j;
  j["run_id"] = id;
  j["tool"] = "risrelay";
  j["version"] = kVersion;
  j["experiment"] = experiment;
  j["seed"] = result.seed;
  j["config"] = config_json(cfg);
  j["config_yaml"] = emit_config(cfg);
  j["axes"] = result.axes;
  j["rows"] = result.rows.size();
  auto& low = j["low_confidence"] = nlohmann::json::array();
  for (const ResultRow& r : result.rows) {
    if (r.low_confidence) low.push_back({{"swept", r.swept}, {"metric", r.metric}});
  }
  return j.dump(2) + "\n";
}

int run_experiment(const RunOptions& options, std::ostream& log) {
  const auto kind = parse_experiment(options.experiment);
  if (!kind) {
    log << "error: unknown experiment '" << options.experiment
        << "' (ber-sweep, rate-vs-position, rate-vs-N, power-allocation-map, "
           "oracle-validation)\n";
    return kExitParse;
  }

  ConfigResult loaded;
  try {
    loaded = load_config(options.config);
  } catch (const std::exception& e) {
    log << "error: " << e.what() << "\n";
    return kExitIo;
  }
  if (!loaded.ok()) {
    for (const auto& d : loaded.diagnostics) {
      log << options.config.string() << ": "
          << (d.kind == Diagnostic::Kind::parse ? "error: " : "infeasible: ") << d.to_string()
          << "\n";
    }
    return loaded.has_parse_errors() ? kExitParse : kExitInfeasible;
  }

  RunConfig cfg = *loaded.config;
  if (options.seed) cfg.scenario.seed = *options.seed;
  const unsigned threads = resolve_thread_count(options.threads);

  ExperimentResult result;
  try {
    result = run_named_experiment(*kind, cfg, threads);
  } catch (const InfeasibleExperiment& e) {
    log << "infeasible: " << e.what() << "\n";
    return kExitInfeasible;
  } catch (const std::domain_error& e) {
    log << "infeasible: " << e.what() << "\n";
    return kExitInfeasible;
  } catch (const std::invalid_argument& e) {
    log << "infeasible: " << e.what() << "\n";
    return kExitInfeasible;
  }

  std::error_code ec;
  std::filesystem::create_directories(options.out, ec);
  if (ec) {
    log << "error: cannot create " << options.out.string() << ": " << ec.message() << "\n";
    return kExitIo;
  }
  const std::string id = run_id(cfg, options.experiment);
  const auto base = options.out / options.experiment;
  if (!write_file(base.string() + ".csv", to_csv(result, id)) ||
      !write_file(base.string() + ".manifest.json", to_manifest(result, cfg, options.experiment, id))) {
    log << "error: cannot write results under " << options.out.string() << "\n";
    return kExitIo;
  }
  log << "wrote " << result.rows.size() << " rows to " << base.string() << ".csv (run " << id
      << ")\n";
  return kExitOk;
}

}  // namespace risrelay
