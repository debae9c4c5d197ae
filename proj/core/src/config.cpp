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

#include "risrelay/config.hpp"

#include <yaml-cpp/yaml.h>

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "risrelay/montecarlo.hpp"

namespace risrelay {

std::string Diagnostic::to_string() const {
  std::string out;
  if (line > 0) out += "line " + std::to_string(line) + ": ";
  if (!field.empty()) out += field + ": ";
  out += message;
  return out;
}

bool ConfigResult::has_parse_errors() const noexcept {
  return std::any_of(diagnostics.begin(), diagnostics.end(),
                     [](const Diagnostic& d) { return d.kind == Diagnostic::Kind::parse; });
}

namespace {

int line_of(const YAML::Node& node) {
  if (!node.IsDefined()) return 0;
  const YAML::Mark m = node.Mark();
  return m.line >= 0 ? m.line + 1 : 0;
}

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

// Collects diagnostics while walking the document.
class Reader {
 public:
  std::vector<Diagnostic> diagnostics;

  void error(const YAML::Node& at, std::string field, std::string message,
             Diagnostic::Kind kind = Diagnostic::Kind::parse) {
    diagnostics.push_back({kind, line_of(at), std::move(field), std::move(message)});
  }

  void infeasible(const YAML::Node& at, std::string field, std::string message) {
    error(at, std::move(field), std::move(message), Diagnostic::Kind::infeasible);
  }

  // Section map; absent or null yields an undefined-ish empty node.
  YAML::Node section(const YAML::Node& root, const std::string& name, bool required) {
    const YAML::Node node = root[name];
    if (!node.IsDefined() || node.IsNull()) {
      if (required) error(root, name, "missing required section");
      return YAML::Node(YAML::NodeType::Map);
    }
    if (!node.IsMap()) {
      error(node, name, "must be a mapping");
      return YAML::Node(YAML::NodeType::Map);
    }
    return node;
  }

  void reject_unknown(const YAML::Node& map, const std::string& prefix,
                      std::initializer_list<std::string_view> known) {
    for (auto it = map.begin(); it != map.end(); ++it) {
      const std::string key = it->first.as<std::string>();
      if (std::find(known.begin(), known.end(), key) == known.end()) {
        error(it->first, prefix.empty() ? key : prefix + "." + key, "unknown field");
      }
    }
  }

  static bool present(const YAML::Node& map, const std::string& key) {
    const YAML::Node n = map[key];
    return n.IsDefined() && !n.IsNull();
  }

  std::optional<std::string> string(const YAML::Node& map, const std::string& prefix,
                                    const std::string& key, bool required) {
    const YAML::Node n = map[key];
    const std::string field = prefix + "." + key;
    if (!n.IsDefined() || n.IsNull()) {
      if (required) error(map, field, "missing required field");
      return std::nullopt;
    }
    if (!n.IsScalar()) {
      error(n, field, "must be a scalar");
      return std::nullopt;
    }
    return n.Scalar();
  }

  std::optional<double> number(const YAML::Node& map, const std::string& prefix,
                               const std::string& key, bool required) {
    const YAML::Node n = map[key];
    const std::string field = prefix + "." + key;
    if (!n.IsDefined() || n.IsNull()) {
      if (required) error(map, field, "missing required field");
      return std::nullopt;
    }
    return as_number(n, field);
  }

  std::optional<double> as_number(const YAML::Node& n, const std::string& field) {
    double v = 0.0;
    if (!n.IsScalar() || !YAML::convert<double>::decode(n, v)) {
      error(n, field, "must be a number");
      return std::nullopt;
    }
    if (!std::isfinite(v)) {
      error(n, field, "must be finite");
      return std::nullopt;
    }
    return v;
  }

  std::optional<long long> integer(const YAML::Node& map, const std::string& prefix,
                                   const std::string& key, bool required, long long min_value) {
    const YAML::Node n = map[key];
    const std::string field = prefix + "." + key;
    if (!n.IsDefined() || n.IsNull()) {
      if (required) error(map, field, "missing required field");
      return std::nullopt;
    }
    long long v = 0;
    if (!n.IsScalar() || !YAML::convert<long long>::decode(n, v)) {
      error(n, field, "must be an integer");
      return std::nullopt;
    }
    if (v < min_value) {
      error(n, field, "must be at least " + std::to_string(min_value));
      return std::nullopt;
    }
    return v;
  }

  std::optional<std::uint64_t> unsigned64(const YAML::Node& map, const std::string& prefix,
                                          const std::string& key) {
    const YAML::Node n = map[key];
    if (!n.IsDefined() || n.IsNull()) return std::nullopt;
    std::uint64_t v = 0;
    if (!n.IsScalar() || !YAML::convert<std::uint64_t>::decode(n, v) ||
        n.Scalar().find('-') != std::string::npos) {
      error(n, prefix + "." + key, "must be an unsigned 64-bit integer");
      return std::nullopt;
    }
    return v;
  }

  std::optional<Point2> point(const YAML::Node& map, const std::string& prefix,
                              const std::string& key) {
    const YAML::Node n = map[key];
    const std::string field = prefix + "." + key;
    if (!n.IsDefined() || n.IsNull()) return std::nullopt;
    if (!n.IsSequence() || n.size() != 2) {
      error(n, field, "must be a two-element list [x, y]");
      return std::nullopt;
    }
    const auto x = as_number(n[0], field);
    const auto y = as_number(n[1], field);
    if (!x || !y) return std::nullopt;
    return Point2{*x, *y};
  }

  // Either a list of numbers or {start, stop, step} (inclusive of stop).
  std::optional<std::vector<double>> values(const YAML::Node& map, const std::string& prefix,
                                            const std::string& key) {
    const YAML::Node n = map[key];
    const std::string field = prefix + "." + key;
    if (!n.IsDefined() || n.IsNull()) return std::nullopt;
    if (n.IsSequence()) {
      std::vector<double> out;
      bool ok = true;
      for (const auto& item : n) {
        const auto v = as_number(item, field);
        if (v) {
          out.push_back(*v);
        } else {
          ok = false;
        }
      }
      if (!ok) return std::nullopt;
      return out;
    }
    if (n.IsMap()) {
      reject_unknown(n, field, {"start", "stop", "step"});
      const auto start = number(n, field, "start", true);
      const auto stop = number(n, field, "stop", true);
      const auto step = number(n, field, "step", true);
      if (!start || !stop || !step) return std::nullopt;
      if (!(*step > 0.0) || *stop < *start) {
        error(n, field, "range needs step > 0 and stop >= start");
        return std::nullopt;
      }
      const auto count = static_cast<std::size_t>(std::floor((*stop - *start) / *step + 1e-9)) + 1;
      if (count > 100000) {
        error(n, field, "range has more than 100000 values");
        return std::nullopt;
      }
      std::vector<double> out(count);
      for (std::size_t i = 0; i < count; ++i) out[i] = *start + static_cast<double>(i) * *step;
      return out;
    }
    error(n, field, "must be a list or a {start, stop, step} range");
    return std::nullopt;
  }
};

// "10dB", "10 dB", "10" (dB) -> dB value.
std::optional<double> parse_db_text(std::string text) {
  text = lower(std::move(text));
  text.erase(std::remove_if(text.begin(), text.end(),
                            [](unsigned char c) { return std::isspace(c); }),
             text.end());
  if (text.size() > 2 && text.compare(text.size() - 2, 2, "db") == 0) text.resize(text.size() - 2);
  if (text.empty()) return std::nullopt;
  try {
    std::size_t used = 0;
    const double v = std::stod(text, &used);
    if (used != text.size() || !std::isfinite(v)) return std::nullopt;
    return v;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

void read_scenario(Reader& r, const YAML::Node& root, RunConfig& out) {
  const YAML::Node s = r.section(root, "scenario", true);
  const std::string p = "scenario";
  r.reject_unknown(s, p,
                   {"scheme", "N", "K", "K_dB", "K_linear", "modulation_order", "relay_mode",
                    "objective", "phase_bits", "seed", "blocked_links"});
  ScenarioConfig& c = out.scenario;

  if (const auto scheme = r.string(s, p, "scheme", true)) {
    if (const auto parsed = parse_scheme(*scheme)) {
      c.scheme = *parsed;
    } else {
      r.error(s["scheme"], p + ".scheme",
              "unknown scheme '" + *scheme + "' (joint, integrated, ris-only, relay-only)");
    }
  }

  const bool needs_elements = c.scheme != Scheme::relay_only;
  if (const auto n = r.integer(s, p, "N", needs_elements, 0)) {
    c.elements = static_cast<std::size_t>(*n);
  }

  const int k_keys = Reader::present(s, "K") + Reader::present(s, "K_dB") +
                     Reader::present(s, "K_linear");
  if (k_keys == 0) {
    r.error(s, p + ".K", "missing required field (K, K_dB or K_linear)");
  } else if (k_keys > 1) {
    r.error(s, p + ".K", "give exactly one of K, K_dB, K_linear");
  } else if (Reader::present(s, "K")) {
    const YAML::Node k = s["K"];
    const auto db = k.IsScalar() ? parse_db_text(k.Scalar()) : std::nullopt;
    if (db) {
      c.k_factor = db_to_linear(*db);
    } else {
      r.error(k, p + ".K", "must be a dB value such as 10dB");
    }
  } else if (const auto kdb = r.number(s, p, "K_dB", false)) {
    c.k_factor = db_to_linear(*kdb);
  } else if (const auto klin = r.number(s, p, "K_linear", false)) {
    if (*klin < 0.0) {
      r.error(s["K_linear"], p + ".K_linear", "must be non-negative");
    } else {
      c.k_factor = *klin;
    }
  }

  if (const auto m = r.integer(s, p, "modulation_order", false, 2)) {
    if ((*m & (*m - 1)) != 0 || *m > 1024) {
      r.error(s["modulation_order"], p + ".modulation_order",
              "must be a power of two between 2 and 1024");
    } else {
      c.modulation_order = static_cast<int>(*m);
    }
  }
  if (const auto mode = r.string(s, p, "relay_mode", false)) {
    if (const auto parsed = parse_relay_mode(*mode)) {
      c.relay_mode = *parsed;
    } else {
      r.error(s["relay_mode"], p + ".relay_mode", "must be ideal or nonideal");
    }
  }
  if (const auto obj = r.string(s, p, "objective", false)) {
    if (const auto parsed = parse_objective(*obj)) {
      c.objective = *parsed;
    } else {
      r.error(s["objective"], p + ".objective", "must be printed or narrative");
    }
  }
  if (const auto bits = r.integer(s, p, "phase_bits", false, 0)) {
    if (*bits > 16) {
      r.error(s["phase_bits"], p + ".phase_bits", "must be at most 16");
    } else {
      c.phase_bits = static_cast<int>(*bits);
    }
  }
  if (const auto seed = r.unsigned64(s, p, "seed")) c.seed = *seed;

  const YAML::Node blocked = s["blocked_links"];
  if (blocked.IsDefined() && !blocked.IsNull()) {
    if (!blocked.IsSequence()) {
      r.error(blocked, p + ".blocked_links", "must be a list of link names");
    } else {
      for (const auto& item : blocked) {
        const auto link = item.IsScalar() ? parse_link(item.Scalar()) : std::nullopt;
        if (link) {
          c.blocked.insert(*link);
        } else {
          r.error(item, p + ".blocked_links", "unknown link name");
        }
      }
    }
  }
}

void read_layout(Reader& r, const YAML::Node& root, RunConfig& out) {
  const YAML::Node s = r.section(root, "layout", true);
  const std::string p = "layout";
  r.reject_unknown(s, p, {"source", "destination", "ris", "relay", "node"});
  NodeLayout& l = out.scenario.layout;

  const auto source = r.point(s, p, "source");
  const auto destination = r.point(s, p, "destination");
  if (source) {
    l.source = *source;
  } else if (!Reader::present(s, "source")) {
    r.error(s, p + ".source", "missing required field");
  }
  if (destination) {
    l.destination = *destination;
  } else if (!Reader::present(s, "destination")) {
    r.error(s, p + ".destination", "missing required field");
  }
  l.ris = r.point(s, p, "ris");
  l.relay = r.point(s, p, "relay");

  // The integrated scheme may name its shared device `node`.
  if (const auto node = r.point(s, p, "node")) {
    if (out.scenario.scheme != Scheme::integrated) {
      r.error(s["node"], p + ".node", "only valid for the integrated scheme");
    } else if (l.ris || l.relay) {
      r.error(s["node"], p + ".node", "give either node or ris/relay");
    } else {
      l.ris = l.relay = *node;
    }
  }
  if (out.scenario.scheme == Scheme::integrated) {
    if (l.ris && !l.relay) l.relay = l.ris;
    if (l.relay && !l.ris) l.ris = l.relay;
  }
}

void read_pathloss(Reader& r, const YAML::Node& root, RunConfig& out) {
  const YAML::Node s = r.section(root, "pathloss", true);
  const std::string p = "pathloss";
  r.reject_unknown(s, p,
                   {"model", "frequency_hz", "reference_db", "exponent",
                    "frequency_coefficient_db", "cascade", "min_distance_m"});
  PathLossModel& m = out.scenario.pathloss;

  const auto model = r.string(s, p, "model", true);
  const auto kind = model ? parse_path_loss_kind(*model) : std::nullopt;
  if (model && !kind) {
    r.error(s["model"], p + ".model", "unknown model (umi-2.4ghz, umi-sc-28ghz, custom)");
  }
  const auto freq = r.number(s, p, "frequency_hz", false);
  if (freq && !(*freq > 0.0)) r.error(s["frequency_hz"], p + ".frequency_hz", "must be positive");

  if (kind == PathLossKind::umi_2_4ghz) {
    m = PathLossModel::umi_2_4ghz(freq.value_or(2.4e9));
  } else if (kind == PathLossKind::umi_street_canyon_28ghz) {
    m = PathLossModel::umi_street_canyon_28ghz(freq.value_or(28e9));
  } else if (kind == PathLossKind::custom) {
    const auto ref = r.number(s, p, "reference_db", true);
    const auto exp = r.number(s, p, "exponent", true);
    m = PathLossModel::custom(freq.value_or(1e9), ref.value_or(0.0), exp.value_or(0.0));
  }
  if (kind && *kind != PathLossKind::custom) {
    if (const auto ref = r.number(s, p, "reference_db", false)) m.reference_db = *ref;
    if (const auto exp = r.number(s, p, "exponent", false)) m.exponent = *exp;
  }
  if (const auto fc = r.number(s, p, "frequency_coefficient_db", false)) {
    m.frequency_coefficient_db = *fc;
  }
  if (const auto dmin = r.number(s, p, "min_distance_m", false)) m.min_distance_m = *dmin;
  if (const auto cascade = r.string(s, p, "cascade", false)) {
    if (const auto parsed = parse_cascade_rule(*cascade)) {
      m.cascade = *parsed;
    } else {
      r.error(s["cascade"], p + ".cascade", "must be product or end-to-end");
    }
  }
  if (kind) {
    try {
      m.validate();
    } catch (const std::invalid_argument& e) {
      r.error(s, p, e.what());
    }
  }
}

void read_power(Reader& r, const YAML::Node& root, RunConfig& out) {
  const YAML::Node s = r.section(root, "power", true);
  const std::string p = "power";
  r.reject_unknown(s, p, {"P1", "P2", "P3", "P_tot"});
  ScenarioConfig& c = out.scenario;

  const bool has_explicit = Reader::present(s, "P1") || Reader::present(s, "P2") ||
                            Reader::present(s, "P3");
  const bool has_budget = Reader::present(s, "P_tot");
  if (has_explicit && has_budget) {
    r.error(s, p, "ambiguous: give either explicit powers (P1, P2) or P_tot, not both");
    return;
  }
  if (!has_explicit && !has_budget) {
    r.error(s, p, "missing powers: give P1 and P2, or P_tot");
    return;
  }
  auto non_negative = [&](const char* key, std::optional<double> v) {
    if (v && *v < 0.0) {
      r.error(s[key], p + "." + key, "must be non-negative");
      return std::optional<double>{};
    }
    return v;
  };
  if (has_budget) {
    if (const auto total = non_negative("P_tot", r.number(s, p, "P_tot", true))) {
      c.power = PowerBudget{*total};
    }
    return;
  }
  const bool needs_p2 = c.scheme != Scheme::ris_only;
  const auto p1 = non_negative("P1", r.number(s, p, "P1", true));
  const auto p2 = non_negative("P2", r.number(s, p, "P2", needs_p2));
  const auto p3 = non_negative("P3", r.number(s, p, "P3", false));
  if (p3) {
    if (c.scheme != Scheme::joint) {
      r.error(s["P3"], p + ".P3", "only applies to the joint scheme");
    } else if (p2 && *p3 != *p2) {
      r.infeasible(s["P3"], p + ".P3", "the joint scheme requires P3 == P2");
    }
  }
  if (p1) c.power = ExplicitPowers{*p1, p2.value_or(0.0)};
}

// Returns the SNR when N0 is given through it; N0 then follows from the
// powers.
std::optional<double> read_noise(Reader& r, const YAML::Node& root, RunConfig& out) {
  const YAML::Node s = r.section(root, "noise", true);
  const std::string p = "noise";
  r.reject_unknown(s, p, {"N0_dBm", "N0_W", "snr_db"});
  const int keys = Reader::present(s, "N0_dBm") + Reader::present(s, "N0_W") +
                   Reader::present(s, "snr_db");
  if (keys != 1) {
    r.error(s, p, "give exactly one of N0_dBm, N0_W, snr_db");
    return std::nullopt;
  }
  ScenarioConfig& c = out.scenario;
  if (const auto dbm = r.number(s, p, "N0_dBm", false)) {
    c.noise_power = dbm_to_watts(*dbm);
  } else if (const auto w = r.number(s, p, "N0_W", false)) {
    if (!(*w > 0.0)) {
      r.error(s["N0_W"], p + ".N0_W", "must be positive");
    } else {
      c.noise_power = *w;
    }
  } else {
    return r.number(s, p, "snr_db", false);
  }
  return std::nullopt;
}

void read_experiment(Reader& r, const YAML::Node& root, RunConfig& out) {
  const YAML::Node s = r.section(root, "experiment", false);
  const std::string p = "experiment";
  r.reject_unknown(s, p,
                   {"snr_db", "elements", "y_ris", "y_relay", "mgf_s", "trials", "min_errors",
                    "max_trials", "samples"});
  ExperimentSettings& e = out.experiment;
  if (auto v = r.values(s, p, "snr_db")) e.snr_db = std::move(*v);
  if (auto v = r.values(s, p, "elements")) {
    for (double n : *v) {
      if (!(n >= 0.0) || n != std::floor(n)) {
        r.error(s["elements"], p + ".elements", "values must be non-negative integers");
        break;
      }
    }
    e.elements = std::move(*v);
  }
  if (auto v = r.values(s, p, "y_ris")) e.y_ris = std::move(*v);
  if (auto v = r.values(s, p, "y_relay")) e.y_relay = std::move(*v);
  if (auto v = r.values(s, p, "mgf_s")) {
    if (std::any_of(v->begin(), v->end(), [](double x) { return x > 0.0; })) {
      r.error(s["mgf_s"], p + ".mgf_s", "MGF arguments must be <= 0");
    }
    e.mgf_s = std::move(*v);
  }
  if (const auto t = r.integer(s, p, "trials", false, 1)) e.trials = static_cast<std::size_t>(*t);
  if (const auto t = r.integer(s, p, "min_errors", false, 0)) {
    e.min_errors = static_cast<std::size_t>(*t);
  }
  if (const auto t = r.integer(s, p, "max_trials", false, 1)) {
    e.max_trials = static_cast<std::size_t>(*t);
  }
  if (const auto t = r.integer(s, p, "samples", false, 1)) e.samples = static_cast<std::size_t>(*t);
  if (e.max_trials < e.trials) r.error(s, p + ".max_trials", "must be at least trials");
}

void check_feasibility(Reader& r, const YAML::Node& root, RunConfig& out) {
  ScenarioConfig& c = out.scenario;
  const YAML::Node layout = root["layout"];
  for (const auto& v : layout_violations(c.layout, c.scheme)) r.infeasible(layout, "layout", v);

  const LinkSet required = required_links(c.scheme);
  for (Link link : c.blocked.members()) {
    if (required.contains(link)) {
      r.infeasible(root["scenario"]["blocked_links"], "scenario.blocked_links",
                   "link " + std::string(to_string(link)) + " is required by the " +
                       std::string(to_string(c.scheme)) + " scheme");
    }
  }
  if (c.scheme == Scheme::relay_only && c.elements != 0) {
    r.error(root["scenario"]["N"], "scenario.N", "must be 0 for the relay-only scheme");
  }
  if (total_power(c) <= 0.0) r.infeasible(root["power"], "power", "total power must be positive");
}

}  // namespace

ConfigResult validate_config(std::string_view text) {
  ConfigResult result;
  Reader r;
  YAML::Node root;
  try {
    root = YAML::Load(std::string(text));
  } catch (const YAML::Exception& e) {
    result.diagnostics.push_back(
        {Diagnostic::Kind::parse, e.mark.line >= 0 ? e.mark.line + 1 : 0, "", e.msg});
    return result;
  }
  if (!root.IsMap()) {
    result.diagnostics.push_back({Diagnostic::Kind::parse, line_of(root), "", "config must be a mapping"});
    return result;
  }

  RunConfig cfg;
  try {
    r.reject_unknown(root, "", {"scenario", "layout", "pathloss", "power", "noise", "experiment"});
    read_scenario(r, root, cfg);
    read_layout(r, root, cfg);
    read_pathloss(r, root, cfg);
    read_power(r, root, cfg);
    const auto snr_db = read_noise(r, root, cfg);
    read_experiment(r, root, cfg);
    if (!r.diagnostics.empty()) {
      result.diagnostics = std::move(r.diagnostics);
      return result;
    }
    if (snr_db) cfg.scenario = with_snr_db(cfg.scenario, *snr_db);
    check_feasibility(r, root, cfg);
  } catch (const YAML::Exception& e) {
    r.error(root, "", e.what());
  }

  result.diagnostics = std::move(r.diagnostics);
  if (result.diagnostics.empty()) result.config = std::move(cfg);
  return result;
}

ConfigResult load_config(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read config " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw std::runtime_error("cannot read config " + path.string());
  return validate_config(buf.str());
}

namespace {

std::string point_text(Point2 p) {
  return "[" + format_double(p.x) + ", " + format_double(p.y) + "]";
}

std::string list_text(const std::vector<double>& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += format_double(v[i]);
  }
  return out + "]";
}

}  // namespace

std::string emit_config(const RunConfig& cfg) {
  const ScenarioConfig& c = cfg.scenario;
  std::ostringstream o;
  o << "scenario:\n"
    << "  scheme: " << to_string(c.scheme) << "\n"
    << "  N: " << c.elements << "\n"
    << "  K_linear: " << format_double(c.k_factor) << "\n"
    << "  modulation_order: " << c.modulation_order << "\n"
    << "  relay_mode: " << to_string(c.relay_mode) << "\n"
    << "  objective: " << to_string(c.objective) << "\n"
    << "  phase_bits: " << c.phase_bits << "\n"
    << "  seed: " << c.seed << "\n"
    << "  blocked_links: [";
  const auto blocked = c.blocked.members();
  for (std::size_t i = 0; i < blocked.size(); ++i) {
    o << (i ? ", " : "") << to_string(blocked[i]);
  }
  o << "]\n";

  o << "layout:\n"
    << "  source: " << point_text(c.layout.source) << "\n"
    << "  destination: " << point_text(c.layout.destination) << "\n";
  if (c.layout.ris) o << "  ris: " << point_text(*c.layout.ris) << "\n";
  if (c.layout.relay) o << "  relay: " << point_text(*c.layout.relay) << "\n";

  const PathLossModel& m = c.pathloss;
  o << "pathloss:\n"
    << "  model: " << to_string(m.kind) << "\n"
    << "  frequency_hz: " << format_double(m.carrier_frequency_hz) << "\n"
    << "  reference_db: " << format_double(m.reference_db) << "\n"
    << "  exponent: " << format_double(m.exponent) << "\n"
    << "  frequency_coefficient_db: " << format_double(m.frequency_coefficient_db) << "\n"
    << "  cascade: " << to_string(m.cascade) << "\n"
    << "  min_distance_m: " << format_double(m.min_distance_m) << "\n";

  o << "power:\n";
  if (const auto* fixed = std::get_if<ExplicitPowers>(&c.power)) {
    o << "  P1: " << format_double(fixed->p1) << "\n";
    if (c.scheme != Scheme::ris_only || fixed->p2 != 0.0) {
      o << "  P2: " << format_double(fixed->p2) << "\n";
    }
  } else {
    o << "  P_tot: " << format_double(std::get<PowerBudget>(c.power).total) << "\n";
  }
  o << "noise:\n  N0_W: " << format_double(c.noise_power) << "\n";

  const ExperimentSettings& e = cfg.experiment;
  o << "experiment:\n";
  if (!e.snr_db.empty()) o << "  snr_db: " << list_text(e.snr_db) << "\n";
  if (!e.elements.empty()) o << "  elements: " << list_text(e.elements) << "\n";
  if (!e.y_ris.empty()) o << "  y_ris: " << list_text(e.y_ris) << "\n";
  if (!e.y_relay.empty()) o << "  y_relay: " << list_text(e.y_relay) << "\n";
  o << "  mgf_s: " << list_text(e.mgf_s) << "\n"
    << "  trials: " << e.trials << "\n"
    << "  min_errors: " << e.min_errors << "\n"
    << "  max_trials: " << e.max_trials << "\n"
    << "  samples: " << e.samples << "\n";
  return o.str();
}

}  // namespace risrelay
