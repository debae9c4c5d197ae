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

#include "risrelay/geometry.hpp"

#include <array>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace risrelay {

double distance(Point2 a, Point2 b) noexcept { return std::hypot(a.x - b.x, a.y - b.y); }

namespace {

constexpr std::array<std::pair<Scheme, std::string_view>, 4> kSchemeNames{{
    {Scheme::joint, "joint"},
    {Scheme::integrated, "integrated"},
    {Scheme::ris_only, "ris-only"},
    {Scheme::relay_only, "relay-only"},
}};

constexpr std::array<std::pair<PathLossKind, std::string_view>, 3> kPathLossNames{{
    {PathLossKind::umi_2_4ghz, "umi-2.4ghz"},
    {PathLossKind::umi_street_canyon_28ghz, "umi-sc-28ghz"},
    {PathLossKind::custom, "custom"},
}};

constexpr std::array<std::pair<CascadeRule, std::string_view>, 2> kCascadeNames{{
    {CascadeRule::segment_product, "product"},
    {CascadeRule::end_to_end, "end-to-end"},
}};

constexpr std::array<std::pair<Link, std::string_view>, kLinkCount> kLinkNames{{
    {Link::source_ris, "source-ris"},
    {Link::ris_destination, "ris-destination"},
    {Link::ris_relay, "ris-relay"},
    {Link::source_relay, "source-relay"},
    {Link::relay_destination, "relay-destination"},
    {Link::source_destination, "source-destination"},
}};

template <typename E, std::size_t N>
std::string_view name_of(const std::array<std::pair<E, std::string_view>, N>& table, E value) {
  for (const auto& [e, name] : table) {
    if (e == value) return name;
  }
  return "?";
}

template <typename E, std::size_t N>
std::optional<E> value_of(const std::array<std::pair<E, std::string_view>, N>& table,
                          std::string_view text) {
  for (const auto& [e, name] : table) {
    if (name == text) return e;
  }
  return std::nullopt;
}

bool finite(Point2 p) { return std::isfinite(p.x) && std::isfinite(p.y); }

std::string format_point(Point2 p) {
  std::ostringstream os;
  os << '(' << p.x << ", " << p.y << ')';
  return os.str();
}

}  // namespace

std::string_view to_string(Scheme scheme) noexcept { return name_of(kSchemeNames, scheme); }
std::optional<Scheme> parse_scheme(std::string_view text) noexcept {
  return value_of(kSchemeNames, text);
}

std::string_view to_string(PathLossKind kind) noexcept { return name_of(kPathLossNames, kind); }
std::optional<PathLossKind> parse_path_loss_kind(std::string_view text) noexcept {
  return value_of(kPathLossNames, text);
}

std::string_view to_string(CascadeRule rule) noexcept { return name_of(kCascadeNames, rule); }
std::optional<CascadeRule> parse_cascade_rule(std::string_view text) noexcept {
  return value_of(kCascadeNames, text);
}

std::string_view to_string(Link link) noexcept { return name_of(kLinkNames, link); }
std::optional<Link> parse_link(std::string_view text) noexcept {
  return value_of(kLinkNames, text);
}

std::vector<Link> LinkSet::members() const {
  std::vector<Link> out;
  for (int i = 0; i < kLinkCount; ++i) {
    const auto l = static_cast<Link>(i);
    if (contains(l)) out.push_back(l);
  }
  return out;
}

std::vector<std::string> layout_violations(const NodeLayout& layout, Scheme scheme) {
  std::vector<std::string> out;
  const bool needs_ris = scheme != Scheme::relay_only;
  const bool needs_relay = scheme != Scheme::ris_only;

  if (!finite(layout.source)) out.emplace_back("source coordinates must be finite");
  if (!finite(layout.destination)) out.emplace_back("destination coordinates must be finite");
  if (layout.ris && !finite(*layout.ris)) out.emplace_back("ris coordinates must be finite");
  if (layout.relay && !finite(*layout.relay)) out.emplace_back("relay coordinates must be finite");
  if (needs_ris && !layout.ris) out.emplace_back("scheme requires ris coordinates");
  if (needs_relay && !layout.relay) out.emplace_back("scheme requires relay coordinates");
  if (!out.empty()) return out;

  struct Named {
    std::string_view name;
    Point2 p;
  };
  std::vector<Named> nodes{{"source", layout.source}, {"destination", layout.destination}};
  if (needs_ris) nodes.push_back({"ris", *layout.ris});
  if (needs_relay && scheme != Scheme::integrated) nodes.push_back({"relay", *layout.relay});

  if (scheme == Scheme::integrated && *layout.ris != *layout.relay) {
    out.emplace_back("integrated scheme requires ris and relay at the same position, got " +
                     format_point(*layout.ris) + " and " + format_point(*layout.relay));
  }
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    for (std::size_t j = i + 1; j < nodes.size(); ++j) {
      if (nodes[i].p == nodes[j].p) {
        out.push_back(std::string(nodes[i].name) + " and " + std::string(nodes[j].name) +
                      " coincide at " + format_point(nodes[i].p));
      }
    }
  }
  return out;
}

PathLossModel PathLossModel::umi_2_4ghz(double carrier_frequency_hz) {
  PathLossModel m;
  m.kind = PathLossKind::umi_2_4ghz;
  m.carrier_frequency_hz = carrier_frequency_hz;
  m.reference_db = 22.7;
  m.exponent = 3.67;
  m.frequency_coefficient_db = 26.0;
  return m;
}

PathLossModel PathLossModel::umi_street_canyon_28ghz(double carrier_frequency_hz) {
  PathLossModel m;
  m.kind = PathLossKind::umi_street_canyon_28ghz;
  m.carrier_frequency_hz = carrier_frequency_hz;
  m.reference_db = 32.4;
  m.exponent = 2.1;
  m.frequency_coefficient_db = 20.0;
  return m;
}

PathLossModel PathLossModel::custom(double carrier_frequency_hz, double reference_db,
                                    double exponent, double frequency_coefficient_db) {
  PathLossModel m;
  m.kind = PathLossKind::custom;
  m.carrier_frequency_hz = carrier_frequency_hz;
  m.reference_db = reference_db;
  m.exponent = exponent;
  m.frequency_coefficient_db = frequency_coefficient_db;
  return m;
}

void PathLossModel::validate() const {
  if (!(carrier_frequency_hz > 0.0) || !std::isfinite(carrier_frequency_hz)) {
    throw std::invalid_argument("path loss: carrier frequency must be positive");
  }
  if (!(min_distance_m > 0.0) || !std::isfinite(min_distance_m)) {
    throw std::invalid_argument("path loss: minimum distance must be positive");
  }
  if (!(exponent >= 0.0) || !std::isfinite(exponent)) {
    throw std::invalid_argument("path loss: distance exponent must be non-negative");
  }
  if (!std::isfinite(reference_db) || !std::isfinite(frequency_coefficient_db)) {
    throw std::invalid_argument("path loss: coefficients must be finite");
  }
  if (loss_db(min_distance_m) < 0.0) {
    throw std::invalid_argument("path loss: loss at the minimum distance is negative");
  }
}

double PathLossModel::loss_db(double d) const {
  const double clamped = std::max(d, min_distance_m);
  return reference_db + 10.0 * exponent * std::log10(clamped) +
         frequency_coefficient_db * std::log10(carrier_frequency_hz / 1e9);
}

double pathloss_linear(const PathLossModel& model, double d) {
  if (!std::isfinite(d) || d < 0.0) {
    throw std::domain_error("path loss: distance must be finite and non-negative");
  }
  if (!(model.min_distance_m > 0.0)) {
    throw std::domain_error("path loss: non-positive distance after clamping");
  }
  const double db = std::max(model.loss_db(d), 0.0);
  return std::pow(10.0, -db / 10.0);
}

LinkSet required_links(Scheme scheme) {
  switch (scheme) {
    case Scheme::joint:
      return {Link::source_ris, Link::ris_destination, Link::ris_relay, Link::relay_destination};
    case Scheme::integrated:
      return {Link::source_ris, Link::ris_destination, Link::source_relay,
              Link::relay_destination};
    case Scheme::ris_only:
      return {Link::source_ris, Link::ris_destination};
    case Scheme::relay_only:
      return {Link::source_relay, Link::relay_destination};
  }
  return {};
}

LinkBudget cascaded_loss(const NodeLayout& layout, const PathLossModel& model, Scheme scheme,
                         LinkSet blocked) {
  const LinkSet needed = required_links(scheme);
  for (Link l : needed.members()) {
    if (blocked.contains(l)) {
      throw std::domain_error("link " + std::string(to_string(l)) + " is blocked but required by " +
                              std::string(to_string(scheme)) + " scheme");
    }
  }
  if (needed.contains(Link::source_ris) && !layout.ris) {
    throw std::invalid_argument("layout has no ris position");
  }
  if ((needed.contains(Link::relay_destination) || needed.contains(Link::ris_relay)) &&
      !layout.relay) {
    throw std::invalid_argument("layout has no relay position");
  }

  auto gain = [&](Point2 a, Point2 b, std::string_view what) {
    const double d = distance(a, b);
    if (!(d > 0.0)) {
      throw std::domain_error("zero-length " + std::string(what) + " link");
    }
    return pathloss_linear(model, d);
  };

  LinkBudget out;
  const Point2 s = layout.source;
  const Point2 dst = layout.destination;

  if (needed.contains(Link::source_ris)) {
    const Point2 r = *layout.ris;
    if (model.cascade == CascadeRule::segment_product) {
      out.source_ris = gain(s, r, "source-ris");
      out.ris_destination = gain(r, dst, "ris-destination");
    } else {
      out.source_ris = 1.0;
      out.ris_destination = gain(s, dst, "source-destination (end-to-end)");
    }
    out.ris_cascade = out.source_ris * out.ris_destination;
  }
  if (needed.contains(Link::ris_relay)) {
    if (model.cascade == CascadeRule::segment_product) {
      out.ris_relay = gain(*layout.ris, *layout.relay, "ris-relay");
    } else {
      out.ris_relay = gain(s, *layout.relay, "source-relay (end-to-end)");
    }
    out.relay_cascade = out.source_ris * out.ris_relay;
  }
  if (needed.contains(Link::source_relay)) {
    out.source_relay = gain(s, *layout.relay, "source-relay");
  }
  if (needed.contains(Link::relay_destination)) {
    out.relay_destination = gain(*layout.relay, dst, "relay-destination");
  }
  return out;
}

}  // namespace risrelay
