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

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace risrelay {

// ------------------------------------------------------------------------
// Node placement
// ------------------------------------------------------------------------

/// Position in the xy-plane, meters.
struct Point2 {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Point2&, const Point2&) = default;
};

/// Euclidean distance in meters.
double distance(Point2 a, Point2 b) noexcept;

enum class Scheme {
  joint,       // RIS near the source, DF relay fed through the RIS
  integrated,  // RIS and DF relay share one device
  ris_only,    // single-RIS benchmark
  relay_only,  // single-relay benchmark
};

std::string_view to_string(Scheme scheme) noexcept;
std::optional<Scheme> parse_scheme(std::string_view text) noexcept;

/// Terminal and helper-node positions. The RIS or the relay may be absent
/// for the benchmark schemes; the integrated scheme requires both to
/// coincide.
struct NodeLayout {
  Point2 source;
  Point2 destination;
  std::optional<Point2> ris;
  std::optional<Point2> relay;

  friend bool operator==(const NodeLayout&, const NodeLayout&) = default;
};

/// Human-readable layout problems for `scheme`; empty when the layout is
/// usable.
std::vector<std::string> layout_violations(const NodeLayout& layout, Scheme scheme);

// ------------------------------------------------------------------------
// Large-scale path loss
// ------------------------------------------------------------------------

enum class PathLossKind {
  umi_2_4ghz,               // 3GPP UMi NLOS
  umi_street_canyon_28ghz,  // 5G UMi street canyon LOS (close-in form)
  custom,
};

std::string_view to_string(PathLossKind kind) noexcept;
std::optional<PathLossKind> parse_path_loss_kind(std::string_view text) noexcept;

/// How the source-RIS-receiver cascade is attenuated.
enum class CascadeRule {
  segment_product,  // gain(S->RIS) * gain(RIS->receiver)
  end_to_end,       // single gain over the straight S->receiver distance
};

std::string_view to_string(CascadeRule rule) noexcept;
std::optional<CascadeRule> parse_cascade_rule(std::string_view text) noexcept;

/// Affine-in-log10 path loss
///
///   PL_dB(d) = reference_db + 10 * exponent * log10(d / 1 m)
///              + frequency_coefficient_db * log10(f / 1 GHz)
///
/// Distances below `min_distance_m` are clamped so that PL_dB stays
/// non-negative.
struct PathLossModel {
  PathLossKind kind = PathLossKind::custom;
  double carrier_frequency_hz = 2.4e9;
  double reference_db = 0.0;
  double exponent = 0.0;
  double frequency_coefficient_db = 0.0;
  double min_distance_m = 1.0;
  CascadeRule cascade = CascadeRule::segment_product;

  /// PL = 22.7 + 36.7 log10(d) + 26 log10(f_GHz)
  static PathLossModel umi_2_4ghz(double carrier_frequency_hz = 2.4e9);
  /// PL = 32.4 + 21 log10(d) + 20 log10(f_GHz)
  static PathLossModel umi_street_canyon_28ghz(double carrier_frequency_hz = 28e9);
  static PathLossModel custom(double carrier_frequency_hz, double reference_db,
                              double exponent, double frequency_coefficient_db = 0.0);

  /// Throws std::invalid_argument when the parameters cannot give a gain in (0, 1].
  void validate() const;

  /// Loss in dB at distance `d` (after clamping).
  double loss_db(double d) const;

  friend bool operator==(const PathLossModel&, const PathLossModel&) = default;
};

/// Linear power gain 10^(-PL_dB/10) in (0, 1].
/// Throws std::domain_error for a negative or non-finite distance.
double pathloss_linear(const PathLossModel& model, double d);

// ------------------------------------------------------------------------
// Link budgets
// ------------------------------------------------------------------------

enum class Link : std::uint8_t {
  source_ris,
  ris_destination,
  ris_relay,
  source_relay,
  relay_destination,
  source_destination,
};

inline constexpr int kLinkCount = 6;

std::string_view to_string(Link link) noexcept;
std::optional<Link> parse_link(std::string_view text) noexcept;

/// Small value set of links.
class LinkSet {
 public:
  constexpr LinkSet() = default;
  constexpr LinkSet(std::initializer_list<Link> links) {
    for (Link l : links) insert(l);
  }

  constexpr void insert(Link l) noexcept { bits_ |= mask(l); }
  constexpr bool contains(Link l) const noexcept { return (bits_ & mask(l)) != 0; }
  constexpr bool empty() const noexcept { return bits_ == 0; }
  std::vector<Link> members() const;

  friend constexpr bool operator==(LinkSet, LinkSet) = default;

 private:
  static constexpr std::uint8_t mask(Link l) noexcept {
    return static_cast<std::uint8_t>(1u << static_cast<unsigned>(l));
  }
  std::uint8_t bits_ = 0;
};

/// Links each scheme transmits over. The source-destination link is never
/// used; the joint scheme additionally has no source-relay link.
LinkSet required_links(Scheme scheme);

/// Linear gains per link. Per-segment entries feed the fading generator;
/// `ris_cascade`, `relay_cascade` are the products seen through the RIS.
/// Links a scheme does not use stay at zero.
struct LinkBudget {
  double source_ris = 0.0;
  double ris_destination = 0.0;
  double ris_relay = 0.0;
  double source_relay = 0.0;
  double relay_destination = 0.0;

  double ris_cascade = 0.0;    // source -> RIS -> destination
  double relay_cascade = 0.0;  // source -> RIS -> relay (joint scheme)
};

/// Link gains for `scheme`. Throws std::domain_error when a required link is
/// blocked or has zero length, std::invalid_argument for a layout missing a
/// required node.
LinkBudget cascaded_loss(const NodeLayout& layout, const PathLossModel& model,
                         Scheme scheme, LinkSet blocked = {});

}  // namespace risrelay
