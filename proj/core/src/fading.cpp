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

#include "risrelay/fading.hpp"

#include <cmath>
#include <stdexcept>

#include <boost/random/normal_distribution.hpp>
#include <boost/random/uniform_01.hpp>

namespace risrelay {

double RandomStream::normal() {
  // Ziggurat; the distribution object carries no state between calls.
  boost::random::normal_distribution<double> dist;
  return dist(*this);
}

double RandomStream::uniform() {
  // 53 high bits -> [0, 1)
  return static_cast<double>((*this)() >> 11) * 0x1.0p-53;
}

Complex RandomStream::complex_normal() {
  constexpr double kHalf = 0.70710678118654752440;
  const double re = normal();
  const double im = normal();
  return {kHalf * re, kHalf * im};
}

void validate(const RicianSpec& spec) {
  if (!(spec.k_factor >= 0.0) || !std::isfinite(spec.k_factor)) {
    throw std::invalid_argument("rician: K must be finite and non-negative");
  }
  if (!(spec.mean_power > 0.0) || !std::isfinite(spec.mean_power)) {
    throw std::invalid_argument("rician: mean power must be positive");
  }
  if (spec.elements < 1) {
    throw std::invalid_argument("rician: at least one element required");
  }
}

void draw_rician(double k_factor, double mean_power, RandomStream& rng, std::span<Complex> out) {
  const double amp = std::sqrt(mean_power);
  const double los = amp * std::sqrt(k_factor / (k_factor + 1.0));
  const double nlos = amp * std::sqrt(1.0 / (k_factor + 1.0));
  for (auto& h : out) {
    h = Complex(los, 0.0) + nlos * rng.complex_normal();
  }
}

ComplexVector draw_rician(const RicianSpec& spec, std::uint64_t seed) {
  validate(spec);
  ComplexVector out(spec.elements);
  RandomStream rng(seed);
  draw_rician(spec.k_factor, spec.mean_power, rng, out);
  return out;
}

ScenarioSampler::ScenarioSampler(const ScenarioConfig& cfg)
    : scheme_(cfg.scheme),
      elements_(cfg.elements),
      k_factor_(cfg.k_factor),
      budget_(cascaded_loss(cfg.layout, cfg.pathloss, cfg.scheme, cfg.blocked)) {
  if (!(k_factor_ >= 0.0) || !std::isfinite(k_factor_)) {
    throw std::invalid_argument("scenario: K must be finite and non-negative");
  }
}

void ScenarioSampler::draw(std::uint64_t seed, ChannelRealization& out) const {
  out.seed = seed;
  auto fill = [&](ComplexVector& v, std::size_t n, double power, StreamTag tag) {
    v.resize(n);
    RandomStream rng(stream_seed(seed, tag));
    draw_rician(k_factor_, power, rng, v);
  };
  auto scalar = [&](double power, StreamTag tag) {
    Complex h;
    RandomStream rng(stream_seed(seed, tag));
    draw_rician(k_factor_, power, rng, std::span<Complex>(&h, 1));
    return h;
  };

  const bool has_ris = scheme_ != Scheme::relay_only;
  if (has_ris) {
    fill(out.h_sr, elements_, budget_.source_ris, StreamTag::source_ris);
    fill(out.h_rd, elements_, budget_.ris_destination, StreamTag::ris_destination);
  } else {
    out.h_sr.clear();
    out.h_rd.clear();
  }

  if (scheme_ == Scheme::joint) {
    fill(out.g_r, elements_, budget_.ris_relay, StreamTag::ris_relay);
  } else {
    out.g_r.clear();
  }

  if (scheme_ == Scheme::integrated || scheme_ == Scheme::relay_only) {
    out.g_sr = scalar(budget_.source_relay, StreamTag::source_relay);
  } else {
    out.g_sr.reset();
  }

  if (scheme_ != Scheme::ris_only) {
    out.g_rd = scalar(budget_.relay_destination, StreamTag::relay_destination);
  } else {
    out.g_rd.reset();
  }
}

ChannelRealization ScenarioSampler::draw(std::uint64_t seed) const {
  ChannelRealization out;
  draw(seed, out);
  return out;
}

ChannelRealization draw_scenario(const ScenarioConfig& cfg, std::uint64_t seed) {
  return ScenarioSampler(cfg).draw(seed);
}

}  // namespace risrelay
