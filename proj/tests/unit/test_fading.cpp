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

#include <gtest/gtest.h>

#include <cmath>
#include <stdexcept>

#include "../support/scenarios.hpp"
#include "risrelay/fading.hpp"
#include "risrelay/special_functions.hpp"

namespace risrelay {
namespace {

TEST(DrawRician, LosLimitHasDeterministicMagnitude) {
  const auto h = draw_rician({1e9, 4.0, 1000}, 3);
  for (const Complex& x : h) EXPECT_NEAR(std::abs(x) / 2.0, 1.0, 1e-3);
}

TEST(DrawRician, RayleighSecondMoment) {
  const auto h = draw_rician({0.0, 2.5, 1'000'000}, 11);
  double acc = 0.0;
  for (const Complex& x : h) acc += std::norm(x);
  EXPECT_NEAR(acc / h.size() / 2.5, 1.0, 0.01);
}

TEST(DrawRician, MeanEnvelopeMatchesLaguerreForm) {
  const double p = 3e-7;
  const auto h = draw_rician({10.0, p, 1'000'000}, 12);
  double acc = 0.0;
  for (const Complex& x : h) acc += std::abs(x);
  const double expected = std::sqrt(p) * rician_mean_envelope(10.0);
  EXPECT_NEAR(acc / h.size() / expected, 1.0, 0.01);
}

TEST(DrawRician, SecondMomentWithinThreeSigma) {
  for (double k : {0.0, 1.0, 10.0}) {
    const auto h = draw_rician({k, 1.0, 100'000}, 100 + static_cast<std::uint64_t>(k));
    double sum = 0.0;
    double sum_sq = 0.0;
    for (const Complex& x : h) {
      sum += std::norm(x);
      sum_sq += std::norm(x) * std::norm(x);
    }
    const double n = static_cast<double>(h.size());
    const double mean = sum / n;
    const double sd = std::sqrt((sum_sq / n - mean * mean) / n);
    EXPECT_LE(std::abs(mean - 1.0), 3.0 * sd) << k;
  }
}

TEST(DrawRician, SameSeedSameDraw) {
  EXPECT_EQ(draw_rician({10.0, 1.0, 64}, 5), draw_rician({10.0, 1.0, 64}, 5));
  EXPECT_NE(draw_rician({10.0, 1.0, 64}, 5), draw_rician({10.0, 1.0, 64}, 6));
}

TEST(RicianSpec, Validation) {
  EXPECT_THROW(validate(RicianSpec{-1.0, 1.0, 1}), std::invalid_argument);
  EXPECT_THROW(validate(RicianSpec{1.0, 0.0, 1}), std::invalid_argument);
  EXPECT_THROW(validate(RicianSpec{1.0, 1.0, 0}), std::invalid_argument);
  EXPECT_NO_THROW(validate(RicianSpec{0.0, 1.0, 1}));
}

TEST(DrawScenario, JointFields) {
  const auto r = draw_scenario(testing::short_range_joint(32), 1);
  EXPECT_EQ(r.h_sr.size(), 32u);
  EXPECT_EQ(r.h_rd.size(), 32u);
  EXPECT_EQ(r.g_r.size(), 32u);
  EXPECT_FALSE(r.g_sr.has_value());
  EXPECT_TRUE(r.g_rd.has_value());
}

TEST(DrawScenario, IntegratedFields) {
  const auto r = draw_scenario(testing::mid_span_integrated(16), 1);
  EXPECT_EQ(r.h_sr.size(), 16u);
  EXPECT_TRUE(r.g_r.empty());
  EXPECT_TRUE(r.g_sr.has_value());
  EXPECT_TRUE(r.g_rd.has_value());
}

TEST(DrawScenario, BenchmarkFields) {
  auto ris = testing::short_range_joint(8);
  ris.scheme = Scheme::ris_only;
  ris.layout.relay.reset();
  const auto a = draw_scenario(ris, 2);
  EXPECT_EQ(a.h_sr.size(), 8u);
  EXPECT_FALSE(a.g_rd.has_value());

  auto relay = testing::mid_span_integrated(0);
  relay.scheme = Scheme::relay_only;
  relay.layout.ris.reset();
  relay.layout.relay = Point2{10, 35};
  const auto b = draw_scenario(relay, 2);
  EXPECT_TRUE(b.h_sr.empty());
  EXPECT_TRUE(b.g_sr.has_value());
  EXPECT_TRUE(b.g_rd.has_value());
}

TEST(DrawScenario, Deterministic) {
  const auto cfg = testing::short_range_joint(64);
  EXPECT_EQ(draw_scenario(cfg, 42), draw_scenario(cfg, 42));
}

TEST(DrawScenario, SecondMomentsFollowPathLoss) {
  const auto cfg = testing::short_range_joint(1);
  const ScenarioSampler sampler(cfg);
  const LinkBudget& lb = sampler.budget();
  ChannelRealization r;
  double sr = 0.0;
  double rd = 0.0;
  double grd = 0.0;
  const int n = 200'000;
  for (int i = 0; i < n; ++i) {
    sampler.draw(static_cast<std::uint64_t>(i), r);
    sr += std::norm(r.h_sr[0]);
    rd += std::norm(r.h_rd[0]);
    grd += std::norm(*r.g_rd);
  }
  EXPECT_NEAR(sr / n / lb.source_ris, 1.0, 0.01);
  EXPECT_NEAR(rd / n / lb.ris_destination, 1.0, 0.01);
  EXPECT_NEAR(grd / n / lb.relay_destination, 1.0, 0.01);
}

TEST(DrawScenario, LinksAreIndependent) {
  auto cfg = testing::short_range_joint(1);
  cfg.k_factor = 0.0;  // zero-mean links make the correlation test sharp
  const ScenarioSampler sampler(cfg);
  ChannelRealization r;
  Complex cross{};
  double p1 = 0.0;
  double p2 = 0.0;
  const int n = 1'000'000;
  for (int i = 0; i < n; ++i) {
    sampler.draw(static_cast<std::uint64_t>(i), r);
    cross += r.h_sr[0] * std::conj(r.h_rd[0]);
    p1 += std::norm(r.h_sr[0]);
    p2 += std::norm(r.h_rd[0]);
  }
  EXPECT_LT(std::abs(cross) / std::sqrt(p1 * p2), 0.01);
}

TEST(DrawScenario, ElementPrefixSharedAcrossN) {
  const auto small = draw_scenario(testing::short_range_joint(16), 9);
  const auto large = draw_scenario(testing::short_range_joint(64), 9);
  for (std::size_t i = 0; i < 16; ++i) {
    EXPECT_EQ(small.h_sr[i], large.h_sr[i]);
    EXPECT_EQ(small.h_rd[i], large.h_rd[i]);
  }
  EXPECT_EQ(small.g_rd, large.g_rd);
}

}  // namespace
}  // namespace risrelay
