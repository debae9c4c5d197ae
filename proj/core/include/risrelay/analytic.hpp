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
#include <vector>

#include "risrelay/scenario.hpp"
#include "risrelay/schemes.hpp"

namespace risrelay {

/// Gaussian (CLT) description of a co-phased envelope sum such as
/// A = sum_i |h_RD,i||h_SR,i| or B = |g_RD| + A.
///
/// For an SNR gamma = c X^2 with X ~ N(mean, variance), gamma / (c variance)
/// is non-central chi-square with `dof` degrees of freedom and
/// non-centrality mean^2 / variance.
struct GainStatistics {
  double mean = 0.0;
  double variance = 0.0;
  int dof = 1;
  bool clt_valid = false;  // N >= N_min

  double noncentrality() const { return variance > 0.0 ? mean * mean / variance : 0.0; }
  double scale() const { return variance; }
};

inline constexpr std::size_t kCltMinElements = 16;

/// Moment generating function M(s) = E[exp(s gamma)] as a product of
/// closed-form factors. Immutable once built.
class Mgf {
 public:
  /// M(s) = 1 (gamma = 0 almost surely).
  Mgf() = default;

  /// gamma = c X^2, X ~ N(mu, sigma^2):
  ///   M(s) = (1 - 2 s v)^{-1/2} exp(s m / (1 - 2 s v)),
  /// with m = c mu^2 and v = c sigma^2.
  static Mgf noncentral_chi_square_1(double mean_term, double variance_term);

  /// gamma = c |h|^2 with h unit-power Rician, mean SNR gbar = c:
  ///   M(s) = (1+K)/(1+K - s gbar) exp(K s gbar / (1+K - s gbar)).
  static Mgf rician_power(double k_factor, double mean_snr);

  /// gamma fixed: M(s) = exp(s gamma).
  static Mgf degenerate(double gamma);

  /// MGF of the sum of independent SNRs.
  friend Mgf operator*(Mgf lhs, const Mgf& rhs);

  /// Throws std::domain_error for s at or beyond the pole.
  double operator()(double s) const;

  /// Smallest positive singular point (+inf when none).
  double pole() const noexcept;

 private:
  enum class Kind { chi_square_1, rician_power, degenerate };
  struct Factor {
    Kind kind;
    double p;
    double q;
  };
  std::vector<Factor> factors_;
};

/// Moments of A for N elements, Rician factor K and cascade gain P_L^{R1}.
///   mean     = N sqrt(P_L) (pi / (4 (K+1))) L_{1/2}(-K)^2
///   variance = N P_L (1 - pi^2 L_{1/2}(-K)^4 / (16 (K+1)^2))
/// N = 0 yields the zero distribution.
GainStatistics stats_A(std::size_t elements, double k_factor, double ris_cascade,
                       std::size_t clt_min_elements = kCltMinElements);

/// Moments of B = |g_RD| + A. The relay envelope adds
///   mean     sqrt(P_L^D) sqrt(pi / (4 (K+1))) L_{1/2}(-K)
///   variance P_L^D (1 - pi L_{1/2}(-K)^2 / (4 (K+1)))
/// i.e. the Rician envelope moments (amplitude scales with sqrt(P_L^D)).
GainStatistics stats_B(std::size_t elements, double k_factor, double ris_cascade,
                       double relay_destination, std::size_t clt_min_elements = kCltMinElements);

/// MGF of gamma = power * X^2 / N0 for X described by `stats`.
Mgf mgf_gamma(const GainStatistics& stats, double power, double noise);

/// MGF of gamma2 = P2 |g_RD|^2 / N0 for a Rician relay link (two degrees of
/// freedom, exact).
Mgf mgf_gamma2_integrated(double k_factor, double relay_destination, double p2, double noise);

/// Average M-PSK symbol error probability
///   (1/pi) int_0^{(M-1)pi/M} M_tot(-sin^2(pi/M) / sin^2(eta)) d eta
/// by composite 64-point Gauss-Legendre with panel doubling until the
/// relative change drops below `rel_tol`. Throws std::invalid_argument for
/// an unsupported order and std::runtime_error when it fails to converge.
double sep_mpsk(const Mgf& mgf_total, int order, double rel_tol = 1e-8);

/// log2(1 + gamma_tot)
double rate_ideal(const SnrBreakdown& snr);

/// 1/2 log2(1 + min(gamma_r, gamma_tot)) for the relay-assisted schemes;
/// the single-slot RIS-only benchmark has no relay bottleneck and no
/// half-duplex penalty, so it returns log2(1 + gamma_tot).
double rate_nonideal(const SnrBreakdown& snr, Scheme scheme);

/// MGF of gamma_tot = gamma1 + gamma2 for a scenario at fixed powers,
/// taken as the product of the per-slot MGFs.
Mgf total_snr_mgf(const ScenarioConfig& cfg, const PowerAllocation& pa);

/// Fixed powers of a scenario; throws std::invalid_argument in budget mode.
PowerAllocation explicit_allocation(const ScenarioConfig& cfg);

/// sep_mpsk(total_snr_mgf(cfg, explicit_allocation(cfg)), cfg.modulation_order)
double analytic_sep(const ScenarioConfig& cfg);

}  // namespace risrelay
