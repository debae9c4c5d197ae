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

#include "risrelay/analytic.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "risrelay/special_functions.hpp"

namespace risrelay {

// ------------------------------------------------------------------------
// Mgf
// ------------------------------------------------------------------------

Mgf Mgf::noncentral_chi_square_1(double mean_term, double variance_term) {
  if (!(mean_term >= 0.0) || !(variance_term >= 0.0)) {
    throw std::invalid_argument("chi-square MGF: terms must be non-negative");
  }
  Mgf m;
  m.factors_.push_back({Kind::chi_square_1, mean_term, variance_term});
  return m;
}

Mgf Mgf::rician_power(double k_factor, double mean_snr) {
  if (!(k_factor >= 0.0) || !(mean_snr >= 0.0)) {
    throw std::invalid_argument("Rician MGF: K and mean SNR must be non-negative");
  }
  Mgf m;
  m.factors_.push_back({Kind::rician_power, k_factor, mean_snr});
  return m;
}

Mgf Mgf::degenerate(double gamma) {
  if (!(gamma >= 0.0)) throw std::invalid_argument("degenerate MGF: SNR must be non-negative");
  Mgf m;
  m.factors_.push_back({Kind::degenerate, gamma, 0.0});
  return m;
}

Mgf operator*(Mgf lhs, const Mgf& rhs) {
  lhs.factors_.insert(lhs.factors_.end(), rhs.factors_.begin(), rhs.factors_.end());
  return lhs;
}

double Mgf::pole() const noexcept {
  double pole = std::numeric_limits<double>::infinity();
  for (const auto& f : factors_) {
    switch (f.kind) {
      case Kind::chi_square_1:
        if (f.q > 0.0) pole = std::min(pole, 1.0 / (2.0 * f.q));
        break;
      case Kind::rician_power:
        if (f.q > 0.0) pole = std::min(pole, (1.0 + f.p) / f.q);
        break;
      case Kind::degenerate:
        break;
    }
  }
  return pole;
}

double Mgf::operator()(double s) const {
  if (s == 0.0) return 1.0;
  if (!(s < pole())) throw std::domain_error("MGF evaluated at or beyond its pole");

  double log_m = 0.0;
  for (const auto& f : factors_) {
    switch (f.kind) {
      case Kind::chi_square_1: {
        const double d = 1.0 - 2.0 * s * f.q;
        log_m += -0.5 * std::log(d) + s * f.p / d;
        break;
      }
      case Kind::rician_power: {
        const double k = f.p;
        const double d = 1.0 + k - s * f.q;
        log_m += std::log((1.0 + k) / d) + k * s * f.q / d;
        break;
      }
      case Kind::degenerate:
        log_m += s * f.p;
        break;
    }
  }
  return std::exp(log_m);
}

// ------------------------------------------------------------------------
// Envelope statistics
// ------------------------------------------------------------------------

GainStatistics stats_A(std::size_t elements, double k_factor, double ris_cascade,
                       std::size_t clt_min_elements) {
  if (!(ris_cascade >= 0.0)) throw std::invalid_argument("stats_A: negative cascade gain");
  const double env = rician_mean_envelope(k_factor);
  const double env2 = env * env;  // E|h1||h2| for unit powers
  const double n = static_cast<double>(elements);

  GainStatistics st;
  st.mean = n * std::sqrt(ris_cascade) * env2;
  st.variance = n * ris_cascade * (1.0 - env2 * env2);
  st.dof = 1;
  st.clt_valid = elements >= clt_min_elements;
  return st;
}

GainStatistics stats_B(std::size_t elements, double k_factor, double ris_cascade,
                       double relay_destination, std::size_t clt_min_elements) {
  if (!(relay_destination >= 0.0)) {
    throw std::invalid_argument("stats_B: negative relay-destination gain");
  }
  GainStatistics st = stats_A(elements, k_factor, ris_cascade, clt_min_elements);
  const double env = rician_mean_envelope(k_factor);
  st.mean += std::sqrt(relay_destination) * env;
  st.variance += relay_destination * (1.0 - env * env);
  return st;
}

Mgf mgf_gamma(const GainStatistics& stats, double power, double noise) {
  if (!(noise > 0.0)) throw std::invalid_argument("mgf_gamma: noise power must be positive");
  const double c = power / noise;
  return Mgf::noncentral_chi_square_1(c * stats.mean * stats.mean, c * stats.variance);
}

Mgf mgf_gamma2_integrated(double k_factor, double relay_destination, double p2, double noise) {
  if (!(noise > 0.0)) throw std::invalid_argument("mgf_gamma2: noise power must be positive");
  return Mgf::rician_power(k_factor, p2 * relay_destination / noise);
}

// ------------------------------------------------------------------------
// Symbol error probability
// ------------------------------------------------------------------------

namespace {

constexpr int kGaussPoints = 64;

struct GaussLegendre {
  std::array<double, kGaussPoints> nodes{};
  std::array<double, kGaussPoints> weights{};
};

// Roots of P_n by Newton iteration from the Chebyshev-like initial guess.
GaussLegendre make_gauss_legendre() {
  GaussLegendre gl;
  constexpr int n = kGaussPoints;
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    gl.nodes[i] = -x;
    gl.nodes[n - 1 - i] = x;
    gl.weights[i] = w;
    gl.weights[n - 1 - i] = w;
  }
  return gl;
}

const GaussLegendre& gauss_legendre() {
  static const GaussLegendre gl = make_gauss_legendre();
  return gl;
}

template <typename F>
double composite_gauss(F&& f, double lo, double hi, int panels) {
  const auto& gl = gauss_legendre();
  const double width = (hi - lo) / panels;
  double total = 0.0;
  for (int p = 0; p < panels; ++p) {
    const double a = lo + p * width;
    const double half = 0.5 * width;
    const double mid = a + half;
    double acc = 0.0;
    for (int i = 0; i < kGaussPoints; ++i) acc += gl.weights[i] * f(mid + half * gl.nodes[i]);
    total += half * acc;
  }
  return total;
}

}  // namespace

double sep_mpsk(const Mgf& mgf_total, int order, double rel_tol) {
  if (order < 2 || (order & (order - 1)) != 0) {
    throw std::invalid_argument("sep_mpsk: modulation order must be a power of two >= 2");
  }
  const double g = std::pow(std::sin(std::numbers::pi / order), 2);
  const double upper = (order - 1) * std::numbers::pi / order;
  auto integrand = [&](double eta) {
    const double s = std::sin(eta);
    return mgf_total(-g / (s * s));
  };

  constexpr int kMaxPanels = 1 << 14;
  double previous = composite_gauss(integrand, 0.0, upper, 1);
  for (int panels = 2; panels <= kMaxPanels; panels *= 2) {
    const double current = composite_gauss(integrand, 0.0, upper, panels);
    const double change = std::abs(current - previous);
    if (change <= rel_tol * std::abs(current) || current == 0.0) {
      return current / std::numbers::pi;
    }
    previous = current;
  }
  throw std::runtime_error("sep_mpsk: quadrature did not converge");
}

// ------------------------------------------------------------------------
// Rates
// ------------------------------------------------------------------------

double rate_ideal(const SnrBreakdown& snr) { return std::log2(1.0 + snr.gamma_tot); }

double rate_nonideal(const SnrBreakdown& snr, Scheme scheme) {
  if (scheme == Scheme::ris_only) return std::log2(1.0 + snr.gamma_tot);
  return 0.5 * std::log2(1.0 + std::min(snr.gamma_r, snr.gamma_tot));
}

// ------------------------------------------------------------------------
// Scenario-level helpers
// ------------------------------------------------------------------------

PowerAllocation explicit_allocation(const ScenarioConfig& cfg) {
  const auto* p = std::get_if<ExplicitPowers>(&cfg.power);
  if (!p) throw std::invalid_argument("scenario has a power budget, not fixed powers");
  return PowerAllocation::hybrid(p->p1, p->p2, cfg.noise_power);
}

Mgf total_snr_mgf(const ScenarioConfig& cfg, const PowerAllocation& pa) {
  const LinkBudget lb = cascaded_loss(cfg.layout, cfg.pathloss, cfg.scheme, cfg.blocked);
  const std::size_t n = cfg.elements;
  const double k = cfg.k_factor;

  switch (cfg.scheme) {
    case Scheme::joint:
      return mgf_gamma(stats_A(n, k, lb.ris_cascade), pa.p1, pa.noise) *
             mgf_gamma(stats_B(n, k, lb.ris_cascade, lb.relay_destination), pa.p2, pa.noise);
    case Scheme::integrated:
      return mgf_gamma(stats_A(n, k, lb.ris_cascade), pa.p1, pa.noise) *
             mgf_gamma2_integrated(k, lb.relay_destination, pa.p2, pa.noise);
    case Scheme::ris_only:
      return mgf_gamma(stats_A(n, k, lb.ris_cascade), pa.p1, pa.noise);
    case Scheme::relay_only:
      return mgf_gamma2_integrated(k, lb.relay_destination, pa.p2, pa.noise);
  }
  return Mgf{};
}

double analytic_sep(const ScenarioConfig& cfg) {
  return sep_mpsk(total_snr_mgf(cfg, explicit_allocation(cfg)), cfg.modulation_order);
}

}  // namespace risrelay
