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

#include "risrelay/special_functions.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace risrelay {

namespace {

// Beyond this argument exp(-x) I_nu(x) comes from the large-argument
// expansion; below it std::cyl_bessel_i is still far from overflow.
constexpr double kAsymptoticThreshold = 500.0;

// exp(-x) I_nu(x) ~ 1/sqrt(2 pi x) * sum_k (-1)^k a_k(nu) / x^k
double scaled_bessel_asymptotic(double nu, double x) {
  const double mu = 4.0 * nu * nu;
  double term = 1.0;
  double sum = 1.0;
  for (int k = 1; k < 30; ++k) {
    const double odd = 2.0 * k - 1.0;
    const double next = -term * (mu - odd * odd) / (k * 8.0 * x);
    if (std::abs(next) >= std::abs(term)) break;
    term = next;
    sum += term;
    if (std::abs(term) < 1e-17 * std::abs(sum)) break;
  }
  return sum / std::sqrt(2.0 * std::numbers::pi * x);
}

double scaled_bessel(double nu, double x) {
  if (!(x >= 0.0)) throw std::domain_error("scaled Bessel: argument must be non-negative");
  if (x < kAsymptoticThreshold) return std::exp(-x) * std::cyl_bessel_i(nu, x);
  return scaled_bessel_asymptotic(nu, x);
}

}  // namespace

double bessel_i0_scaled(double x) { return scaled_bessel(0.0, x); }
double bessel_i1_scaled(double x) { return scaled_bessel(1.0, x); }

double laguerre_half(double x) {
  if (x > 0.0) throw std::domain_error("laguerre_half: argument must be <= 0");
  // e^{x/2} I_nu(-x/2) is exactly the scaled Bessel function at -x/2.
  const double z = -0.5 * x;
  return (1.0 - x) * bessel_i0_scaled(z) - x * bessel_i1_scaled(z);
}

double rician_mean_envelope(double k_factor) {
  if (!(k_factor >= 0.0)) throw std::domain_error("Rician K must be non-negative");
  return std::sqrt(std::numbers::pi / (4.0 * (k_factor + 1.0))) * laguerre_half(-k_factor);
}

double q_function(double x) { return 0.5 * std::erfc(x / std::numbers::sqrt2); }

}  // namespace risrelay
