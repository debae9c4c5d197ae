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

namespace risrelay {

/// exp(-x) I_0(x) for x >= 0.
double bessel_i0_scaled(double x);

/// exp(-x) I_1(x) for x >= 0.
double bessel_i1_scaled(double x);

/// Laguerre function of degree 1/2 for x <= 0,
///   L_{1/2}(x) = e^{x/2} [ (1 - x) I_0(-x/2) - x I_1(-x/2) ],
/// evaluated with exponentially scaled Bessel functions so that large |x|
/// does not overflow. Throws std::domain_error for x > 0.
double laguerre_half(double x);

/// Mean envelope of a unit-power Rician channel,
///   E|h| = sqrt(pi / (4 (K + 1))) L_{1/2}(-K).
double rician_mean_envelope(double k_factor);

/// Gaussian tail probability Q(x).
double q_function(double x);

}  // namespace risrelay
