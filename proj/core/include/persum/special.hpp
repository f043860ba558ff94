// Copyright 2026 The persum Authors.
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

#ifndef PERSUM_SPECIAL_HPP
#define PERSUM_SPECIAL_HPP

// Log-gamma, polygamma and harmonic numbers at complex and fractional
// arguments, plus the classical identities used to cross-check them.
//
// log_gamma, digamma and trigamma shift the argument upward with the
// recurrence until Re z >= 15 and then apply the Stirling / asymptotic series
// truncated after the B_18 term. The truncation error there is below 1e-17.

#include <cstdint>

#include "persum/numeric.hpp"

namespace persum {

/// log Gamma(z), continuous branch agreeing with the real logarithm on the
/// positive axis (the usual "loggamma" convention). Throws DomainError at
/// z = 0, -1, -2, ...
Complex log_gamma(Complex z);

/// ln Gamma(x) for real x > 0.
double log_gamma(double x);

Complex digamma(Complex z);
Complex trigamma(Complex z);

/// H_z = sum_{n>=1} (1/n - 1/(n+z)) = psi(z+1) + gamma.
/// Throws DomainError at z = -1, -2, ... (1e-9 proximity guard).
Complex harmonic(Complex z);
double harmonic(double x);

/// H_x at a rational argument; the pole test is exact.
double harmonic(const Rational& x);

/// H_x from its defining series: the first `terms` summands plus an
/// Euler-Maclaurin estimate of the tail. Slow; used as an oracle for the
/// digamma route. Requires x > -1.
double harmonic_by_series(double x, std::int64_t terms = 20000);

enum class GaussSum {
  Folded,  ///< 2 * sum over j = 1..floor((q-1)/2)
  Full,    ///< sum over j = 1..q-1
};

/// Gauss's closed form of H_{p/q}:
///   q/p - ln(2q) - (pi/2) cot(p pi/q) + sum_j cos(2 j p pi/q) ln sin(j pi/q).
/// Requires 1 <= p <= q-1, else InvalidParameter.
double gauss_fractional_harmonic(int p, int q,
                                 GaussSum form = GaussSum::Folded);

/// 2 H_x - (H_{x/2} + H_{(x-1)/2} + 2 ln 2); vanishes identically.
double duplication_residual(double x);

/// m H_x - (sum_{j<m} H_{(x-j)/m} + m ln m); vanishes identically.
double multiplication_residual(double x, int m);

/// prod_{j=1}^{q-1} sin(j pi/q), which equals q 2^{1-q}.
double sine_product(int q);

struct TrigSums {
  double sin_sum;           ///< sum_{j<q} sin(2 j p pi/q)          -> 0
  double cos_sum;           ///< sum_{j<q} cos(2 j p pi/q)          -> -1
  double weighted_sin_sum;  ///< sum_{j<q} j sin(2 j p pi/q) -> -(q/2) cot(p pi/q)
};

/// Direct evaluation of the three finite trigonometric sums, 1 <= p <= q-1.
TrigSums trig_sums(int p, int q);

}  // namespace persum

#endif  // PERSUM_SPECIAL_HPP
