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

#include "persum/special.hpp"

#include <array>
#include <cmath>
#include <string>

namespace persum {

namespace {

// B_2, B_4, ..., B_18.
constexpr std::array<double, 9> kBernoulli = {
    1.0 / 6.0,       -1.0 / 30.0,         1.0 / 42.0,
    -1.0 / 30.0,     5.0 / 66.0,          -691.0 / 2730.0,
    7.0 / 6.0,       -3617.0 / 510.0,     43867.0 / 798.0,
};

constexpr double kShiftThreshold = 15.0;
constexpr double kPoleGuard = 1e-9;
constexpr double kHalfLogTwoPi = 0.918938533204672741780329736405617640;

bool near_nonpositive_integer(Complex z) {
  if (std::abs(z.imag()) > kPoleGuard) return false;
  const double r = std::round(z.real());
  return r <= 0.0 && std::abs(z.real() - r) <= kPoleGuard;
}

void require_fraction(int p, int q) {
  if (q < 2 || p < 1 || p > q - 1) {
    throw InvalidParameter("need 1 <= p <= q-1, got p=" + std::to_string(p) +
                           ", q=" + std::to_string(q));
  }
}

Complex stirling_log_gamma(Complex z) {
  const Complex inv = 1.0 / z;
  const Complex inv2 = inv * inv;
  Complex term = inv;
  Complex series = 0.0;
  for (std::size_t k = 0; k < kBernoulli.size(); ++k) {
    const double two_k = 2.0 * static_cast<double>(k + 1);
    series += kBernoulli[k] / (two_k * (two_k - 1.0)) * term;
    term *= inv2;
  }
  return (z - 0.5) * std::log(z) - z + kHalfLogTwoPi + series;
}

Complex asymptotic_digamma(Complex z) {
  const Complex inv2 = 1.0 / (z * z);
  Complex term = inv2;
  Complex series = 0.0;
  for (std::size_t k = 0; k < kBernoulli.size(); ++k) {
    series += kBernoulli[k] / (2.0 * static_cast<double>(k + 1)) * term;
    term *= inv2;
  }
  return std::log(z) - 0.5 / z - series;
}

Complex asymptotic_trigamma(Complex z) {
  const Complex inv = 1.0 / z;
  const Complex inv2 = inv * inv;
  Complex term = inv2 * inv;
  Complex series = 0.0;
  for (double b : kBernoulli) {
    series += b * term;
    term *= inv2;
  }
  return inv + 0.5 * inv2 + series;
}

}  // namespace

Complex log_gamma(Complex z) {
  if (near_nonpositive_integer(z)) {
    throw DomainError("log_gamma pole at z = " + std::to_string(z.real()));
  }
  // Summing the logs one factor at a time keeps the branch continuous.
  Complex shift = 0.0;
  while (z.real() < kShiftThreshold) {
    shift += std::log(z);
    z += 1.0;
  }
  return stirling_log_gamma(z) - shift;
}

double log_gamma(double x) {
  if (!(x > 0.0)) {
    throw DomainError("real log_gamma needs x > 0, got " + std::to_string(x));
  }
  return std::lgamma(x);
}

Complex digamma(Complex z) {
  if (near_nonpositive_integer(z)) {
    throw DomainError("digamma pole at z = " + std::to_string(z.real()));
  }
  Complex shift = 0.0;
  while (z.real() < kShiftThreshold) {
    shift += 1.0 / z;
    z += 1.0;
  }
  return asymptotic_digamma(z) - shift;
}

Complex trigamma(Complex z) {
  if (near_nonpositive_integer(z)) {
    throw DomainError("trigamma pole at z = " + std::to_string(z.real()));
  }
  Complex shift = 0.0;
  while (z.real() < kShiftThreshold) {
    shift += 1.0 / (z * z);
    z += 1.0;
  }
  return asymptotic_trigamma(z) + shift;
}

Complex harmonic(Complex z) {
  if (near_nonpositive_integer(z + 1.0)) {
    throw DomainError("harmonic number pole at z = " + std::to_string(z.real()));
  }
  return digamma(z + 1.0) + kEulerGamma;
}

double harmonic(double x) { return harmonic(Complex(x)).real(); }

double harmonic(const Rational& x) {
  if (x.is_integer() && x.num() < 0) {
    throw DomainError("harmonic number pole at z = " + x.to_string());
  }
  if (x.is_integer() && x.num() >= 0 && x.num() <= 64) {
    // Exact small integers: the finite sum is cheaper and loses nothing.
    CompensatedSum sum;
    for (std::int64_t k = 1; k <= x.num(); ++k) {
      sum += 1.0 / static_cast<double>(k);
    }
    return sum.value().real();
  }
  return (digamma(Complex(x.value() + 1.0)) + kEulerGamma).real();
}

double harmonic_by_series(double x, std::int64_t terms) {
  if (!(x > -1.0)) throw DomainError("harmonic_by_series needs x > -1");
  if (terms < 10) throw InvalidParameter("harmonic_by_series needs >= 10 terms");
  CompensatedSum sum;
  for (std::int64_t n = 1; n <= terms; ++n) {
    const double nd = static_cast<double>(n);
    sum += x / (nd * (nd + x));
  }
  // Tail sum_{n>N} g(n), g(t) = 1/t - 1/(t+x):
  //   int_N^inf g - g(N)/2 - g'(N)/12 + g'''(N)/720.
  const double N = static_cast<double>(terms);
  const double g = x / (N * (N + x));
  const double g1 = -1.0 / (N * N) + 1.0 / ((N + x) * (N + x));
  const double g3 = -6.0 / std::pow(N, 4) + 6.0 / std::pow(N + x, 4);
  const double tail = std::log1p(x / N) - 0.5 * g - g1 / 12.0 + g3 / 720.0;
  return (sum.value() + tail).real();
}

double gauss_fractional_harmonic(int p, int q, GaussSum form) {
  require_fraction(p, q);
  const double pq = kPi / q;
  double value = static_cast<double>(q) / p - std::log(2.0 * q) -
                 0.5 * kPi * std::cos(p * pq) / std::sin(p * pq);
  if (form == GaussSum::Folded) {
    for (int j = 1; j <= (q - 1) / 2; ++j) {
      value += 2.0 * std::cos(2.0 * j * p * pq) * std::log(std::sin(j * pq));
    }
  } else {
    for (int j = 1; j <= q - 1; ++j) {
      value += std::cos(2.0 * j * p * pq) * std::log(std::sin(j * pq));
    }
  }
  return value;
}

double duplication_residual(double x) {
  return 2.0 * harmonic(x) -
         (harmonic(x / 2.0) + harmonic((x - 1.0) / 2.0) + 2.0 * kLn2);
}

double multiplication_residual(double x, int m) {
  if (m < 2) {
    throw InvalidParameter("multiplication factor must be >= 2, got " +
                           std::to_string(m));
  }
  double parts = 0.0;
  for (int j = 0; j < m; ++j) parts += harmonic((x - j) / m);
  return m * harmonic(x) - (parts + m * std::log(static_cast<double>(m)));
}

double sine_product(int q) {
  if (q < 2) throw InvalidParameter("sine_product needs q >= 2");
  double product = 1.0;
  for (int j = 1; j < q; ++j) product *= std::sin(j * kPi / q);
  return product;
}

TrigSums trig_sums(int p, int q) {
  require_fraction(p, q);
  TrigSums sums{0.0, 0.0, 0.0};
  for (int j = 1; j < q; ++j) {
    const double angle = 2.0 * j * p * kPi / q;
    sums.sin_sum += std::sin(angle);
    sums.cos_sum += std::cos(angle);
    sums.weighted_sin_sum += j * std::sin(angle);
  }
  return sums;
}

}  // namespace persum
