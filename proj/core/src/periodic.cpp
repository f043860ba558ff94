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

#include "persum/periodic.hpp"

#include <cmath>
#include <utility>

namespace persum {

namespace {

void require_modulus(int q) {
  if (q < 2) {
    throw InvalidParameter("modulus q must be >= 2, got " + std::to_string(q));
  }
}

double cos_two_pi_fraction(std::int64_t numerator, int q) {
  return std::cos(2.0 * kPi * static_cast<double>(numerator) /
                  static_cast<double>(q));
}

}  // namespace

PeriodicWeight::PeriodicWeight(std::vector<Complex> period)
    : values_(std::move(period)) {
  if (values_.size() < 2) {
    throw InvalidParameter("a periodic weight needs q >= 2 values, got " +
                           std::to_string(values_.size()));
  }
}

PeriodicWeight PeriodicWeight::from_real(std::span<const double> period) {
  return PeriodicWeight(std::vector<Complex>(period.begin(), period.end()));
}

PeriodicWeight PeriodicWeight::alternating() {
  return PeriodicWeight({1.0, -1.0});
}

PeriodicWeight PeriodicWeight::quarter_sine() {
  return PeriodicWeight({0.0, 1.0, 0.0, -1.0});
}

PeriodicWeight PeriodicWeight::third_cosine() {
  return PeriodicWeight({1.0, -0.5, -0.5});
}

bool PeriodicWeight::is_zero() const {
  for (const Complex& v : values_) {
    if (v != 0.0) return false;
  }
  return true;
}

std::string_view to_string(IndicatorMethod method) {
  switch (method) {
    case IndicatorMethod::Floor:
      return "floor";
    case IndicatorMethod::RootsOfUnity:
      return "roots-of-unity";
    case IndicatorMethod::CosineSplit:
      return "cosine-split";
  }
  return "unknown";
}

double indicator(std::int64_t n, int q, IndicatorMethod method) {
  require_modulus(q);
  switch (method) {
    case IndicatorMethod::Floor:
      return static_cast<double>(floor_div(n, q) - floor_div(n - 1, q));
    case IndicatorMethod::RootsOfUnity: {
      // Arguments are not reduced mod q; this route is an independent check
      // of the floor form.
      double sum = 0.0;
      for (int j = 0; j < q; ++j) sum += cos_two_pi_fraction(j * n, q);
      return sum / q;
    }
    case IndicatorMethod::CosineSplit: {
      const double parity_n = (n % 2 == 0) ? 1.0 : -1.0;
      const double parity_nq = ((n + q) % 2 == 0) ? 1.0 : -1.0;
      double sum = 1.0 / q + (parity_n + parity_nq) / (2.0 * q);
      for (int j = 1; j <= (q - 1) / 2; ++j) {
        sum += 2.0 / q * cos_two_pi_fraction(j * n, q);
      }
      return sum;
    }
  }
  throw InvalidParameter("unknown indicator method");
}

Complex roots_of_unity_mean(std::int64_t n, int q) {
  require_modulus(q);
  Complex sum = 0.0;
  for (int k = 0; k < q; ++k) {
    sum += std::polar(1.0, 2.0 * kPi * static_cast<double>(k * n) / q);
  }
  return sum / static_cast<double>(q);
}

std::vector<Complex> basis_decompose(const PeriodicWeight& w) {
  // In the indicator basis the coordinates are the period values themselves.
  const auto values = w.values();
  return {values.begin(), values.end()};
}

Complex basis_reconstruct(std::span<const Complex> coeffs, std::int64_t n,
                          IndicatorMethod method) {
  const int q = static_cast<int>(coeffs.size());
  require_modulus(q);
  Complex sum = 0.0;
  for (int p = 0; p < q; ++p) {
    sum += coeffs[static_cast<std::size_t>(p)] * indicator(n - p, q, method);
  }
  return sum;
}

}  // namespace persum
