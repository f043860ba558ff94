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

#ifndef PERSUM_PERIODIC_HPP
#define PERSUM_PERIODIC_HPP

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "persum/numeric.hpp"

namespace persum {

/// A q-periodic complex weight g, stored as one period g(0), ..., g(q-1).
class PeriodicWeight {
 public:
  /// Throws InvalidParameter when fewer than two values are given.
  explicit PeriodicWeight(std::vector<Complex> period);

  /// Weight whose period is given by real values, e.g. {0, 1, 0, -1}.
  static PeriodicWeight from_real(std::span<const double> period);

  /// (-1)^k, sin(k pi/2) and cos(2 k pi/3) with exact period values.
  static PeriodicWeight alternating();
  static PeriodicWeight quarter_sine();
  static PeriodicWeight third_cosine();

  int q() const { return static_cast<int>(values_.size()); }
  std::span<const Complex> values() const { return values_; }

  /// g(n) for any integer n, using the floored residue of n.
  Complex operator()(std::int64_t n) const {
    return values_[static_cast<std::size_t>(floor_mod(n, q()))];
  }

  bool is_zero() const;
  friend bool operator==(const PeriodicWeight&, const PeriodicWeight&) = default;

 private:
  std::vector<Complex> values_;
};

inline Complex weight_eval(const PeriodicWeight& w, std::int64_t n) {
  return w(n);
}

/// Evaluation routes for the residue-class indicator g_0.
enum class IndicatorMethod {
  Floor,          ///< floor(n/q) - floor((n-1)/q), exact.
  RootsOfUnity,   ///< (1/q) sum_j cos(2 pi j n / q).
  CosineSplit,    ///< folded cosine sum with the (-1)^n parity terms.
};

std::string_view to_string(IndicatorMethod method);

/// Raw value of g_0(n) for modulus q. Floor returns exactly 0 or 1; the two
/// trigonometric routes return the unrounded real sum.
double indicator(std::int64_t n, int q, IndicatorMethod method);

/// Boolean form of the indicator: n == 0 (mod q).
inline bool in_residue_class(std::int64_t n, std::int64_t p, int q) {
  return floor_mod(n - p, q) == 0;
}

/// (1/q) sum_{k<q} omega^{k n} with omega = exp(2 pi i / q).
Complex roots_of_unity_mean(std::int64_t n, int q);

/// Coefficients of w in the indicator basis g_p(n) = g_0(n - p).
std::vector<Complex> basis_decompose(const PeriodicWeight& w);

/// sum_p coeffs[p] * g_0(n - p), the inverse of basis_decompose.
Complex basis_reconstruct(std::span<const Complex> coeffs, std::int64_t n,
                          IndicatorMethod method = IndicatorMethod::Floor);

}  // namespace persum

#endif  // PERSUM_PERIODIC_HPP
