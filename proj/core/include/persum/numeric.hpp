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

#ifndef PERSUM_NUMERIC_HPP
#define PERSUM_NUMERIC_HPP

// Small numeric vocabulary shared by every module: complex values, floored
// integer division, exact rationals for the progression domains, and a
// compensated accumulator.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numeric>
#include <string>

#include "persum/error.hpp"

namespace persum {

using Complex = std::complex<double>;

inline constexpr double kPi = 3.141592653589793238462643383279502884;
inline constexpr double kLn2 = 0.693147180559945309417232121458176568;
inline constexpr double kEulerGamma = 0.577215664901532860606512090082402431;

/// Division rounding toward negative infinity. `d` must be positive.
constexpr std::int64_t floor_div(std::int64_t n, std::int64_t d) {
  std::int64_t quot = n / d;
  if ((n % d != 0) && (n < 0)) --quot;
  return quot;
}

/// Remainder in {0, ..., d-1}. `d` must be positive.
constexpr std::int64_t floor_mod(std::int64_t n, std::int64_t d) {
  std::int64_t r = n % d;
  return r < 0 ? r + d : r;
}

/// Exact rational number with a positive denominator, kept in lowest terms.
///
/// Points of the progression domains {(m - p)/q : m >= 0} are rationals;
/// extensions of progression sums are keyed on them so that half- and
/// third-integers compare exactly.
class Rational {
 public:
  constexpr Rational() = default;
  constexpr Rational(std::int64_t value) : num_(value), den_(1) {}  // NOLINT
  Rational(std::int64_t num, std::int64_t den) : num_(num), den_(den) {
    if (den_ == 0) throw InvalidParameter("rational with zero denominator");
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    const std::int64_t g = std::gcd(num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  constexpr std::int64_t num() const { return num_; }
  constexpr std::int64_t den() const { return den_; }
  constexpr bool is_integer() const { return den_ == 1; }
  double value() const {
    return static_cast<double>(num_) / static_cast<double>(den_);
  }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return {a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_};
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return {a.num_ * b.num_, a.den_ * b.den_};
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    return {a.num_ * b.den_, a.den_ * b.num_};
  }
  friend constexpr bool operator==(const Rational&, const Rational&) = default;
  friend bool operator<(const Rational& a, const Rational& b) {
    return a.num_ * b.den_ < b.num_ * a.den_;
  }

  std::string to_string() const {
    return den_ == 1 ? std::to_string(num_)
                     : std::to_string(num_) + "/" + std::to_string(den_);
  }

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

/// Neumaier-compensated running sum over complex values.
class CompensatedSum {
 public:
  void add(Complex term) {
    sum_re_ = step(sum_re_, comp_re_, term.real());
    sum_im_ = step(sum_im_, comp_im_, term.imag());
  }
  CompensatedSum& operator+=(Complex term) {
    add(term);
    return *this;
  }
  Complex value() const { return {sum_re_ + comp_re_, sum_im_ + comp_im_}; }

 private:
  static double step(double sum, double& comp, double x) {
    const double t = sum + x;
    if (std::abs(sum) >= std::abs(x)) {
      comp += (sum - t) + x;
    } else {
      comp += (x - t) + sum;
    }
    return t;
  }

  double sum_re_ = 0.0;
  double comp_re_ = 0.0;
  double sum_im_ = 0.0;
  double comp_im_ = 0.0;
};

/// Error of `value` against `reference`: absolute when |reference| <= 1,
/// relative otherwise.
inline double scaled_error(Complex value, Complex reference) {
  return std::abs(value - reference) / std::max(1.0, std::abs(reference));
}

inline bool agrees(Complex value, Complex reference, double tol) {
  return scaled_error(value, reference) <= tol;
}

}  // namespace persum

#endif  // PERSUM_NUMERIC_HPP
