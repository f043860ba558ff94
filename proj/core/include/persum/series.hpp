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

#ifndef PERSUM_SERIES_HPP
#define PERSUM_SERIES_HPP

// Dense truncated power series over the complex numbers and the two
// generating-function forms of the residue sums S_p:
//
//   sum_n S_p(n) z^n = z/(q(1-z)) sum_{k<q} omega^{-kp} F(omega^k z)
//                    = z^{p+1}/(1-z) F_p(z^q)
//
// where F is the generating function of f and F_p that of f(qn+p).

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "persum/numeric.hpp"
#include "persum/periodic.hpp"
#include "persum/sums.hpp"

namespace persum {

inline constexpr std::size_t kMaxSeriesOrder = 4096;

/// First N coefficients a_0, ..., a_{N-1} of a formal power series.
/// Binary operations truncate to the smaller order.
class TruncatedSeries {
 public:
  TruncatedSeries() = default;
  explicit TruncatedSeries(std::vector<Complex> coeffs)
      : coeffs_(std::move(coeffs)) {}

  static TruncatedSeries zero(std::size_t order) {
    return TruncatedSeries(std::vector<Complex>(order, 0.0));
  }

  std::size_t order() const { return coeffs_.size(); }
  bool empty() const { return coeffs_.empty(); }
  const Complex& operator[](std::size_t n) const { return coeffs_[n]; }
  std::span<const Complex> coeffs() const { return coeffs_; }

  friend TruncatedSeries operator+(const TruncatedSeries& a,
                                   const TruncatedSeries& b);
  friend TruncatedSeries operator-(const TruncatedSeries& a,
                                   const TruncatedSeries& b);
  friend TruncatedSeries operator*(Complex c, const TruncatedSeries& a);
  /// Cauchy product.
  friend TruncatedSeries operator*(const TruncatedSeries& a,
                                   const TruncatedSeries& b);

 private:
  std::vector<Complex> coeffs_;
};

/// coeffs[n] = f(n) for n < N. Requires 1 <= N <= kMaxSeriesOrder.
TruncatedSeries series_from_sequence(const Sequence& f, std::size_t N);

/// Multiplication by 1/(1-z): running sums of the coefficients.
TruncatedSeries prefix_transform(const TruncatedSeries& F);

/// z^s F(z), truncated to the order of F.
TruncatedSeries shift_up(const TruncatedSeries& F, std::size_t s);

/// F(omega^k z) with omega = exp(2 pi i/q): coefficient n scaled by
/// omega^{kn}.
TruncatedSeries rotate_argument(const TruncatedSeries& F, int q, int k);

/// F_p: coefficients F[qn + p] for qn + p < N. Empty when p >= N.
TruncatedSeries decimate(const TruncatedSeries& F, int q, int p);

/// z^p G(z^q) truncated to `order` coefficients.
TruncatedSeries spread(const TruncatedSeries& G, int q, int p,
                       std::size_t order);

/// Generating function of (S_p(n)) via the rotated copies of F.
TruncatedSeries gf_S_p_dft(const TruncatedSeries& F, int q, int p);

/// Generating function of (S_p(n)) via z^{p+1} F_p(z^q) / (1 - z).
TruncatedSeries gf_S_p_decimate(const TruncatedSeries& F, int q, int p);

/// Generating function of (S(n)) for the weight w: sum_p g(p) gf_S_p_dft.
TruncatedSeries gf_weighted(const TruncatedSeries& F, const PeriodicWeight& w);

/// The same series written as z/(q(1-z)) sum_k c_k F(omega^k z) with
/// c_k = sum_p g(p) omega^{-kp}. For (-1)^k this is z/(1-z) F(-z).
TruncatedSeries gf_weighted_rotations(const TruncatedSeries& F,
                                      const PeriodicWeight& w);

/// Real parts of the coefficients. Throws InconsistencyError when some
/// imaginary part exceeds `tol` in magnitude.
std::vector<double> real_coefficients(const TruncatedSeries& F,
                                      double tol = 1e-10);

}  // namespace persum

#endif  // PERSUM_SERIES_HPP
