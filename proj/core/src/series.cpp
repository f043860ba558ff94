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

#include "persum/series.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace persum {

namespace {

void require_residue(int q, int p) {
  if (q < 2 || p < 0 || p >= q) {
    throw InvalidParameter("need q >= 2 and 0 <= p < q, got p=" +
                           std::to_string(p) + ", q=" + std::to_string(q));
  }
}

/// omega^exponent with omega = exp(2 pi i/q). Quarter turns are returned
/// exactly so that q = 2 and q = 4 rotations carry no rounding.
Complex unit_root_power(std::int64_t exponent, int q) {
  const std::int64_t r = floor_mod(exponent, q);
  if ((4 * r) % q == 0) {
    switch ((4 * r) / q) {
      case 0:
        return {1.0, 0.0};
      case 1:
        return {0.0, 1.0};
      case 2:
        return {-1.0, 0.0};
      default:
        return {0.0, -1.0};
    }
  }
  return std::polar(1.0, 2.0 * kPi * static_cast<double>(r) / static_cast<double>(q));
}

}  // namespace

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
  const std::size_t n = std::min(a.order(), b.order());
  std::vector<Complex> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = a[i] + b[i];
  return TruncatedSeries(std::move(out));
}

TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
  const std::size_t n = std::min(a.order(), b.order());
  std::vector<Complex> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = a[i] - b[i];
  return TruncatedSeries(std::move(out));
}

TruncatedSeries operator*(Complex c, const TruncatedSeries& a) {
  std::vector<Complex> out(a.coeffs().begin(), a.coeffs().end());
  for (Complex& x : out) x *= c;
  return TruncatedSeries(std::move(out));
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  const std::size_t n = std::min(a.order(), b.order());
  std::vector<Complex> out(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; i + j < n; ++j) out[i + j] += a[i] * b[j];
  }
  return TruncatedSeries(std::move(out));
}

TruncatedSeries series_from_sequence(const Sequence& f, std::size_t N) {
  if (N < 1 || N > kMaxSeriesOrder) {
    throw InvalidParameter("series order must be in 1.." +
                           std::to_string(kMaxSeriesOrder) + ", got " +
                           std::to_string(N));
  }
  std::vector<Complex> coeffs(N);
  for (std::size_t n = 0; n < N; ++n) {
    coeffs[n] = f(static_cast<std::int64_t>(n));
  }
  return TruncatedSeries(std::move(coeffs));
}

TruncatedSeries prefix_transform(const TruncatedSeries& F) {
  std::vector<Complex> out(F.order());
  CompensatedSum running;
  for (std::size_t n = 0; n < F.order(); ++n) {
    running += F[n];
    out[n] = running.value();
  }
  return TruncatedSeries(std::move(out));
}

TruncatedSeries shift_up(const TruncatedSeries& F, std::size_t s) {
  std::vector<Complex> out(F.order(), 0.0);
  for (std::size_t n = s; n < F.order(); ++n) out[n] = F[n - s];
  return TruncatedSeries(std::move(out));
}

TruncatedSeries rotate_argument(const TruncatedSeries& F, int q, int k) {
  require_residue(q, k);
  std::vector<Complex> out(F.order());
  for (std::size_t n = 0; n < F.order(); ++n) {
    out[n] = unit_root_power(static_cast<std::int64_t>(k) *
                                 static_cast<std::int64_t>(n),
                             q) *
             F[n];
  }
  return TruncatedSeries(std::move(out));
}

TruncatedSeries decimate(const TruncatedSeries& F, int q, int p) {
  require_residue(q, p);
  std::vector<Complex> out;
  for (std::size_t i = static_cast<std::size_t>(p); i < F.order();
       i += static_cast<std::size_t>(q)) {
    out.push_back(F[i]);
  }
  return TruncatedSeries(std::move(out));
}

TruncatedSeries spread(const TruncatedSeries& G, int q, int p,
                       std::size_t order) {
  if (q < 1 || p < 0) throw InvalidParameter("spread needs q >= 1, p >= 0");
  std::vector<Complex> out(order, 0.0);
  for (std::size_t n = 0; n < G.order(); ++n) {
    const std::size_t at = static_cast<std::size_t>(q) * n +
                           static_cast<std::size_t>(p);
    if (at >= order) break;
    out[at] = G[n];
  }
  return TruncatedSeries(std::move(out));
}

TruncatedSeries gf_S_p_dft(const TruncatedSeries& F, int q, int p) {
  require_residue(q, p);
  // (1/q) sum_k omega^{-kp} F(omega^k z) keeps exactly the terms with
  // n == p (mod q).
  TruncatedSeries filtered = TruncatedSeries::zero(F.order());
  for (int k = 0; k < q; ++k) {
    const Complex phase = unit_root_power(-static_cast<std::int64_t>(k) * p, q);
    filtered = filtered + phase * rotate_argument(F, q, k);
  }
  filtered = (1.0 / static_cast<double>(q)) * filtered;
  return prefix_transform(shift_up(filtered, 1));
}

TruncatedSeries gf_S_p_decimate(const TruncatedSeries& F, int q, int p) {
  require_residue(q, p);
  return prefix_transform(spread(decimate(F, q, p), q, p + 1, F.order()));
}

TruncatedSeries gf_weighted(const TruncatedSeries& F, const PeriodicWeight& w) {
  TruncatedSeries out = TruncatedSeries::zero(F.order());
  for (int p = 0; p < w.q(); ++p) {
    const Complex g = w(p);
    if (g == 0.0) continue;
    out = out + g * gf_S_p_dft(F, w.q(), p);
  }
  return out;
}

TruncatedSeries gf_weighted_rotations(const TruncatedSeries& F,
                                      const PeriodicWeight& w) {
  const int q = w.q();
  TruncatedSeries combined = TruncatedSeries::zero(F.order());
  for (int k = 0; k < q; ++k) {
    Complex c = 0.0;
    for (int p = 0; p < q; ++p) {
      c += w(p) * unit_root_power(-static_cast<std::int64_t>(k) * p, q);
    }
    if (std::abs(c) < 1e-14) continue;
    combined = combined + c * rotate_argument(F, q, k);
  }
  combined = (1.0 / static_cast<double>(q)) * combined;
  return prefix_transform(shift_up(combined, 1));
}

std::vector<double> real_coefficients(const TruncatedSeries& F, double tol) {
  std::vector<double> out(F.order());
  for (std::size_t n = 0; n < F.order(); ++n) {
    if (std::abs(F[n].imag()) > tol) {
      throw InconsistencyError("coefficient " + std::to_string(n) +
                               " has imaginary residue " +
                               std::to_string(F[n].imag()));
    }
    out[n] = F[n].real();
  }
  return out;
}

}  // namespace persum
