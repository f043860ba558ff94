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

#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "persum/catalog.hpp"
#include "persum/series.hpp"
#include "test_support.hpp"

namespace persum {
namespace {

TruncatedSeries random_series(testing::Gen& gen, std::size_t N) {
  std::vector<Complex> c;
  for (std::size_t i = 0; i < N; ++i) c.emplace_back(gen.real(-1, 1), gen.real(-1, 1));
  return TruncatedSeries(std::move(c));
}

double max_gap(const TruncatedSeries& a, const TruncatedSeries& b) {
  double worst = 0.0;
  for (std::size_t n = 0; n < std::min(a.order(), b.order()); ++n) {
    worst = std::max(worst, scaled_error(a[n], b[n]));
  }
  return worst;
}

TEST(Series, FromSequenceBounds) {
  const Sequence one = [](std::int64_t) { return Complex(1.0); };
  EXPECT_THROW(series_from_sequence(one, 0), InvalidParameter);
  EXPECT_THROW(series_from_sequence(one, kMaxSeriesOrder + 1), InvalidParameter);
  EXPECT_EQ(series_from_sequence(one, kMaxSeriesOrder).order(), kMaxSeriesOrder);
  const auto s = series_from_sequence([](std::int64_t k) { return Complex(k * 2.0); }, 5);
  EXPECT_EQ(s[4], Complex(8.0));
}

TEST(Series, ArithmeticTruncatesToShorterOrder) {
  const TruncatedSeries a({1.0, 2.0, 3.0});
  const TruncatedSeries b({1.0, -1.0});
  EXPECT_EQ((a + b).order(), 2u);
  EXPECT_EQ((a - b)[1], Complex(3.0));
  EXPECT_EQ((2.0 * a)[2], Complex(6.0));
  const TruncatedSeries geo({1.0, 1.0, 1.0, 1.0});
  const TruncatedSeries one_minus_z({1.0, -1.0, 0.0, 0.0});
  const auto prod = geo * one_minus_z;
  EXPECT_EQ(prod[0], Complex(1.0));
  EXPECT_EQ(prod[1], Complex(0.0));
  EXPECT_EQ(prod[3], Complex(0.0));
  EXPECT_TRUE(TruncatedSeries::zero(3)[2] == Complex(0.0));
  EXPECT_TRUE(TruncatedSeries().empty());
}

TEST(Series, PrefixShiftRotateDecimateSpread) {
  const TruncatedSeries a({1.0, 2.0, 3.0, 4.0, 5.0, 6.0, 7.0});
  const auto pre = prefix_transform(a);
  EXPECT_EQ(pre[3], Complex(10.0));
  const auto up = shift_up(a, 2);
  EXPECT_EQ(up.order(), a.order());
  EXPECT_EQ(up[0], Complex(0.0));
  EXPECT_EQ(up[2], Complex(1.0));
  const auto rot = rotate_argument(a, 2, 1);
  EXPECT_EQ(rot[3], Complex(-4.0));
  EXPECT_EQ(rot[4], Complex(5.0));
  const auto rot4 = rotate_argument(a, 4, 1);
  EXPECT_EQ(rot4[1], Complex(0.0, 2.0));
  EXPECT_EQ(rot4[2], Complex(-3.0));
  EXPECT_LE(std::abs(rotate_argument(a, 3, 1)[3] - Complex(4.0)), 1e-14);
  EXPECT_THROW(rotate_argument(a, 4, 5), InvalidParameter);
  const auto dec = decimate(a, 3, 1);
  EXPECT_EQ(dec[0], Complex(2.0));
  EXPECT_EQ(dec[1], Complex(5.0));
  const auto sp = spread(dec, 3, 1, 7);
  EXPECT_EQ(sp.order(), 7u);
  EXPECT_EQ(sp[1], Complex(2.0));
  EXPECT_EQ(sp[4], Complex(5.0));
  EXPECT_EQ(sp[2], Complex(0.0));
}

TEST(Series, PropertyGfRoutesMatchDirect) {
  testing::Gen gen(61);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t N = static_cast<std::size_t>(gen.integer(1, 80));
    const TruncatedSeries F = random_series(gen, N);
    const Sequence f = [&F](std::int64_t k) {
      return static_cast<std::size_t>(k) < F.order() ? F[static_cast<std::size_t>(k)]
                                                      : Complex(0.0);
    };
    const int q = gen.small(2, 7);
    const int p = gen.small(0, q - 1);
    const auto dft = gf_S_p_dft(F, q, p);
    const auto dec = gf_S_p_decimate(F, q, p);
    ASSERT_EQ(dft.order(), N);
    ASSERT_EQ(dec.order(), N);
    for (std::size_t n = 0; n < N; ++n) {
      const Complex direct = brute_S_p(f, q, p, static_cast<std::int64_t>(n));
      ASSERT_LE(scaled_error(dft[n], direct), 1e-12) << "q=" << q << " p=" << p << " n=" << n;
      ASSERT_LE(scaled_error(dec[n], direct), 1e-12) << "q=" << q << " p=" << p << " n=" << n;
    }
  }
}

TEST(Series, PropertyWeightedRoutesMatchBrute) {
  testing::Gen gen(62);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t N = static_cast<std::size_t>(gen.integer(1, 64));
    const TruncatedSeries F = random_series(gen, N);
    const Sequence f = [&F](std::int64_t k) { return F[static_cast<std::size_t>(k)]; };
    const int q = gen.small(2, 6);
    std::vector<Complex> g;
    for (int i = 0; i < q; ++i) g.emplace_back(gen.real(-2, 2), gen.coin() ? 0.0 : gen.real(-1, 1));
    const PeriodicWeight w(g);
    const auto a = gf_weighted(F, w);
    const auto b = gf_weighted_rotations(F, w);
    for (std::size_t n = 0; n < N; ++n) {
      const Complex direct = brute_S(f, w, static_cast<std::int64_t>(n));
      ASSERT_LE(scaled_error(a[n], direct), 1e-12) << "n=" << n;
      ASSERT_LE(scaled_error(b[n], direct), 1e-12) << "n=" << n;
    }
  }
}

TEST(Series, CatalogFamiliesAtOrder64) {
  for (const auto& e : catalog()) {
    const auto F = series_from_sequence(e.f, 64);
    for (int q = 2; q <= 5; ++q) {
      for (int p = 0; p < q; ++p) {
        EXPECT_LE(max_gap(gf_S_p_dft(F, q, p), gf_S_p_decimate(F, q, p)), 1e-10)
            << e.id << " q=" << q << " p=" << p;
      }
    }
  }
}

TEST(Series, SpecializedDisplays) {
  constexpr std::size_t N = 40;
  // sin(k pi/2) / (k+1): (1/(2(1-z))) log(1 + z^2).
  const auto recip = gf_weighted(series_from_sequence(entry_recip4().f, N),
                                 PeriodicWeight::quarter_sine());
  EXPECT_NEAR(recip[2].real(), 0.5, 1e-15);
  std::vector<Complex> half_log(N, 0.0);
  for (std::size_t j = 1; 2 * j < N; ++j) half_log[2 * j] = 0.5 * ((j % 2) ? 1.0 : -1.0) / j;
  EXPECT_LE(max_gap(recip, prefix_transform(TruncatedSeries(half_log))), 1e-14);

  // (-1)^k / k: -(z/(1-z)) log(1 + z).
  const auto alt = gf_weighted(series_from_sequence(entry_alt_harmonic().f, N),
                               PeriodicWeight::alternating());
  EXPECT_NEAR(alt[2].real(), -1.0, 1e-15);
  std::vector<Complex> zlog(N, 0.0);
  for (std::size_t j = 1; j + 1 < N; ++j) zlog[j + 1] = -((j % 2) ? 1.0 : -1.0) / j;
  EXPECT_LE(max_gap(alt, prefix_transform(TruncatedSeries(zlog))), 1e-14);

  // The rotation form for (-1)^k is z/(1-z) F(-z).
  const auto F = series_from_sequence([](std::int64_t k) { return Complex(1.0 / (k + 1.0)); }, 16);
  const auto rot = gf_weighted_rotations(F, PeriodicWeight::alternating());
  EXPECT_LE(max_gap(rot, prefix_transform(shift_up(rotate_argument(F, 2, 1), 1))), 1e-15);
}

TEST(Series, RealCoefficients) {
  const TruncatedSeries a({Complex(1.0, 1e-13), Complex(2.0, 0.0)});
  const auto r = real_coefficients(a);
  EXPECT_EQ(r[1], 2.0);
  EXPECT_THROW(real_coefficients(TruncatedSeries({Complex(1.0, 1e-3)})), InconsistencyError);
}

TEST(Series, RejectsBadResidue) {
  const TruncatedSeries a({1.0, 2.0});
  EXPECT_THROW(gf_S_p_dft(a, 1, 0), InvalidParameter);
  EXPECT_THROW(gf_S_p_decimate(a, 3, 3), InvalidParameter);
}

}  // namespace
}  // namespace persum
