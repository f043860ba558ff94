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

#include "persum/catalog.hpp"

#include <array>
#include <cmath>
#include <string>
#include <utility>

#include "persum/special.hpp"

namespace persum {

namespace {

const double kLn3 = std::log(3.0);
const double kLn4 = std::log(4.0);
const double kSqrt3 = std::sqrt(3.0);

// cos(n pi/2), sin(n pi/2), cos(2 n pi/3), sin(2 n pi/3) without rounding
// noise at the zeros.
double cos_quarter(std::int64_t n) {
  constexpr std::array<double, 4> t = {1.0, 0.0, -1.0, 0.0};
  return t[static_cast<std::size_t>(floor_mod(n, 4))];
}
double sin_quarter(std::int64_t n) {
  constexpr std::array<double, 4> t = {0.0, 1.0, 0.0, -1.0};
  return t[static_cast<std::size_t>(floor_mod(n, 4))];
}
double cos_third(std::int64_t n) {
  constexpr std::array<double, 3> t = {1.0, -0.5, -0.5};
  return t[static_cast<std::size_t>(floor_mod(n, 3))];
}
double sin_third(std::int64_t n) {
  const std::array<double, 3> t = {0.0, 0.5 * kSqrt3, -0.5 * kSqrt3};
  return t[static_cast<std::size_t>(floor_mod(n, 3))];
}

double lgam(const Rational& x) { return log_gamma(x.value()); }

double H(const Rational& x) { return harmonic(x); }

double direct_harmonic(std::int64_t n) {
  CompensatedSum sum;
  for (std::int64_t k = 1; k <= n; ++k) sum += 1.0 / static_cast<double>(k);
  return sum.value().real();
}

void require_closed_domain(std::int64_t n, std::int64_t from,
                           const char* id) {
  if (n < from) {
    throw DomainError(std::string("closed form of '") + id +
                      "' is defined for n >= " + std::to_string(from) +
                      ", got n = " + std::to_string(n));
  }
}

void require_binomial_args(int m, int q, int p) {
  if (m < 0) throw InvalidParameter("binomial row m must be >= 0");
  if (q < 2 || p < 0 || p >= q) {
    throw InvalidParameter("need q >= 2 and 0 <= p < q, got p=" +
                           std::to_string(p) + ", q=" + std::to_string(q));
  }
}

// cos(j pi/q)^e, exactly zero where the cosine vanishes (e >= 1).
double cos_power(int j, int q, int e) {
  if (e >= 1 && 2 * j == q) return 0.0;
  return std::pow(std::cos(j * kPi / q), e);
}

}  // namespace

CatalogEntry entry_log3() {
  CatalogEntry e;
  e.id = "log3";
  e.description = "sum_{k=1}^{n-1} cos(2 k pi/3) log k";
  e.q = 3;
  e.weight = PeriodicWeight::third_cosine();
  e.f = [](std::int64_t k) -> Complex {
    return k == 0 ? 0.0 : std::log(static_cast<double>(k));
  };
  e.t_plus = {
      [](const Rational& x) -> Complex {
        if (x == Rational(0)) return 0.0;
        return (x.value() - 1.0) * kLn3 + lgam(x);
      },
      [](const Rational& x) -> Complex {
        return x.value() * kLn3 + lgam(x + Rational(1, 3)) -
               lgam(Rational(1, 3));
      },
      [](const Rational& x) -> Complex {
        return x.value() * kLn3 + lgam(x + Rational(2, 3)) -
               lgam(Rational(2, 3));
      },
  };
  e.closed_from = 1;
  e.closed_S = [](std::int64_t n) -> Complex {
    require_closed_domain(n, 1, "log3");
    double s = 0.25 * std::log(4.0 * kPi * kPi / 27.0);
    for (int j = 0; j < 3; ++j) {
      s += cos_third(n + j) * (j / 3.0 * kLn3 + lgam(Rational(n + j, 3)));
    }
    return s;
  };
  e.closed_S_variant = [](std::int64_t n) -> Complex {
    require_closed_domain(n, 1, "log3");
    const double two_pi = 2.0 * kPi;
    const double nd = static_cast<double>(n);
    return std::log(std::sqrt(two_pi)) - 0.75 * kLn3 +
           0.5 * cos_third(n) *
               ((nd - 1.5) * kLn3 + 3.0 * lgam(Rational(n, 3)) -
                std::log(two_pi) - lgam(Rational(n))) +
           0.5 * kSqrt3 * sin_third(n) *
               (kLn3 / 3.0 + lgam(Rational(n + 2, 3)) -
                lgam(Rational(n + 1, 3)));
  };
  return e;
}

CatalogEntry entry_log4() {
  CatalogEntry e;
  e.id = "log4";
  e.description = "sum_{k<n} sin(k pi/2) log(k+1)";
  e.q = 4;
  e.weight = PeriodicWeight::quarter_sine();
  e.f = [](std::int64_t k) -> Complex {
    return std::log(static_cast<double>(k + 1));
  };
  for (int p = 0; p < 4; ++p) {
    const Rational offset(p + 1, 4);
    e.t_plus.emplace_back([offset](const Rational& x) -> Complex {
      return x.value() * kLn4 + lgam(x + offset) - lgam(offset);
    });
  }
  e.closed_S = [](std::int64_t n) -> Complex {
    require_closed_domain(n, 0, "log4");
    return std::log(2.0 / std::sqrt(kPi)) +
           cos_quarter(n) * (lgam(Rational(n + 2, 4)) - kLn2 -
                             lgam(Rational(n + 4, 4))) +
           sin_quarter(n) * (lgam(Rational(n + 1, 4)) - kLn2 -
                             lgam(Rational(n + 3, 4)));
  };
  return e;
}

CatalogEntry entry_recip4() {
  CatalogEntry e;
  e.id = "recip4";
  e.description = "sum_{k<n} sin(k pi/2) / (k+1)";
  e.q = 4;
  e.weight = PeriodicWeight::quarter_sine();
  e.f = [](std::int64_t k) -> Complex {
    return 1.0 / static_cast<double>(k + 1);
  };
  for (int p = 0; p < 4; ++p) {
    const Rational shift = Rational(p + 1, 4) - Rational(1);
    e.t_plus.emplace_back([shift](const Rational& x) -> Complex {
      return 0.25 * (H(x + shift) - H(shift));
    });
  }
  e.closed_S = [](std::int64_t n) -> Complex {
    require_closed_domain(n, 0, "recip4");
    return 0.25 * kLn4 +
           0.25 * cos_quarter(n) * (H(Rational(n - 2, 4)) - H(Rational(n, 4))) +
           0.25 * sin_quarter(n) *
               (H(Rational(n - 3, 4)) - H(Rational(n - 1, 4)));
  };
  return e;
}

CatalogEntry entry_harmonic4() {
  CatalogEntry e;
  e.id = "harmonic4";
  e.description = "sum_{k<n} sin(k pi/2) H_k";
  e.q = 4;
  e.weight = PeriodicWeight::quarter_sine();
  e.f = [](std::int64_t k) -> Complex { return direct_harmonic(k); };
  // H_{4k+p} = gamma + ln 4 + (1/4) sum_r psi(k + a_r), a_r = (p+1+r)/4, and
  // sum_{k<x} psi(k+a) = (a+x-1) psi(a+x) - (a-1) psi(a) - x.
  for (int p = 0; p < 4; ++p) {
    e.t_plus.emplace_back([p](const Rational& x) -> Complex {
      const double xd = x.value();
      double s = xd * (kEulerGamma + kLn4);
      for (int r = 0; r < 4; ++r) {
        const double a = (p + 1 + r) / 4.0;
        const double at_a = (a == 1.0) ? 0.0 : (a - 1.0) * digamma(a).real();
        s += 0.25 * ((a + xd - 1.0) * digamma(a + xd).real() - at_a - xd);
      }
      return s;
    });
  }
  e.closed_S = [](std::int64_t n) -> Complex {
    require_closed_domain(n, 0, "harmonic4");
    const double c = (kPi - 2.0 * kLn2) / 8.0;
    return c -
           0.25 * cos_quarter(n) *
               (H(Rational(n - 1, 4)) + H(Rational(n - 2, 4)) + 4.0 * kLn2) -
           0.25 * sin_quarter(n) *
               (H(Rational(n - 2, 4)) + H(Rational(n - 3, 4)) + 4.0 * kLn2);
  };
  e.closed_S_variant = [](std::int64_t n) -> Complex {
    require_closed_domain(n, 0, "harmonic4");
    const double h0 = H(Rational(n, 4));
    const double h1 = H(Rational(n - 1, 4));
    const double h2 = H(Rational(n - 2, 4));
    const double h3 = H(Rational(n - 3, 4));
    const double hn = H(Rational(n));
    return (kPi - 2.0 * kLn2) / 8.0 +
           0.125 * cos_quarter(n) * (h0 - h1 - h2 + h3 - 4.0 * hn) +
           0.125 * sin_quarter(n) * (h0 + h1 - h2 - h3 - 4.0 * hn);
  };
  return e;
}

CatalogEntry entry_alt_harmonic() {
  CatalogEntry e;
  e.id = "alt-harmonic";
  e.description = "sum_{k=1}^{n-1} (-1)^k / k";
  e.q = 2;
  e.weight = PeriodicWeight::alternating();
  e.f = [](std::int64_t k) -> Complex {
    return k == 0 ? 0.0 : 1.0 / static_cast<double>(k);
  };
  e.t_plus = {
      [](const Rational& x) -> Complex {
        if (x == Rational(0)) return 0.0;
        return 0.5 * H(x - Rational(1));
      },
      [](const Rational& x) -> Complex {
        return 0.5 * (H(x - Rational(1, 2)) - H(Rational(-1, 2)));
      },
  };
  e.closed_from = 1;
  e.closed_S = [](std::int64_t n) -> Complex {
    require_closed_domain(n, 1, "alt-harmonic");
    const double sign = (n % 2 == 0) ? 1.0 : -1.0;
    return -kLn2 +
           0.5 * sign * (H(Rational(n - 2, 2)) - H(Rational(n - 1, 2)));
  };
  return e;
}

CatalogEntry entry_inverse_square4() {
  CatalogEntry e;
  e.id = "inv-square4";
  e.description = "sum_{k=1}^{n-1} sin(k pi/2) / k^2";
  e.q = 4;
  e.weight = PeriodicWeight::quarter_sine();
  e.f = [](std::int64_t k) -> Complex {
    if (k == 0) return 0.0;
    const double kd = static_cast<double>(k);
    return 1.0 / (kd * kd);
  };
  e.t_plus.emplace_back([](const Rational& x) -> Complex {
    if (x == Rational(0)) return 0.0;
    return (kPi * kPi / 6.0 - trigamma(x.value()).real()) / 16.0;
  });
  for (int p = 1; p < 4; ++p) {
    const Rational offset(p, 4);
    e.t_plus.emplace_back([offset](const Rational& x) -> Complex {
      return (trigamma(offset.value()).real() -
              trigamma((x + offset).value()).real()) /
             16.0;
    });
  }
  return e;
}

std::vector<CatalogEntry> catalog() {
  std::vector<CatalogEntry> entries;
  entries.push_back(entry_log3());
  entries.push_back(entry_log4());
  entries.push_back(entry_recip4());
  entries.push_back(entry_harmonic4());
  entries.push_back(entry_alt_harmonic());
  entries.push_back(entry_inverse_square4());
  return entries;
}

std::optional<CatalogEntry> find_entry(std::string_view id) {
  for (CatalogEntry& e : catalog()) {
    if (e.id == id) return std::move(e);
  }
  return std::nullopt;
}

double log3_progression_from_one(int p, std::int64_t n) {
  if (p < 0 || p > 2) throw InvalidParameter("p must be in {0, 1, 2}");
  if (n < 1) throw DomainError("progression from k = 1 needs n >= 1");
  return static_cast<double>(n - 1) * kLn3 +
         lgam(Rational(n) + Rational(p, 3)) - lgam(Rational(3 + p, 3));
}

double alternating_harmonic_even(std::int64_t n) {
  if (n < 0) throw InvalidParameter("n must be >= 0");
  return H(Rational(2 * n)) - H(Rational(n));
}

double catalan_series(std::int64_t K) {
  if (K < 1) throw InvalidParameter("catalan_series needs K >= 1");
  CompensatedSum sum;
  for (std::int64_t k = 0; k < K; ++k) {
    const double a = 4.0 * static_cast<double>(k) + 1.0;
    const double b = a + 2.0;
    sum += 1.0 / (a * a) - 1.0 / (b * b);
  }
  return sum.value().real();
}

double inverse_square_limit() {
  return (trigamma(0.25).real() - trigamma(0.75).real()) / 16.0;
}

double binomial_progression_sum(int m, int q, int p, BinomialWeight h) {
  require_binomial_args(m, q, p);
  double sum = 0.0;
  if (h == BinomialWeight::One) {
    for (int j = 0; j < q; ++j) {
      sum += std::cos(j * (m - 2 * p) * kPi / q) * cos_power(j, q, m);
    }
    return std::ldexp(sum, m) / q;
  }
  const double two_pow = std::ldexp(1.0, m + 1);
  for (int j = 0; j < q; ++j) {
    sum += two_pow * std::cos(j * (m - 2 * p - 1) * kPi / q) *
               cos_power(j, q, m + 1) -
           std::cos(2.0 * j * (p + 1) * kPi / q);
  }
  return sum / (static_cast<double>(q) * (m + 1));
}

double binomial_progression_brute(int m, int q, int p, BinomialWeight h) {
  require_binomial_args(m, q, p);
  CompensatedSum sum;
  double c = 1.0;  // C(m, k)
  for (int k = 0; k <= m; ++k) {
    if (k > 0) c = c * (m - k + 1) / k;
    if (k % q != p) continue;
    sum += (h == BinomialWeight::One) ? c : c / (k + 1);
  }
  return sum.value().real();
}

Complex generalized_binomial(Complex z, std::int64_t k) {
  if (k < 0) return 0.0;
  Complex c = 1.0;
  for (std::int64_t j = 0; j < k; ++j) {
    c *= (z - static_cast<double>(j)) / static_cast<double>(j + 1);
  }
  return c;
}

Complex alternating_binomial_prefix(Complex z, std::int64_t n) {
  if (n < 0) throw InvalidParameter("n must be >= 0");
  CompensatedSum sum;
  for (std::int64_t k = 0; k <= n; ++k) {
    const Complex c = generalized_binomial(z, k);
    sum += (k % 2 == 0) ? c : -c;
  }
  const Complex direct = sum.value();
  const Complex closed =
      ((n % 2 == 0) ? 1.0 : -1.0) * generalized_binomial(z - 1.0, n);
  if (!agrees(direct, closed, 1e-9)) {
    throw InconsistencyError("alternating binomial prefix mismatch");
  }
  return direct;
}

Complex odd_binomial_prefix(Complex z, std::int64_t n) {
  if (n < 0) throw InvalidParameter("n must be >= 0");
  CompensatedSum odd;
  for (std::int64_t k = 0; k < n; ++k) odd += generalized_binomial(z, 2 * k + 1);
  CompensatedSum row;
  for (std::int64_t k = 0; k <= 2 * n; ++k) row += generalized_binomial(z, k);
  const Complex direct = odd.value();
  const Complex split =
      0.5 * row.value() - 0.5 * generalized_binomial(z - 1.0, 2 * n);
  if (!agrees(direct, split, 1e-9)) {
    throw InconsistencyError("odd binomial prefix mismatch");
  }
  return direct;
}

}  // namespace persum
