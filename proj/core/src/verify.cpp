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

#include "persum/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <future>
#include <string>
#include <utility>

#include "persum/catalog.hpp"
#include "persum/expr.hpp"
#include "persum/periodic.hpp"
#include "persum/series.hpp"
#include "persum/special.hpp"
#include "persum/sums.hpp"

namespace persum {

namespace {

struct SuiteDef {
  std::string name;
  std::string description;
  ErrorMode mode;
  double tolerance;
  std::function<void(SuiteResult&, const VerifyOptions&)> body;
};

std::string label(const std::string& family, int p, std::int64_t n) {
  return family + " p=" + std::to_string(p) + " n=" + std::to_string(n);
}

std::string label(const std::string& family, std::int64_t n) {
  return family + " n=" + std::to_string(n);
}

// f(k) with rational (mostly integer) values; sums over the same terms in the
// same order must agree bit for bit.
std::vector<std::pair<std::string, Sequence>> rational_families() {
  return {
      {"k", [](std::int64_t k) -> Complex { return static_cast<double>(k); }},
      {"k^2-3k+1",
       [](std::int64_t k) -> Complex {
         return static_cast<double>(k * k - 3 * k + 1);
       }},
      {"1/(k+1)",
       [](std::int64_t k) -> Complex {
         return 1.0 / static_cast<double>(k + 1);
       }},
      {"(k mod 5)-2",
       [](std::int64_t k) -> Complex {
         return static_cast<double>(k % 5 - 2);
       }},
  };
}

void suite_delta(SuiteResult& r, const VerifyOptions&) {
  for (const CatalogEntry& e : catalog()) {
    const Sequence S = [&e](std::int64_t n) {
      return brute_S(e.f, e.weight, n);
    };
    for (std::int64_t n = 0; n <= 200; ++n) {
      r.observe(forward_difference(S, n), e.weight(n) * e.f(n),
                label(e.id + " S", n));
    }
    for (int p = 0; p < e.q; ++p) {
      const Sequence T = [&e, p](std::int64_t n) {
        return brute_T(e.f, e.q, p, n);
      };
      for (std::int64_t n = 0; n <= 200; ++n) {
        r.observe(forward_difference(T, n), e.f(e.q * n + p),
                  label(e.id + " T", p, n));
      }
    }
  }
}

void suite_progression(SuiteResult& r, const VerifyOptions&) {
  for (const auto& [name, f] : rational_families()) {
    for (int q = 2; q <= 6; ++q) {
      for (int p = 0; p < q; ++p) {
        for (std::int64_t n = 0; n <= 200; ++n) {
          r.observe(brute_S_p(f, q, p, n),
                    brute_T(f, q, p, progression_index(n, p, q)),
                    label(name + " q=" + std::to_string(q) + " S_p", p, n));
          r.observe(t_from_s_p(f, q, p, n), brute_T(f, q, p, n),
                    label(name + " q=" + std::to_string(q) + " T_p", p, n));
        }
      }
    }
  }
}

void suite_extension(SuiteResult& r, const VerifyOptions&) {
  for (const CatalogEntry& e : catalog()) {
    const SequenceFamily fam = e.family();
    for (int p = 0; p < e.q; ++p) {
      for (std::int64_t n = 0; n <= 300; ++n) {
        const Complex oracle = brute_S_p(e.f, e.q, p, n);
        r.observe(s_p_from_anti(fam, p, n, IndicatorMethod::Floor), oracle,
                  label(e.id + " floor", p, n));
        r.observe(s_p_from_anti(fam, p, n, IndicatorMethod::RootsOfUnity),
                  oracle, label(e.id + " roots", p, n));
      }
    }
    for (std::int64_t n = 0; n <= 300; ++n) {
      r.observe(weighted_sum_from_anti(e.weight, fam, n),
                brute_S(e.f, e.weight, n), label(e.id + " S", n));
    }
  }
}

void suite_closed_forms(SuiteResult& r, const VerifyOptions& options) {
  const double fault = options.inject_fault ? 1e-6 : 0.0;
  for (const CatalogEntry& e : catalog()) {
    for (std::int64_t n = e.closed_from; n <= 300; ++n) {
      const Complex oracle = brute_S(e.f, e.weight, n);
      if (e.closed_S) {
        r.observe((*e.closed_S)(n) + fault, oracle, label(e.id, n));
      }
      if (e.closed_S_variant) {
        r.observe((*e.closed_S_variant)(n), oracle,
                  label(e.id + " variant", n));
      }
    }
  }
}

void suite_closed_variants(SuiteResult& r, const VerifyOptions&) {
  for (const CatalogEntry& e : catalog()) {
    if (!e.closed_S || !e.closed_S_variant) continue;
    for (std::int64_t n = e.closed_from; n <= 300; ++n) {
      r.observe((*e.closed_S_variant)(n), (*e.closed_S)(n), label(e.id, n));
    }
  }
}

// log(1 + z^d) = sum_m (-1)^{m+1} z^{dm}/m.
TruncatedSeries log_one_plus_power(int d, std::size_t order) {
  std::vector<Complex> c(order, 0.0);
  for (std::size_t m = 1; static_cast<std::size_t>(d) * m < order; ++m) {
    c[static_cast<std::size_t>(d) * m] =
        ((m % 2 == 1) ? 1.0 : -1.0) / static_cast<double>(m);
  }
  return TruncatedSeries(std::move(c));
}

void suite_genfun(SuiteResult& r, const VerifyOptions&) {
  constexpr std::size_t N = 64;
  for (const CatalogEntry& e : catalog()) {
    const TruncatedSeries F = series_from_sequence(e.f, N);
    for (int q = 2; q <= 5; ++q) {
      for (int p = 0; p < q; ++p) {
        const TruncatedSeries dft = gf_S_p_dft(F, q, p);
        const TruncatedSeries dec = gf_S_p_decimate(F, q, p);
        for (std::size_t n = 0; n < N; ++n) {
          const auto nn = static_cast<std::int64_t>(n);
          const Complex direct = brute_S_p(e.f, q, p, nn);
          const std::string tag = e.id + " q=" + std::to_string(q);
          r.observe(dft[n], dec[n], label(tag + " dft/dec", p, nn));
          r.observe(dft[n], direct, label(tag + " dft", p, nn));
          r.observe(dec[n], direct, label(tag + " dec", p, nn));
        }
      }
    }
    const TruncatedSeries G = gf_weighted(F, e.weight);
    for (std::size_t n = 0; n < N; ++n) {
      const auto nn = static_cast<std::int64_t>(n);
      r.observe(G[n], brute_S(e.f, e.weight, nn), label(e.id + " weighted", nn));
    }
  }

  // 1/(n+1) under sin(k pi/2): (1/(2(1-z))) log(1 + z^2).
  const TruncatedSeries recip = gf_weighted(
      series_from_sequence(entry_recip4().f, N), PeriodicWeight::quarter_sine());
  const TruncatedSeries recip_closed =
      prefix_transform(0.5 * log_one_plus_power(2, N));
  r.observe(recip[2], 0.5, "recip4 z^2");
  // 1/k under (-1)^k: -(z/(1-z)) log(1 + z).
  const TruncatedSeries alt = gf_weighted(
      series_from_sequence(entry_alt_harmonic().f, N),
      PeriodicWeight::alternating());
  const TruncatedSeries alt_closed =
      prefix_transform(-1.0 * shift_up(log_one_plus_power(1, N), 1));
  r.observe(alt[2], -1.0, "alt-harmonic z^2");
  for (std::size_t n = 0; n < N; ++n) {
    const auto nn = static_cast<std::int64_t>(n);
    r.observe(recip[n], recip_closed[n], label("recip4 closed gf", nn));
    r.observe(alt[n], alt_closed[n], label("alt-harmonic closed gf", nn));
  }
}

void suite_conditions(SuiteResult& r, const VerifyOptions&) {
  constexpr std::int64_t N = 100;
  const CatalogEntry alt = entry_alt_harmonic();
  const Extension t_half = alt.t_plus[0];
  const ExtensionConditions half =
      check_half_step_conditions(t_half, alt.f, N, r.tolerance);
  r.require(half.all(), "half-step canonical: all conditions");
  r.observe(half.constant.value_or(Complex(NAN)), -kLn2,
            "half-step canonical constant");

  const Extension t_half_bad = [t_half](const Rational& x) {
    return t_half(x) + (x == Rational(5, 2) ? 1.0 : 0.0);
  };
  const ExtensionConditions half_bad =
      check_half_step_conditions(t_half_bad, alt.f, N, r.tolerance);
  r.require(half_bad.consistent() && !half_bad.constant_window_sum,
            "half-step perturbed: all conditions fail");

  const CatalogEntry log3 = entry_log3();
  const Extension t_third = log3.t_plus[0];
  const ExtensionConditions third =
      check_third_step_conditions(t_third, log3.f, N, r.tolerance);
  r.require(third.all(), "third-step canonical: all conditions");
  // The window sum at n = 0 is log(Gamma(1/3) Gamma(2/3) / 3).
  r.observe(third.constant.value_or(Complex(NAN)),
            std::log(2.0 * kPi / std::pow(3.0, 1.5)),
            "third-step canonical constant");

  const Extension t_third_bad = [t_third](const Rational& x) {
    return t_third(x) + (x == Rational(7, 3) ? 1.0 : 0.0);
  };
  const ExtensionConditions third_bad =
      check_third_step_conditions(t_third_bad, log3.f, N, r.tolerance);
  r.require(third_bad.consistent() && !third_bad.constant_window_sum,
            "third-step perturbed: all conditions fail");
}

void suite_catalan_constant(SuiteResult& r, const VerifyOptions&) {
  r.observe(catalan_series(100000), 0.915965594, "catalan_series(1e5)");
  r.observe(inverse_square_limit(), 0.915965594, "trigamma limit");
}

void suite_catalan_regrouping(SuiteResult& r, const VerifyOptions&) {
  const CatalogEntry e = entry_inverse_square4();
  r.observe(brute_S(e.f, e.weight, 400000), catalan_series(100000),
            "brute_S(4e5) vs catalan_series(1e5)");
}

void suite_binomial(SuiteResult& r, const VerifyOptions&) {
  for (int m = 0; m <= 30; ++m) {
    for (int q = 2; q <= 8; ++q) {
      double row = 0.0;
      for (int p = 0; p < q; ++p) {
        const std::string tag = "m=" + std::to_string(m) +
                                " q=" + std::to_string(q) +
                                " p=" + std::to_string(p);
        const double one = binomial_progression_sum(m, q, p, BinomialWeight::One);
        r.observe(one,
                  binomial_progression_brute(m, q, p, BinomialWeight::One),
                  tag + " h=one");
        r.observe(binomial_progression_sum(m, q, p,
                                           BinomialWeight::ReciprocalShift),
                  binomial_progression_brute(m, q, p,
                                             BinomialWeight::ReciprocalShift),
                  tag + " h=recip");
        row += one;
      }
      r.observe(row, std::ldexp(1.0, m),
                "row m=" + std::to_string(m) + " q=" + std::to_string(q));
    }
    // sum_k C(m, 3k+1)/(3k+2) = (2^{m+2} - 3 cos(m pi/3) - cos(5 m pi/3)) / (6(m+1))
    const double intro = (std::ldexp(1.0, m + 2) - 3.0 * std::cos(m * kPi / 3.0) -
                          std::cos(5.0 * m * kPi / 3.0)) /
                         (6.0 * (m + 1));
    r.observe(intro,
              binomial_progression_brute(m, 3, 1, BinomialWeight::ReciprocalShift),
              "third progression m=" + std::to_string(m));
  }
}

void suite_gauss(SuiteResult& r, const VerifyOptions& options) {
  for (int q = 2; q <= options.qmax; ++q) {
    for (int p = 1; p < q; ++p) {
      const std::string tag = "p=" + std::to_string(p) + " q=" + std::to_string(q);
      const double h = harmonic(Rational(p, q));
      r.observe(gauss_fractional_harmonic(p, q), h, tag + " folded");
      r.observe(gauss_fractional_harmonic(p, q, GaussSum::Full), h,
                tag + " full");
      const TrigSums t = trig_sums(p, q);
      r.observe(t.sin_sum, 0.0, tag + " sin sum");
      r.observe(t.cos_sum, -1.0, tag + " cos sum");
      const double cot_ref =
          2 * p == q ? 0.0 : std::cos(p * kPi / q) / std::sin(p * kPi / q);
      r.observe(t.weighted_sin_sum, -0.5 * q * cot_ref,
                tag + " weighted sin sum");
    }
    r.observe(sine_product(q), q * std::ldexp(1.0, 1 - q),
              "sine product q=" + std::to_string(q));
  }
  for (int i = 0; i < 100; ++i) {
    const double x = -10.3 + 0.41 * i;
    r.observe(duplication_residual(x), 0.0,
              "duplication x=" + std::to_string(x));
    r.observe(multiplication_residual(x, 4), 0.0,
              "multiplication x=" + std::to_string(x));
  }
}

void suite_parser(SuiteResult& r, const VerifyOptions&) {
  struct Case {
    const char* text;
    int period;
    std::vector<double> values;
  };
  const std::vector<Case> cases = {
      {"sin(k*pi/2)", 4, {0.0, 1.0, 0.0, -1.0}},
      {"cos(2*k*pi/3)", 3, {1.0, -0.5, -0.5}},
      {"(-1)^k", 2, {1.0, -1.0}},
  };
  for (const Case& c : cases) {
    const Expr e = parse_expression(c.text);
    const int q = detect_period(e, 12);
    r.require(q == c.period, std::string(c.text) + " period " + std::to_string(q));
    for (int k = 0; k < 3 * c.period; ++k) {
      r.observe(e(k), c.values[static_cast<std::size_t>(k % c.period)],
                std::string(c.text) + " k=" + std::to_string(k));
    }
  }
}

std::vector<SuiteDef> all_suites() {
  return {
      {"delta", "forward differences of brute sums recover g(n)f(n), f(qn+p)",
       ErrorMode::Scaled, 1e-12, suite_delta},
      {"progression", "S_p(n) = T_p(floor((n-p-1)/q)+1) and T_p(n) = S_p(qn)",
       ErrorMode::Absolute, 0.0, suite_progression},
      {"extension", "S_p from progression-sum extensions vs brute S_p",
       ErrorMode::Scaled, 1e-10, suite_extension},
      {"closed-forms", "catalog closed forms vs brute S(n), n <= 300",
       ErrorMode::Scaled, 1e-9, suite_closed_forms},
      {"closed-variants", "alternative closed forms agree with each other",
       ErrorMode::Scaled, 1e-10, suite_closed_variants},
      {"genfun", "both generating-function forms vs direct S_p coefficients",
       ErrorMode::Scaled, 1e-10, suite_genfun},
      {"conditions", "equivalent extension conditions for q = 2 and q = 3",
       ErrorMode::Scaled, 1e-10, suite_conditions},
      {"catalan-constant", "truncated Catalan series vs 0.915965594",
       ErrorMode::Absolute, 1e-8, suite_catalan_constant},
      {"catalan-regrouping", "weighted 1/k^2 sum vs regrouped Catalan series",
       ErrorMode::Absolute, 1e-10, suite_catalan_regrouping},
      {"binomial", "binomial progression closed forms vs brute row sums",
       ErrorMode::Relative, 1e-9, suite_binomial},
      {"gauss", "Gauss formula for H_{p/q} and supporting identities",
       ErrorMode::Scaled, 1e-10, suite_gauss},
      {"parser", "weight expressions parse, evaluate and report their period",
       ErrorMode::Scaled, 1e-12, suite_parser},
  };
}

SuiteResult run_suite(const SuiteDef& def, const VerifyOptions& options) {
  SuiteResult r;
  r.name = def.name;
  r.description = def.description;
  r.mode = def.mode;
  r.tolerance = options.tolerance.value_or(def.tolerance);
  try {
    def.body(r, options);
  } catch (const std::exception& ex) {
    r.failure = ex.what();
    r.passed = false;
  }
  return r;
}

}  // namespace

namespace {

std::string short_number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

}  // namespace

void SuiteResult::observe(Complex candidate, Complex reference,
                          const std::string& case_label) {
  ++cases;
  const double abs_err = std::abs(candidate - reference);
  const double mag = std::abs(reference);
  const double rel_err = mag > 0.0 ? abs_err / mag : abs_err;
  double err = abs_err;
  if (mode == ErrorMode::Scaled) err = abs_err / std::max(1.0, mag);
  if (mode == ErrorMode::Relative) err = rel_err;
  if (std::isnan(err)) err = INFINITY;
  max_abs_err = std::max(max_abs_err, std::isnan(abs_err) ? INFINITY : abs_err);
  max_rel_err = std::max(max_rel_err, std::isnan(rel_err) ? INFINITY : rel_err);
  if (err > max_err || (cases == 1 && worst_case.empty())) {
    max_err = std::max(max_err, err);
    worst_case = case_label;
  }
  if (err > tolerance) {
    if (passed) {
      failure = case_label + ": error " + short_number(err) +
                " exceeds tolerance " + short_number(tolerance);
    }
    passed = false;
  }
}

void SuiteResult::require(bool ok, const std::string& case_label) {
  ++cases;
  if (!ok) {
    if (passed) failure = case_label + ": check failed";
    passed = false;
    max_err = INFINITY;
    worst_case = case_label;
  }
}

std::vector<std::string> suite_names() {
  std::vector<std::string> names;
  for (const SuiteDef& s : all_suites()) names.push_back(s.name);
  return names;
}

std::vector<SuiteResult> run_verification(const VerifyOptions& options) {
  if (options.qmax < 2) throw InvalidParameter("qmax must be >= 2");
  std::vector<SuiteDef> selected;
  const std::vector<SuiteDef> suites = all_suites();
  if (options.suites.empty()) {
    selected = suites;
  } else {
    for (const SuiteDef& s : suites) {
      if (std::find(options.suites.begin(), options.suites.end(), s.name) !=
          options.suites.end()) {
        selected.push_back(s);
      }
    }
    for (const std::string& name : options.suites) {
      const bool known = std::any_of(suites.begin(), suites.end(),
                                     [&](const SuiteDef& s) { return s.name == name; });
      if (!known) throw InvalidParameter("unknown suite '" + name + "'");
    }
  }

  std::vector<SuiteResult> results;
  if (!options.parallel) {
    for (const SuiteDef& s : selected) results.push_back(run_suite(s, options));
    return results;
  }
  std::vector<std::future<SuiteResult>> pending;
  for (const SuiteDef& s : selected) {
    pending.push_back(std::async(std::launch::async, run_suite, std::cref(s),
                                 std::cref(options)));
  }
  for (auto& f : pending) results.push_back(f.get());
  return results;
}

}  // namespace persum
