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

#include "persum/sums.hpp"

#include <cmath>
#include <string>

namespace persum {

namespace {

void require_residue(int q, int p) {
  if (q < 2) {
    throw InvalidParameter("modulus q must be >= 2, got " + std::to_string(q));
  }
  if (p < 0 || p >= q) {
    throw InvalidParameter("residue p must satisfy 0 <= p < q, got p=" +
                           std::to_string(p) + ", q=" + std::to_string(q));
  }
}

void require_nonnegative(std::int64_t n) {
  if (n < 0) {
    throw InvalidParameter("summation bound must be >= 0, got " +
                           std::to_string(n));
  }
}

// Tracks whether a sequence of values stays within tol of its first entry.
class ConstancyCheck {
 public:
  explicit ConstancyCheck(double tol) : tol_(tol) {}

  void add(Complex v) {
    if (!first_) {
      first_ = v;
    } else if (!agrees(v, *first_, tol_)) {
      constant_ = false;
    }
  }
  bool constant() const { return constant_; }
  std::optional<Complex> value() const {
    return constant_ ? first_ : std::nullopt;
  }

 private:
  double tol_;
  std::optional<Complex> first_;
  bool constant_ = true;
};

}  // namespace

const Extension& SequenceFamily::extension(int p) const {
  if (!has_extension(p)) {
    throw UnsupportedFamily("family '" + name +
                            "' has no progression-sum extension for p=" +
                            std::to_string(p));
  }
  return extensions[static_cast<std::size_t>(p)];
}

void VerificationReport::record(std::int64_t n, Complex candidate,
                                Complex reference) {
  const double abs_err = std::abs(candidate - reference);
  const double ref_mag = std::abs(reference);
  const double rel_err = ref_mag > 0.0 ? abs_err / ref_mag : abs_err;
  const double scaled = scaled_error(candidate, reference);
  if (n > n_max) n_max = n;
  if (abs_err > max_abs_err) max_abs_err = abs_err;
  if (rel_err > max_rel_err) max_rel_err = rel_err;
  // NaN must fail, hence the negated comparison.
  if (!(scaled <= max_scaled_err)) {
    max_scaled_err = std::isnan(scaled) ? INFINITY : scaled;
    worst_n = n;
  }
  passed = max_scaled_err <= tolerance;
}

VerificationReport compare_sweep(const Sequence& candidate,
                                 const Sequence& reference,
                                 std::int64_t n_min, std::int64_t n_max,
                                 double tol) {
  VerificationReport report;
  report.tolerance = tol;
  report.n_max = n_min;
  report.worst_n = n_min;
  for (std::int64_t n = n_min; n <= n_max; ++n) {
    report.record(n, candidate(n), reference(n));
  }
  return report;
}

Complex brute_S(const Sequence& f, const PeriodicWeight& w, std::int64_t n) {
  require_nonnegative(n);
  CompensatedSum sum;
  for (std::int64_t k = 0; k < n; ++k) {
    const Complex g = w(k);
    if (g != 0.0) sum += g * f(k);
  }
  return sum.value();
}

Complex brute_T(const Sequence& f, int q, int p, std::int64_t n) {
  require_residue(q, p);
  require_nonnegative(n);
  CompensatedSum sum;
  for (std::int64_t k = 0; k < n; ++k) sum += f(q * k + p);
  return sum.value();
}

Complex brute_S_p(const Sequence& f, int q, int p, std::int64_t n) {
  require_residue(q, p);
  require_nonnegative(n);
  CompensatedSum sum;
  for (std::int64_t k = 0; k < n; ++k) {
    if (indicator(k - p, q, IndicatorMethod::Floor) != 0.0) sum += f(k);
  }
  return sum.value();
}

Complex forward_difference(const Sequence& h, std::int64_t n) {
  return h(n + 1) - h(n);
}

std::int64_t progression_index(std::int64_t n, int p, int q) {
  require_residue(q, p);
  require_nonnegative(n);
  return floor_div(n - p - 1, q) + 1;
}

Complex s_p_from_anti(const SequenceFamily& fam, int p, std::int64_t n,
                      IndicatorMethod method) {
  const int q = fam.q;
  require_residue(q, p);
  require_nonnegative(n);
  const Extension& t_plus = fam.extension(p);
  Complex sum = 0.0;
  for (int k = 0; k < q; ++k) {
    const std::int64_t m = n + k - p;
    if (m < 0) continue;
    if (method == IndicatorMethod::Floor) {
      if (floor_mod(m, q) == 0) sum += t_plus(Rational(m / q));
    } else {
      sum += indicator(m, q, method) * t_plus(Rational(m, q));
    }
  }
  return sum;
}

Complex t_from_s_p(const Sequence& f, int q, int p, std::int64_t n) {
  require_nonnegative(n);
  return brute_S_p(f, q, p, q * n);
}

Complex weighted_sum_from_anti(const PeriodicWeight& w,
                               const SequenceFamily& fam, std::int64_t n,
                               IndicatorMethod method) {
  if (w.q() != fam.q) {
    throw InvalidParameter("weight period " + std::to_string(w.q()) +
                           " does not match family modulus " +
                           std::to_string(fam.q));
  }
  Complex sum = 0.0;
  for (int p = 0; p < w.q(); ++p) {
    const Complex g = w(p);
    if (g == 0.0) continue;
    sum += g * s_p_from_anti(fam, p, n, method);
  }
  return sum;
}

Complex alternating_sum_closed(const Extension& t0_plus,
                               const Sequence& partial_sums, std::int64_t n) {
  require_nonnegative(n);
  const Complex lo = t0_plus(Rational(n, 2));
  const Complex hi = t0_plus(Rational(n + 1, 2));
  const double sign = (n % 2 == 0) ? 1.0 : -1.0;
  return (lo + hi - partial_sums(n)) + sign * (lo - hi);
}

ExtensionConditions check_half_step_conditions(const Extension& t0_plus,
                                               const Sequence& f,
                                               std::int64_t N, double tol) {
  require_nonnegative(N);
  ConstancyCheck window(tol);
  ConstancyCheck offset(tol);
  bool differences = true;

  CompensatedSum partial;  // S_f(n)
  CompensatedSum odd;      // T_1(n)
  for (std::int64_t n = 0; n <= N; ++n) {
    window.add(t0_plus(Rational(n, 2)) + t0_plus(Rational(n + 1, 2)) -
               partial.value());
    offset.add(t0_plus(Rational(2 * n + 1, 2)) - odd.value());
    if (n % 2 != 0) {
      const Complex step = t0_plus(Rational(n + 2, 2)) - t0_plus(Rational(n, 2));
      if (!agrees(step, f(n), tol)) differences = false;
    }
    partial += f(n);
    odd += f(2 * n + 1);
  }

  ExtensionConditions result;
  result.constant_window_sum = window.constant();
  result.difference_matches = differences;
  result.constant_offset = offset.constant();
  result.constant = window.value();
  return result;
}

ExtensionConditions check_third_step_conditions(const Extension& t0_plus,
                                                const Sequence& f,
                                                std::int64_t N, double tol) {
  require_nonnegative(N);
  ConstancyCheck window(tol);
  ConstancyCheck offset1(tol);
  ConstancyCheck offset2(tol);
  bool differences = true;

  CompensatedSum partial;
  CompensatedSum t1;
  CompensatedSum t2;
  for (std::int64_t n = 0; n <= N; ++n) {
    window.add(t0_plus(Rational(n, 3)) + t0_plus(Rational(n + 1, 3)) +
               t0_plus(Rational(n + 2, 3)) - partial.value());
    offset1.add(t0_plus(Rational(3 * n + 1, 3)) - t1.value());
    offset2.add(t0_plus(Rational(3 * n + 2, 3)) - t2.value());
    for (int p = 1; p <= 2; ++p) {
      const Complex step = t0_plus(Rational(3 * n + p + 3, 3)) -
                           t0_plus(Rational(3 * n + p, 3));
      if (!agrees(step, f(3 * n + p), tol)) differences = false;
    }
    partial += f(n);
    t1 += f(3 * n + 1);
    t2 += f(3 * n + 2);
  }

  ExtensionConditions result;
  result.constant_window_sum = window.constant();
  result.difference_matches = differences;
  result.constant_offset = offset1.constant() && offset2.constant();
  result.constant = window.value();
  return result;
}

Complex middle_alternating_identity(const Sequence& f, std::int64_t n) {
  require_nonnegative(n);
  CompensatedSum alternating;
  for (std::int64_t k = 0; k <= 2 * n; ++k) {
    alternating += (k % 2 == 0) ? f(k) : -f(k);
  }
  const Complex direct = alternating.value();
  const Complex split = brute_T(f, 2, 0, n + 1) - brute_T(f, 2, 1, n);
  if (!agrees(direct, split, 1e-12)) {
    throw InconsistencyError("alternating sum " + std::to_string(direct.real()) +
                             " differs from T_0(n+1) - T_1(n) = " +
                             std::to_string(split.real()));
  }
  return direct;
}

}  // namespace persum
