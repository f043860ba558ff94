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

#ifndef PERSUM_SUMS_HPP
#define PERSUM_SUMS_HPP

// Indefinite sums weighted by periodic sequences and the conversion between
// them and sums along arithmetic progressions.
//
// With g a q-periodic weight and f a sequence on the naturals:
//   S(n)   = sum_{k<n} g(k) f(k)
//   S_p(n) = sum_{k<n} g_0(k-p) f(k)       (terms with k == p mod q)
//   T_p(n) = sum_{k<n} f(q k + p)
// The brute_* functions evaluate these definitions directly and serve as
// oracles for the conversion formulas.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "persum/numeric.hpp"
#include "persum/periodic.hpp"

namespace persum {

using Sequence = std::function<Complex(std::int64_t)>;

/// Extension of T_p to the domain D_p = {(m - p)/q : m >= 0}.
using Extension = std::function<Complex(const Rational&)>;

/// A named sequence f together with extensions T_p^+ of its progression sums
/// for a fixed modulus q. extensions[p] may be empty when no closed form is
/// known for that residue.
struct SequenceFamily {
  std::string name;
  Sequence f;
  int q = 2;
  std::vector<Extension> extensions;

  bool has_extension(int p) const {
    return p >= 0 && p < static_cast<int>(extensions.size()) &&
           static_cast<bool>(extensions[static_cast<std::size_t>(p)]);
  }
  /// Throws UnsupportedFamily when extensions[p] is missing.
  const Extension& extension(int p) const;
};

/// Outcome of comparing a candidate route against an oracle over a range.
struct VerificationReport {
  std::int64_t n_max = 0;
  double max_abs_err = 0.0;
  double max_rel_err = 0.0;
  /// Largest error scaled by max(1, |reference|); `passed` is decided on it.
  double max_scaled_err = 0.0;
  std::int64_t worst_n = 0;
  double tolerance = 0.0;
  bool passed = true;

  void record(std::int64_t n, Complex candidate, Complex reference);
};

/// Sweeps n over [n_min, n_max] and compares candidate(n) with reference(n).
VerificationReport compare_sweep(const Sequence& candidate,
                                 const Sequence& reference,
                                 std::int64_t n_min, std::int64_t n_max,
                                 double tol);

Complex brute_S(const Sequence& f, const PeriodicWeight& w, std::int64_t n);
Complex brute_T(const Sequence& f, int q, int p, std::int64_t n);
Complex brute_S_p(const Sequence& f, int q, int p, std::int64_t n);

/// h(n+1) - h(n).
Complex forward_difference(const Sequence& h, std::int64_t n);

/// floor((n-p-1)/q) + 1: the number of k < n with k == p (mod q), so that
/// S_p(n) = T_p(progression_index(n, p, q)).
std::int64_t progression_index(std::int64_t n, int p, int q);

/// S_p(n) = sum_{k<q} g_0(n+k-p) T_p^+((n+k-p)/q).
///
/// Summands with n+k-p < 0 vanish and are skipped. With the Floor indicator
/// only the single summand whose argument is an integer is evaluated; the
/// trigonometric indicators evaluate the extension at every point of D_p in
/// the window, which is where the choice of extension shows up.
Complex s_p_from_anti(const SequenceFamily& fam, int p, std::int64_t n,
                      IndicatorMethod method = IndicatorMethod::Floor);

/// T_p(n) computed as S_p(q n).
Complex t_from_s_p(const Sequence& f, int q, int p, std::int64_t n);

/// S(n) = sum_p g(p) S_p(n), each S_p from the family's extensions. Residues
/// with g(p) == 0 are not queried.
Complex weighted_sum_from_anti(const PeriodicWeight& w,
                               const SequenceFamily& fam, std::int64_t n,
                               IndicatorMethod method = IndicatorMethod::Floor);

/// Alternating sum sum_{k<n} (-1)^k f(k) from the even-progression extension
/// and the plain partial sums S_f:
///   (T(n/2) + T((n+1)/2) - S_f(n)) + (-1)^n (T(n/2) - T((n+1)/2)).
Complex alternating_sum_closed(const Extension& t0_plus,
                               const Sequence& partial_sums, std::int64_t n);

/// Result of testing the three equivalent conditions on an extension of
/// T_0 for q = 2 or q = 3.
struct ExtensionConditions {
  bool constant_window_sum = false;  ///< (i)
  bool difference_matches = false;   ///< (ii)
  bool constant_offset = false;      ///< (iii)
  /// Value of the window sum in (i) when it is constant.
  std::optional<Complex> constant;

  bool consistent() const {
    return constant_window_sum == difference_matches &&
           difference_matches == constant_offset;
  }
  bool all() const {
    return constant_window_sum && difference_matches && constant_offset;
  }
};

/// q = 2, checked for n in 0..N:
///  (i)   T(n/2) + T((n+1)/2) - S_f(n) is constant;
///  (ii)  T(n/2 + 1) - T(n/2) = f(n) for odd n;
///  (iii) T(n + 1/2) - T_1(n) is constant.
ExtensionConditions check_half_step_conditions(const Extension& t0_plus,
                                               const Sequence& f,
                                               std::int64_t N,
                                               double tol = 1e-10);

/// q = 3, checked for n in 0..N:
///  (i)   sum_{j<3} T((n+j)/3) - S_f(n) is constant;
///  (ii)  T(n + p/3 + 1) - T(n + p/3) = f(3n+p) for p = 1, 2;
///  (iii) T(n + p/3) - T_p(n) is constant for p = 1, 2.
ExtensionConditions check_third_step_conditions(const Extension& t0_plus,
                                                const Sequence& f,
                                                std::int64_t N,
                                                double tol = 1e-10);

/// sum_{k=0}^{2n} (-1)^k f(k), verified against T_0(n+1) - T_1(n).
/// Throws InconsistencyError on a mismatch beyond 1e-12 (scaled).
Complex middle_alternating_identity(const Sequence& f, std::int64_t n);

}  // namespace persum

#endif  // PERSUM_SUMS_HPP
