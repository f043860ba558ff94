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

#ifndef PERSUM_CATALOG_HPP
#define PERSUM_CATALOG_HPP

// Concrete families with known progression-sum extensions and closed forms
// for their periodically weighted sums. Each entry is a regression target for
// the generic engine in sums.hpp.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "persum/numeric.hpp"
#include "persum/periodic.hpp"
#include "persum/sums.hpp"

namespace persum {

using ClosedForm = std::function<Complex(std::int64_t)>;

struct CatalogEntry {
  std::string id;
  std::string description;
  int q = 2;
  Sequence f;
  /// T_p^+ for every residue p (indexed by p).
  std::vector<Extension> t_plus;
  PeriodicWeight weight = PeriodicWeight::alternating();
  /// S(n) in closed form; throws DomainError below `closed_from`.
  std::optional<ClosedForm> closed_S;
  /// A second, independently simplified closed form of the same S(n).
  std::optional<ClosedForm> closed_S_variant;
  std::int64_t closed_from = 0;

  SequenceFamily family() const { return {id, f, q, t_plus}; }
};

/// f(k) = log k (f(0) = 0), weight cos(2 k pi/3).
CatalogEntry entry_log3();
/// f(n) = log(n+1), weight sin(k pi/2).
CatalogEntry entry_log4();
/// f(n) = 1/(n+1), weight sin(k pi/2).
CatalogEntry entry_recip4();
/// f(n) = H_n, weight sin(k pi/2). The variant is the form before the
/// multiplication formula for H is applied.
CatalogEntry entry_harmonic4();
/// f(k) = 1/k (f(0) = 0), weight (-1)^k.
CatalogEntry entry_alt_harmonic();
/// f(k) = 1/k^2 (f(0) = 0), weight sin(k pi/2). No finite-n closed form.
CatalogEntry entry_inverse_square4();

/// All entries above, in a fixed order.
std::vector<CatalogEntry> catalog();

/// Looks an entry up by id ("log3", "log4", "recip4", "harmonic4",
/// "alt-harmonic", "inv-square4"); std::nullopt when unknown.
std::optional<CatalogEntry> find_entry(std::string_view id);

/// log(3^{n-1} Gamma(n + p/3) / Gamma(1 + p/3)) = sum_{k=1}^{n-1} log(3k + p).
/// This is the progression sum of the log3 family with the first term
/// dropped; the catalog's t_plus keeps the k = 0 term.
double log3_progression_from_one(int p, std::int64_t n);

/// H_{2n} - H_n, which equals sum_{k=1}^{2n} (-1)^{k+1}/k.
double alternating_harmonic_even(std::int64_t n);

/// Truncated Catalan series sum_{k<K} (1/(4k+1)^2 - 1/(4k+3)^2).
double catalan_series(std::int64_t K);

/// T_1(inf) - T_3(inf) of the inverse-square family, evaluated with trigamma.
double inverse_square_limit();

enum class BinomialWeight {
  One,              ///< h(k) = 1
  ReciprocalShift,  ///< h(k) = 1/(k+1)
};

/// Closed form of sum_k C(m, qk+p) h(qk+p), derived through T_p = S_p and the
/// roots-of-unity form of g_0.
double binomial_progression_sum(int m, int q, int p, BinomialWeight h);

/// The same quantity by direct summation over the binomial row.
double binomial_progression_brute(int m, int q, int p, BinomialWeight h);

/// Generalized binomial coefficient z (z-1) ... (z-k+1) / k!.
Complex generalized_binomial(Complex z, std::int64_t k);

/// sum_{k=0}^{n} (-1)^k C(z, k), checked against (-1)^n C(z-1, n).
/// Throws InconsistencyError when the two disagree beyond 1e-9 (relative).
Complex alternating_binomial_prefix(Complex z, std::int64_t n);

/// sum_{k<n} C(z, 2k+1), checked against
/// (1/2) sum_{k<=2n} C(z, k) - (1/2) C(z-1, 2n).
Complex odd_binomial_prefix(Complex z, std::int64_t n);

}  // namespace persum

#endif  // PERSUM_CATALOG_HPP
