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

#ifndef PERSUM_VERIFY_HPP
#define PERSUM_VERIFY_HPP

// Verification suites: each one sweeps an identity over a grid and compares
// a conversion formula, closed form or generating function with a
// brute-force oracle. The CLI `verify` command runs them.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "persum/numeric.hpp"

namespace persum {

enum class ErrorMode {
  Absolute,  ///< |a - b|
  Scaled,    ///< |a - b| / max(1, |b|)
  Relative,  ///< |a - b| / |b|, absolute when b == 0
};

struct SuiteResult {
  std::string name;
  std::string description;
  ErrorMode mode = ErrorMode::Scaled;
  double tolerance = 0.0;
  std::int64_t cases = 0;
  double max_abs_err = 0.0;
  double max_rel_err = 0.0;
  /// Largest error in the suite's own ErrorMode; compared with tolerance.
  double max_err = 0.0;
  std::string worst_case;
  bool passed = true;
  /// Set when the suite threw instead of completing.
  std::string failure;

  /// Records one comparison; `label` identifies the case when it is the
  /// worst so far.
  void observe(Complex candidate, Complex reference, const std::string& label);
  /// Records a boolean check that has no numeric error.
  void require(bool ok, const std::string& label);
};

struct VerifyOptions {
  /// Suites to run; empty means all, in the canonical order.
  std::vector<std::string> suites;
  /// Largest modulus for the Gauss-formula sweep.
  int qmax = 12;
  /// Replaces every suite's built-in tolerance when set.
  std::optional<double> tolerance;
  /// Test hook: perturbs one closed form by 1e-6 so that a suite fails.
  bool inject_fault = false;
  /// Run suites concurrently. Results are returned in canonical order.
  bool parallel = true;
};

/// Canonical suite order.
std::vector<std::string> suite_names();

/// Throws InvalidParameter for an unknown suite name.
std::vector<SuiteResult> run_verification(const VerifyOptions& options);

}  // namespace persum

#endif  // PERSUM_VERIFY_HPP
