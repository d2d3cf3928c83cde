// Copyright 2026 The tsallis Authors
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

#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "tsallis/spectrum.hpp"

namespace tsallis {

/// One checked instance; kept for the worst cases of a suite.
struct SuiteRecord {
  std::string operation;
  std::uint64_t seed = 0;
  int dim = 0;
  double q = 0.0;
  double alpha = 0.0;
  double lhs = 0.0;
  double rhs = 0.0;
  double margin = 0.0;  ///< >= 0 means the check passed
};

struct SuiteReport {
  std::string name;
  std::uint64_t seed = 0;
  std::size_t trials = 0;
  std::size_t failures = 0;
  std::size_t skipped = 0;
  double worst_margin = 0.0;
  std::vector<SuiteRecord> worst;  ///< a few smallest margins
  std::map<std::string, double> diagnostics;
  bool ok = true;
};

struct SuiteOptions {
  std::uint64_t seed = 1;
  std::size_t trials = 1000;
  int dim_min = 2;
  int dim_max = 6;
  /// Empty means the suite default.
  std::vector<double> qs;
  double tol = 1e-9;
};

/// Names accepted by run_suite: klein, bound-qgt, bound-qlt, log-convexity,
/// cross-module, monotonicity, roundtrip, stability.
std::vector<std::string> suite_names();
SuiteReport run_suite(const std::string& name, const SuiteOptions& opt = {});

/// Klein's inequality with f in {x^2, |x|, power function} and weights
/// alpha + H or [alpha - H]_+; trials per (dim, q).
SuiteReport run_klein_suite(const SuiteOptions& opt);
/// Quadratic lower bounds for random density matrices, trials per (dim, q).
/// Also checks equality at the trial state.
SuiteReport run_bound_suite(const SuiteOptions& opt, bool cutoff);
/// Midpoint log-convexity of both trace families.
SuiteReport run_log_convexity_suite(const SuiteOptions& opt);
/// Diagonal density matrices versus the trial-state formulas.
SuiteReport run_cross_module_suite(const SuiteOptions& opt);
/// Tr rho^q and beta_q decreasing (q > 1), Tr rho'^q nondecreasing (q < 1).
SuiteReport run_monotonicity_suite(const SuiteOptions& opt);
/// alpha <-> beta inversion and near-ground asymptote.
SuiteReport run_roundtrip_suite(const SuiteOptions& opt);
/// Energy and entropy upper bounds, growth condition, partial averages.
SuiteReport run_stability_suite(const SuiteOptions& opt);

/// Random finite spectrum with at most `max_states` repeated eigenvalues.
Spectrum random_finite_spectrum(std::mt19937_64& rng, std::uint64_t max_states,
                                bool multiplicities = true);

}  // namespace tsallis
