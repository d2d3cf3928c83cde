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

#include <cmath>
#include <cstddef>

#include "tsallis/spectrum.hpp"

namespace tsallis {

/// A positive spectral sum held in log-scaled form:
/// value = exp(log_ref) * scaled. `log_ref` is the log of the largest term,
/// so `scaled` is O(1) regardless of how extreme the exponents are.
struct SpectralSum {
  double log_ref = 0.0;
  double scaled = 0.0;
  /// Upper bound on |true - computed|, in the same scaled units.
  double scaled_tail_bound = 0.0;
  /// Levels summed term by term (a prefix of the spectrum).
  std::size_t direct_levels = 0;

  double log_value() const { return log_ref + std::log(scaled); }
  double value() const { return std::exp(log_value()); }
  double relative_tail() const { return scaled > 0 ? scaled_tail_bound / scaled : 0.0; }
  bool certified(double rel_tol = 1e-12) const { return relative_tail() <= rel_tol; }
};

/// Which per-level weight multiplies each term.
enum class Moment {
  count,       ///< m_n
  excitation,  ///< m_n (eps_n - eps_0)
  excited,     ///< m_n for eps_n > eps_0, the ground level dropped
};

/// sum_n m_n g_n (shift + eps_n)^(-exponent).
///
/// Finite spectra: any real exponent. Infinite spectra: the exponent must
/// exceed 1/(q_c - 1) (plus one for the excitation moment) or the sum
/// diverges, which is reported as ErrorCode::divergence. Tails are closed by
/// Euler-Maclaurin (harmonic), a Weyl-law bound (box) or geometric majorants
/// (geometric, factorial).
SpectralSum shifted_power_sum(const Spectrum& s, double shift, double exponent,
                              Moment moment = Moment::count);

/// sum over eps_n < alpha of m_n g_n (alpha - eps_n)^exponent, exponent >= 0.
/// Always a finite sum; zero terms when alpha <= eps_0 (scaled == 0).
SpectralSum cutoff_power_sum(const Spectrum& s, double alpha, double exponent,
                             Moment moment = Moment::count);

}  // namespace tsallis
