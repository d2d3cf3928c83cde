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

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "tsallis/spectrum.hpp"

namespace tsallis {

/// Entropic parameter, inverse temperature and Boltzmann constant.
struct QParams {
  double q = 1.5;
  double beta = 1.0;
  double k_B = 1.0;

  double temperature() const { return 1.0 / (k_B * beta); }
};

/// Rejects q == 1, q <= 0, non-positive beta or k_B.
void validate(const QParams& p);

/// k_B (1 - sum_i w_i^q)/(q-1) for a probability vector (0^q := 0).
double entropy_of_weights(std::span<const double> w, double q, double k_B = 1.0);

/// Free-energy triple of a state, plus the escort energy evaluated along the
/// second formula path and their relative disagreement.
struct Observables {
  double U = 0.0;
  double S = 0.0;
  double F = 0.0;
  double U_alt = 0.0;
  double U_mismatch = 0.0;
};

/// rho_alpha ~ (alpha + H)^(-1/(q-1)), q > 1.
///
/// `weights[j]` is the probability of one eigenvector of level j; weights
/// cover the levels summed term by term (all of them for finite spectra).
struct TrialState {
  double alpha = 0.0;
  double q = 0.0;
  double zeta = 0.0;
  double log_zeta = 0.0;
  std::vector<double> weights;
  std::vector<std::uint64_t> multiplicities;
  double trace_rho_q = 0.0;
  /// Escort energy sum_n m_n (eps_n - eps_0) w_n^q / Tr rho^q.
  double excitation = 0.0;
  std::size_t truncation_index = 0;
  /// Worst relative tail bound over the spectral sums used.
  double tail_bound = 0.0;
  double ground_energy = 0.0;
};

struct QgtOptions {
  /// Allow 2 < q < q_c in beta_of_alpha/alpha_of_beta (sums converge, but the
  /// equilibrium theory is only established for q <= 2).
  bool allow_unverified_regime = false;
};

/// sum_n m_n (alpha + eps_n)^(x/(1-q)).
double f_alpha(const Spectrum& s, double q, double alpha, double x);
/// log of f_alpha, safe against overflow.
double log_f_alpha(const Spectrum& s, double q, double alpha, double x);

TrialState trial_state(const Spectrum& s, double q, double alpha, const QgtOptions& opt = {});

/// U from the escort sum, S = k_B (1 - Tr rho^q)/(q-1), F = U - T S. U_alt is
/// zeta^(1-q)/Tr rho^q - alpha.
Observables observables(const TrialState& st, const QParams& p);

/// beta_q(alpha) = f(q)^2 / ((q-1) f(1)^(1+q)).
double beta_of_alpha(const Spectrum& s, double q, double alpha, const QgtOptions& opt = {});

/// Inverse of beta_of_alpha; monotone bracketing then TOMS 748 in log(alpha + eps_0).
double alpha_of_beta(const Spectrum& s, double q, double beta, const QgtOptions& opt = {});

struct Equilibrium {
  TrialState state;
  Observables obs;
  double beta = 0.0;        ///< requested
  double beta_check = 0.0;  ///< beta_of_alpha at the solution
};

/// Minimiser of the free energy over the trial family. Needs q in (1, 2]
/// and, on infinite spectra, q < q_c; otherwise unsupported_regime.
Equilibrium equilibrium(const Spectrum& s, const QParams& p);

}  // namespace tsallis
