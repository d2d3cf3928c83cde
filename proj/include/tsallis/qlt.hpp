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
#include <optional>
#include <string>
#include <vector>

#include "tsallis/qgt.hpp"
#include "tsallis/spectrum.hpp"

namespace tsallis {

/// rho'_alpha ~ [alpha - H]_+^(1/(1-q)), 0 < q < 1. Finite rank.
struct CutState {
  double alpha = 0.0;
  double q = 0.0;
  double zeta_prime = 0.0;
  double log_zeta_prime = 0.0;
  /// Probability of one eigenvector of each level below alpha.
  std::vector<double> weights;
  std::vector<std::uint64_t> multiplicities;
  std::uint64_t rank = 0;
  double trace_rho_q = 1.0;
  /// sum_n m_n (eps_n - eps_0) w_n^q / Tr rho^q.
  double excitation = 0.0;
  double ground_energy = 0.0;
  bool on_plateau = false;  ///< only the ground level is occupied
};

/// sum over eps_n < alpha of m_n (alpha - eps_n)^(x/(1-q)); 0 if alpha <= eps_0.
double f_alpha_plus(const Spectrum& s, double q, double alpha, double x);

CutState cut_state(const Spectrum& s, double q, double alpha);

/// U from the escort sum, S = k_B (Tr rho^q - 1)/(1-q), F = U - T S.
/// U_alt is alpha - zeta'^(1-q)/Tr rho^q.
Observables observables_cut(const CutState& cs, const QParams& p);

/// beta'_q(alpha) = f(q)^2 / ((1-q) f(1)^(1+q)).
double beta_prime_of_alpha(const Spectrum& s, double q, double alpha);

/// beta'_q(eps_m) = m^(1-q) / ((1-q)(eps_m - eps_0)).
double ground_threshold(const Spectrum& s, double q);

/// F on the trial family; on (eps_0, eps_m] this is the plateau value.
double cut_free_energy(const Spectrum& s, const QParams& p, double alpha);

struct BoundCheck {
  double value = 0.0;
  double bound = 0.0;
  bool ok = false;
};

/// U(rho'_alpha) <= (1/N) sum_{n<N} eps_n with N = count_below(alpha).
BoundCheck energy_upper_bound_check(const Spectrum& s, double q, double alpha);

struct EntropyBoundCheck {
  double S = 0.0;
  double bound = 0.0;         ///< k_B/(1-q) * N^(1-q)
  double envelope = 0.0;      ///< K (alpha - eps_0)^((1-q)/(q_c-1)), NaN if not applicable
  double gamma = 0.0;         ///< eps_n - eps_0 >= gamma n^(q_c-1) fit constant
  bool condition_met = false; ///< q + q_c > 2
  bool ok = false;
};

/// Entropy bound of the cut state. `gamma` <= 0 means: fit it from the
/// spectrum as the smallest (eps_n - eps_0)/n^(q_c-1) over the cached levels.
EntropyBoundCheck entropy_bound_check(const Spectrum& s, double q, double alpha, double qc,
                                      double k_B = 1.0, double gamma = 0.0);

enum class MinimumType { interior, ground_plateau, breakpoint };

const char* to_string(MinimumType t) noexcept;

struct LocalMinimum {
  double alpha = 0.0;
  double F = 0.0;
  double U = 0.0;
  double S = 0.0;
  MinimumType type = MinimumType::interior;
};

struct LandscapeOptions {
  /// Upper end of the scan; <= 0 picks a default from beta and the spectrum.
  double alpha_max = 0.0;
  /// Samples per interval between consecutive eigenvalues.
  int grid = 64;
  /// Stop after this many increasing intervals with beta' < beta/10.
  int early_stop_intervals = 3;
  /// Minima closer than this in F are reported as degenerate.
  double degeneracy_tol = 1e-10;
};

struct LandscapeReport {
  std::vector<double> alpha_grid;
  std::vector<double> free_energy;
  std::vector<LocalMinimum> minima;  ///< sorted by F
  std::vector<double> breakpoints;   ///< eigenvalues inside the scanned range
  std::size_t global_min = 0;        ///< index into minima
  bool degenerate = false;
  double alpha_max = 0.0;
  bool stopped_early = false;
  /// F still decreasing at the end of the scan.
  bool descending_at_alpha_max = false;
};

double default_alpha_max(const Spectrum& s, const QParams& p);

/// Scans F(alpha) for 0 < q < 1 and reports every local minimum.
LandscapeReport landscape(const Spectrum& s, const QParams& p, const LandscapeOptions& opt = {});

/// Closed-form F_{1/2} of rho'_alpha for H = diag(-mu, mu), k_B = 1.
double two_level_closed_form(double mu, double beta, double alpha);

}  // namespace tsallis
