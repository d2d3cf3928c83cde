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

#include <Eigen/Dense>
#include <cstdint>
#include <functional>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "tsallis/spectrum.hpp"

namespace tsallis {

using CMatrix = Eigen::MatrixXcd;

inline constexpr int kMaxLabDimension = 16;

/// Hermitian, positive, unit-trace matrix of dimension <= 16.
class DensityMatrix {
 public:
  /// Validates: Hermitian to 1e-12, eigenvalues >= -1e-12, trace 1 within 1e-12.
  explicit DensityMatrix(CMatrix rho);
  static DensityMatrix diagonal(std::span<const double> weights);

  const CMatrix& matrix() const noexcept { return rho_; }
  int dim() const noexcept { return static_cast<int>(rho_.rows()); }
  /// Eigenvalues (ascending, clamped at 0) and eigenvectors.
  const Eigen::VectorXd& eigenvalues() const noexcept { return evals_; }
  const CMatrix& eigenvectors() const noexcept { return evecs_; }
  /// rho^x by spectral calculus with 0^x := 0.
  CMatrix power(double x) const;

 private:
  CMatrix rho_;
  Eigen::VectorXd evals_;
  CMatrix evecs_;
};

/// Diagonal Hamiltonian in the basis psi_n, entries ascending, not constant.
class HamiltonianMatrix {
 public:
  explicit HamiltonianMatrix(std::vector<double> diagonal);
  const std::vector<double>& diagonal() const noexcept { return eps_; }
  int dim() const noexcept { return static_cast<int>(eps_.size()); }
  double ground_energy() const noexcept { return eps_.front(); }

 private:
  std::vector<double> eps_;
};

/// Normalised G G^dagger with G complex Gaussian (mt19937_64 seeded).
DensityMatrix random_density_matrix(int dim, std::uint64_t seed);

struct DmObservables {
  double S = 0.0;
  double U = 0.0;
  double trace_rho_q = 0.0;
  double trace_rho_q_H = 0.0;
};

DmObservables dm_observables(const DensityMatrix& rho, const HamiltonianMatrix& H, double q,
                             double k_B = 1.0);

/// Tr rho^q H - T S_q(rho); T may be negative.
double g_functional(const DensityMatrix& rho, const HamiltonianMatrix& H, double q, double T,
                    double k_B = 1.0);

enum class NormVariant { shift_plus, cutoff };

/// sum_n w_n ||A psi_n||^2 with w_n = alpha + eps_n or [alpha - eps_n]_+.
double alpha_norm_sq(const CMatrix& A, const HamiltonianMatrix& H, double alpha,
                     NormVariant variant);

/// Scalar convex function with its derivative.
struct ConvexFunction {
  std::string name;
  std::function<double(double)> f;
  std::function<double(double)> df;
  /// Spectra of A and B must lie inside [lo, hi].
  double lo = -std::numeric_limits<double>::infinity();
  double hi = std::numeric_limits<double>::infinity();
};

ConvexFunction square_function();
ConvexFunction abs_function();
/// (q/2)(x - x^2) - (x - x^q)/(q-1), convex on [0, 1] for 0 < q <= 2.
ConvexFunction klein_power_function(double q);

struct KleinGap {
  double gap = 0.0;       ///< Tr W (f(A) - f(B) - (A - B) f'(B)), matrix form
  double termwise = 0.0;  ///< same quantity as a sum of convexity remainders
  double min_term = 0.0;  ///< smallest weighted remainder
};

/// `B` and `W` are diagonal (given by their diagonals). Entries with zero
/// weight are skipped, so f'(B) only has to exist where W > 0.
KleinGap klein_gap(const CMatrix& A, std::span<const double> B, const ConvexFunction& f,
                   std::span<const double> W);
/// Matrix overload; rejects non-diagonal B or W.
KleinGap klein_gap(const CMatrix& A, const CMatrix& B, const ConvexFunction& f, const CMatrix& W);

struct ConvexityPrecheck {
  double min_second_difference = 0.0;
  bool ok = false;
};

/// Second differences of klein_power_function(q) on a uniform grid of [0, 1].
ConvexityPrecheck convexity_precheck(double q, int points = 1000);

struct QuadraticBound {
  double lhs = 0.0;  ///< G(rho) - G(trial)
  double rhs = 0.0;
  double margin = 0.0;  ///< lhs - rhs
  double norm_sq = 0.0;
  double extra_rho_q_H_alpha = 0.0;  ///< Tr rho^q H_alpha (cutoff bound only)
  double extra_partial_trace = 0.0;  ///< q zeta'^(1-q) (1 - Tr_alpha rho)
  double temperature = 0.0;
  ConvexityPrecheck precheck;
  bool ok = false;
};

/// Diagonal of rho_alpha ~ (alpha + H)^(-1/(q-1)).
std::vector<double> shifted_trial_weights(const HamiltonianMatrix& H, double q, double alpha);
/// Diagonal of rho'_alpha ~ [alpha - H]_+^(1/(1-q)).
std::vector<double> cutoff_trial_weights(const HamiltonianMatrix& H, double q, double alpha);

/// q in (1, 2], T = alpha (q-1)/k_B, alpha + eps_0 > 0.
QuadraticBound verify_bound_qgt(const DensityMatrix& rho, const HamiltonianMatrix& H, double q,
                                double alpha, double tol = 1e-9, double k_B = 1.0);
/// q in (0, 1), T = alpha (1-q)/k_B, alpha > eps_0.
QuadraticBound verify_bound_qlt(const DensityMatrix& rho, const HamiltonianMatrix& H, double q,
                                double alpha, double tol = 1e-9, double k_B = 1.0);

enum class TraceFamily {
  shift_plus,  ///< sum m (alpha + eps)^(x/(1-q)), q > 1
  cutoff,      ///< sum over eps < alpha of m (alpha - eps)^(x/(1-q)), q < 1
};

/// ln f((x1+x2)/2) - (ln f(x1) + ln f(x2))/2. Exactly 0 when a single level
/// contributes. Divergent or empty sums are domain errors.
double log_convexity_gap(const Spectrum& s, TraceFamily family, double q, double alpha, double x1,
                         double x2);
/// Same on a raw level list, which may hold a single level.
double log_convexity_gap(std::span<const Level> levels, TraceFamily family, double q, double alpha,
                         double x1, double x2);

}  // namespace tsallis
