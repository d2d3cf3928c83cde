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

#include "tsallis/convexity_lab.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include "tsallis/error.hpp"
#include "tsallis/power_sum.hpp"
#include "tsallis/qgt.hpp"

namespace tsallis {

namespace {

constexpr double kHermitianTol = 1e-12;
constexpr double kNegativeEigenTol = 1e-12;
// Eigenvalues this small are roundoff from an exact zero (matters for x^q, q < 1).
constexpr double kZeroEigen = 1e-14;

double pow0(double x, double e) { return x > 0 ? std::pow(x, e) : 0.0; }

void check_dim(int dim) {
  require(dim >= 1 && dim <= kMaxLabDimension, ErrorCode::invalid_argument,
          "matrix dimension must be in [1, 16]");
}

bool is_diagonal(const CMatrix& m, double tol) {
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      if (i != j && std::abs(m(i, j)) > tol) return false;
  return true;
}

double log_sum_exp(const std::vector<double>& logs) {
  const double ref = *std::max_element(logs.begin(), logs.end());
  double s = 0.0;
  for (double l : logs) s += std::exp(l - ref);
  return ref + std::log(s);
}

std::vector<double> normalise_logs(const std::vector<double>& logs) {
  const double lz = log_sum_exp(logs);
  std::vector<double> w(logs.size());
  for (std::size_t i = 0; i < logs.size(); ++i) w[i] = std::exp(logs[i] - lz);
  return w;
}

}  // namespace

DensityMatrix::DensityMatrix(CMatrix rho) {
  require(rho.rows() == rho.cols(), ErrorCode::invariant, "density matrix must be square");
  check_dim(static_cast<int>(rho.rows()));
  require((rho - rho.adjoint()).cwiseAbs().maxCoeff() <= kHermitianTol, ErrorCode::invariant,
          "density matrix is not Hermitian");
  rho_ = 0.5 * (rho + rho.adjoint());
  const auto n = rho_.rows();
  if (is_diagonal(rho_, 0.0)) {
    // Exact spectral data for diagonal input.
    std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
    for (Eigen::Index i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = i;
    std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) {
      return rho_(a, a).real() < rho_(b, b).real();
    });
    evals_.resize(n);
    evecs_ = CMatrix::Zero(n, n);
    for (Eigen::Index k = 0; k < n; ++k) {
      const auto i = order[static_cast<std::size_t>(k)];
      evals_(k) = rho_(i, i).real();
      evecs_(i, k) = 1.0;
    }
  } else {
    Eigen::SelfAdjointEigenSolver<CMatrix> es(rho_);
    require(es.info() == Eigen::Success, ErrorCode::internal, "eigendecomposition failed");
    evals_ = es.eigenvalues();
    evecs_ = es.eigenvectors();
    for (Eigen::Index k = 0; k < n; ++k)
      if (std::abs(evals_(k)) <= kZeroEigen) evals_(k) = 0.0;
  }
  require(evals_.minCoeff() >= -kNegativeEigenTol, ErrorCode::invariant,
          "density matrix has a negative eigenvalue");
  evals_ = evals_.cwiseMax(0.0);
  require(std::abs(rho_.trace().real() - 1.0) <= 1e-12, ErrorCode::invariant,
          "density matrix trace differs from 1");
}

DensityMatrix DensityMatrix::diagonal(std::span<const double> weights) {
  CMatrix m = CMatrix::Zero(static_cast<Eigen::Index>(weights.size()),
                            static_cast<Eigen::Index>(weights.size()));
  for (std::size_t i = 0; i < weights.size(); ++i)
    m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)) = weights[i];
  return DensityMatrix(std::move(m));
}

CMatrix DensityMatrix::power(double x) const {
  Eigen::VectorXd p(evals_.size());
  for (Eigen::Index k = 0; k < evals_.size(); ++k) p(k) = pow0(evals_(k), x);
  return evecs_ * p.asDiagonal() * evecs_.adjoint();
}

HamiltonianMatrix::HamiltonianMatrix(std::vector<double> diagonal) : eps_(std::move(diagonal)) {
  check_dim(static_cast<int>(eps_.size()));
  require(eps_.size() >= 2, ErrorCode::invalid_argument, "Hamiltonian needs dimension >= 2");
  for (std::size_t i = 0; i < eps_.size(); ++i) {
    require(std::isfinite(eps_[i]), ErrorCode::invalid_argument, "Hamiltonian entries must be finite");
    if (i > 0)
      require(eps_[i] >= eps_[i - 1], ErrorCode::invalid_argument,
              "Hamiltonian diagonal must be ascending");
  }
  require(eps_.back() > eps_.front(), ErrorCode::invalid_argument,
          "Hamiltonian must not be a multiple of the identity");
}

DensityMatrix random_density_matrix(int dim, std::uint64_t seed) {
  require(dim >= 2 && dim <= kMaxLabDimension, ErrorCode::invalid_argument,
          "random density matrix needs dimension in [2, 16]");
  std::mt19937_64 gen(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  CMatrix g(dim, dim);
  for (int j = 0; j < dim; ++j)
    for (int i = 0; i < dim; ++i) {
      const double re = normal(gen);
      const double im = normal(gen);
      g(i, j) = {re, im};
    }
  CMatrix rho = g * g.adjoint();
  rho /= rho.trace().real();
  rho = 0.5 * (rho + rho.adjoint());
  return DensityMatrix(std::move(rho));
}

DmObservables dm_observables(const DensityMatrix& rho, const HamiltonianMatrix& H, double q,
                             double k_B) {
  require(q > 0 && q != 1.0, ErrorCode::invalid_argument, "q must be positive and != 1");
  require(rho.dim() == H.dim(), ErrorCode::invalid_argument, "dimension mismatch");
  DmObservables o;
  for (Eigen::Index k = 0; k < rho.eigenvalues().size(); ++k)
    o.trace_rho_q += pow0(rho.eigenvalues()(k), q);
  const CMatrix p = rho.power(q);
  for (int n = 0; n < H.dim(); ++n) o.trace_rho_q_H += p(n, n).real() * H.diagonal()[static_cast<std::size_t>(n)];
  o.S = k_B * (1.0 - o.trace_rho_q) / (q - 1.0);
  o.U = o.trace_rho_q_H / o.trace_rho_q;
  return o;
}

double g_functional(const DensityMatrix& rho, const HamiltonianMatrix& H, double q, double T,
                    double k_B) {
  const DmObservables o = dm_observables(rho, H, q, k_B);
  return o.trace_rho_q_H - T * o.S;
}

double alpha_norm_sq(const CMatrix& A, const HamiltonianMatrix& H, double alpha,
                     NormVariant variant) {
  require(A.rows() == H.dim() && A.cols() == H.dim(), ErrorCode::invalid_argument,
          "dimension mismatch");
  if (variant == NormVariant::shift_plus)
    require(alpha + H.ground_energy() > 0, ErrorCode::domain,
            "shift-plus norm needs alpha + eps_0 > 0");
  double s = 0.0;
  for (int n = 0; n < H.dim(); ++n) {
    const double e = H.diagonal()[static_cast<std::size_t>(n)];
    const double w = variant == NormVariant::shift_plus ? alpha + e : std::max(alpha - e, 0.0);
    if (w > 0) s += w * A.col(n).squaredNorm();
  }
  return s;
}

ConvexFunction square_function() {
  return {"square", [](double x) { return x * x; }, [](double x) { return 2.0 * x; }};
}

ConvexFunction abs_function() {
  return {"abs", [](double x) { return std::abs(x); },
          [](double x) { return x > 0 ? 1.0 : (x < 0 ? -1.0 : 0.0); }};
}

ConvexFunction klein_power_function(double q) {
  require(q > 0 && q <= 2 && q != 1.0, ErrorCode::invalid_argument,
          "power function needs q in (0, 2], q != 1");
  ConvexFunction f;
  f.name = "power";
  f.f = [q](double x) { return 0.5 * q * (x - x * x) - (x - pow0(x, q)) / (q - 1.0); };
  f.df = [q](double x) {
    const double xq1 = x > 0 ? std::pow(x, q - 1.0) : (q < 1 ? HUGE_VAL : 0.0);
    return 0.5 * q * (1.0 - 2.0 * x) - (1.0 - q * xq1) / (q - 1.0);
  };
  f.lo = 0.0;
  f.hi = 1.0;
  return f;
}

KleinGap klein_gap(const CMatrix& A, std::span<const double> B, const ConvexFunction& f,
                   std::span<const double> W) {
  const auto n = A.rows();
  require(A.cols() == n && static_cast<Eigen::Index>(B.size()) == n &&
              static_cast<Eigen::Index>(W.size()) == n,
          ErrorCode::invalid_argument, "klein_gap: dimension mismatch");
  require((A - A.adjoint()).cwiseAbs().maxCoeff() <= 1e-10, ErrorCode::invalid_argument,
          "klein_gap: A must be Hermitian");
  const double slack = 1e-12;
  for (std::size_t i = 0; i < B.size(); ++i) {
    require(W[i] >= 0, ErrorCode::invalid_argument, "klein_gap: weights must be nonnegative");
    require(B[i] >= f.lo - slack && B[i] <= f.hi + slack, ErrorCode::domain,
            "klein_gap: B leaves the convexity domain of f");
  }
  const CMatrix Ah = 0.5 * (A + A.adjoint());
  Eigen::SelfAdjointEigenSolver<CMatrix> es(Ah);
  require(es.info() == Eigen::Success, ErrorCode::internal, "eigendecomposition failed");
  Eigen::VectorXd lam = es.eigenvalues();
  const CMatrix& V = es.eigenvectors();
  for (Eigen::Index k = 0; k < n; ++k) {
    require(lam(k) >= f.lo - slack && lam(k) <= f.hi + slack, ErrorCode::domain,
            "klein_gap: spectrum of A leaves the convexity domain of f");
    lam(k) = std::clamp(lam(k), f.lo, f.hi);
  }

  Eigen::VectorXd flam(n);
  for (Eigen::Index k = 0; k < n; ++k) flam(k) = f.f(lam(k));
  const CMatrix fA = V * flam.asDiagonal() * V.adjoint();

  KleinGap out;
  out.min_term = HUGE_VAL;
  for (Eigen::Index i = 0; i < n; ++i) {
    const double w = W[static_cast<std::size_t>(i)];
    if (w == 0) continue;
    const double b = std::clamp(B[static_cast<std::size_t>(i)], f.lo, f.hi);
    const double fb = f.f(b);
    const double dfb = f.df(b);
    // Diagonal of f(A) - f(B) - (A - B) f'(B).
    out.gap += w * (fA(i, i).real() - fb - (Ah(i, i).real() - b) * dfb);
    for (Eigen::Index k = 0; k < n; ++k) {
      const double r = w * std::norm(V(i, k)) * (flam(k) - fb - (lam(k) - b) * dfb);
      out.termwise += r;
      out.min_term = std::min(out.min_term, r);
    }
  }
  if (out.min_term == HUGE_VAL) out.min_term = 0.0;
  return out;
}

KleinGap klein_gap(const CMatrix& A, const CMatrix& B, const ConvexFunction& f, const CMatrix& W) {
  require(B.rows() == B.cols() && W.rows() == W.cols(), ErrorCode::invalid_argument,
          "klein_gap: B and W must be square");
  require(is_diagonal(B, 1e-14), ErrorCode::invalid_argument,
          "klein_gap: B must be diagonal in the eigenbasis of H");
  require(is_diagonal(W, 1e-14), ErrorCode::invalid_argument, "klein_gap: W must be diagonal");
  std::vector<double> b(static_cast<std::size_t>(B.rows())), w(static_cast<std::size_t>(W.rows()));
  for (Eigen::Index i = 0; i < B.rows(); ++i) b[static_cast<std::size_t>(i)] = B(i, i).real();
  for (Eigen::Index i = 0; i < W.rows(); ++i) w[static_cast<std::size_t>(i)] = W(i, i).real();
  return klein_gap(A, b, f, w);
}

ConvexityPrecheck convexity_precheck(double q, int points) {
  require(points >= 3, ErrorCode::invalid_argument, "precheck needs >= 3 points");
  const ConvexFunction f = klein_power_function(q);
  const double h = 1.0 / (points - 1);
  ConvexityPrecheck c;
  c.min_second_difference = HUGE_VAL;
  for (int i = 1; i + 1 < points; ++i) {
    const double x = i * h;
    c.min_second_difference =
        std::min(c.min_second_difference, f.f(x - h) - 2.0 * f.f(x) + f.f(x + h));
  }
  c.ok = c.min_second_difference >= -1e-13;
  return c;
}

std::vector<double> shifted_trial_weights(const HamiltonianMatrix& H, double q, double alpha) {
  require(q > 1, ErrorCode::invalid_argument, "shifted trial state needs q > 1");
  require(alpha + H.ground_energy() > 0, ErrorCode::domain, "trial state needs alpha + eps_0 > 0");
  std::vector<double> logs;
  for (double e : H.diagonal()) logs.push_back(-std::log(alpha + e) / (q - 1.0));
  return normalise_logs(logs);
}

std::vector<double> cutoff_trial_weights(const HamiltonianMatrix& H, double q, double alpha) {
  require(q > 0 && q < 1, ErrorCode::invalid_argument, "cut trial state needs 0 < q < 1");
  require(alpha > H.ground_energy(), ErrorCode::domain, "cut trial state needs alpha > eps_0");
  std::vector<double> logs;
  for (double e : H.diagonal())
    if (e < alpha) logs.push_back(std::log(alpha - e) / (1.0 - q));
  std::vector<double> w = normalise_logs(logs);
  w.resize(H.diagonal().size(), 0.0);
  return w;
}

QuadraticBound verify_bound_qgt(const DensityMatrix& rho, const HamiltonianMatrix& H, double q,
                                double alpha, double tol, double k_B) {
  require(q > 1 && q <= 2, ErrorCode::invalid_argument, "shifted bound needs q in (1, 2]");
  require(rho.dim() == H.dim(), ErrorCode::invalid_argument, "dimension mismatch");
  const std::vector<double> w = shifted_trial_weights(H, q, alpha);
  const DensityMatrix trial = DensityMatrix::diagonal(w);
  QuadraticBound b;
  b.temperature = alpha * (q - 1.0) / k_B;
  b.lhs = g_functional(rho, H, q, b.temperature, k_B) - g_functional(trial, H, q, b.temperature, k_B);
  b.norm_sq = alpha_norm_sq(rho.matrix() - trial.matrix(), H, alpha, NormVariant::shift_plus);
  b.rhs = 0.5 * q * (q - 1.0) * b.norm_sq;
  b.margin = b.lhs - b.rhs;
  b.precheck = convexity_precheck(q);
  b.ok = b.margin >= -tol && b.precheck.ok;
  return b;
}

QuadraticBound verify_bound_qlt(const DensityMatrix& rho, const HamiltonianMatrix& H, double q,
                                double alpha, double tol, double k_B) {
  require(q > 0 && q < 1, ErrorCode::invalid_argument, "cutoff bound needs q in (0, 1)");
  require(rho.dim() == H.dim(), ErrorCode::invalid_argument, "dimension mismatch");
  const std::vector<double> w = cutoff_trial_weights(H, q, alpha);
  const DensityMatrix trial = DensityMatrix::diagonal(w);
  QuadraticBound b;
  b.temperature = alpha * (1.0 - q) / k_B;
  b.lhs = g_functional(rho, H, q, b.temperature, k_B) - g_functional(trial, H, q, b.temperature, k_B);
  b.norm_sq = alpha_norm_sq(rho.matrix() - trial.matrix(), H, alpha, NormVariant::cutoff);

  const CMatrix rq = rho.power(q);
  double zeta = 0.0, partial = 0.0;
  for (int n = 0; n < H.dim(); ++n) {
    const double e = H.diagonal()[static_cast<std::size_t>(n)];
    if (e < alpha) {
      zeta += std::pow(alpha - e, 1.0 / (1.0 - q));
      partial += rho.matrix()(n, n).real();
    } else {
      b.extra_rho_q_H_alpha += rq(n, n).real() * (e - alpha);
    }
  }
  b.extra_partial_trace = q * std::pow(zeta, 1.0 - q) * (1.0 - partial);
  b.rhs = 0.5 * q * (1.0 - q) * b.norm_sq + b.extra_rho_q_H_alpha + b.extra_partial_trace;
  b.margin = b.lhs - b.rhs;
  b.precheck = convexity_precheck(q);
  b.ok = b.margin >= -tol && b.precheck.ok && b.extra_rho_q_H_alpha >= -1e-12 &&
         b.extra_partial_trace >= -1e-12;
  return b;
}

double log_convexity_gap(std::span<const Level> levels, TraceFamily family, double q, double alpha,
                         double x1, double x2) {
  require(!levels.empty(), ErrorCode::invalid_argument, "log_convexity_gap: no levels");
  require(std::isfinite(x1) && std::isfinite(x2), ErrorCode::invalid_argument,
          "log_convexity_gap: x must be finite");
  const double k = 1.0 / (1.0 - q);
  std::vector<double> lm, lb;  // log multiplicity, log base
  if (family == TraceFamily::shift_plus) {
    require(q > 1, ErrorCode::invalid_argument, "shift-plus family needs q > 1");
    require(alpha + levels.front().energy > 0, ErrorCode::domain,
            "shift-plus family needs alpha + eps_0 > 0");
    for (const Level& l : levels) {
      lm.push_back(std::log(static_cast<double>(l.multiplicity)));
      lb.push_back(std::log(alpha + l.energy));
    }
  } else {
    require(q > 0 && q < 1, ErrorCode::invalid_argument, "cutoff family needs 0 < q < 1");
    require(x1 >= 0 && x2 >= 0, ErrorCode::domain, "cutoff family needs x >= 0");
    for (const Level& l : levels) {
      if (!(l.energy < alpha)) break;
      lm.push_back(std::log(static_cast<double>(l.multiplicity)));
      lb.push_back(std::log(alpha - l.energy));
    }
    require(!lm.empty(), ErrorCode::domain, "cutoff family is empty for alpha <= eps_0");
  }
  if (lm.size() == 1) return 0.0;  // ln f is affine in x
  // ln f(x) = (affine in x) + ln(1 + R(x)), R = sum of excited terms over the
  // ground term. The affine part has no midpoint gap, so only R is evaluated.
  auto log1p_r = [&](double x) {
    double r = 0.0;
    for (std::size_t i = 1; i < lm.size(); ++i) r += std::exp(lm[i] - lm[0] + x * k * (lb[i] - lb[0]));
    return std::log1p(r);
  };
  return log1p_r(0.5 * (x1 + x2)) - 0.5 * (log1p_r(x1) + log1p_r(x2));
}

double log_convexity_gap(const Spectrum& s, TraceFamily family, double q, double alpha, double x1,
                         double x2) {
  if (s.is_finite()) return log_convexity_gap(s.levels(), family, q, alpha, x1, x2);
  if (family == TraceFamily::cutoff) {
    (void)count_below(s, alpha);  // truncation check
    return log_convexity_gap(s.levels(), family, q, alpha, x1, x2);
  }
  require(q > 1, ErrorCode::invalid_argument, "shift-plus family needs q > 1");
  const double c = alpha + s.ground_energy();
  require(c > 0, ErrorCode::domain, "shift-plus family needs alpha + eps_0 > 0");
  const double lm0 = std::log(static_cast<double>(s.ground_multiplicity()));
  auto log1p_r = [&](double x) {
    const double e = x / (q - 1.0);
    try {
      const SpectralSum r = shifted_power_sum(s, alpha, e, Moment::excited);
      return std::log1p(std::exp(r.log_value() + e * std::log(c) - lm0));
    } catch (const Error& err) {
      if (err.code() == ErrorCode::divergence) fail(ErrorCode::domain, err.what());
      throw;
    }
  };
  return log1p_r(0.5 * (x1 + x2)) - 0.5 * (log1p_r(x1) + log1p_r(x2));
}

}  // namespace tsallis
