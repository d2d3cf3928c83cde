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

#include "tsallis/qgt.hpp"

#include <algorithm>
#include <boost/math/tools/toms748_solve.hpp>
#include <cmath>
#include <cstdint>
#include <string>

#include "tsallis/error.hpp"
#include "tsallis/power_sum.hpp"

namespace tsallis {

namespace {

void check_alpha(const Spectrum& s, double alpha) {
  require(std::isfinite(alpha), ErrorCode::invalid_argument, "alpha must be finite");
  if (!(alpha + s.ground_energy() > 0))
    fail(ErrorCode::domain, "alpha = " + std::to_string(alpha) + " must exceed -eps_0 = " +
                                std::to_string(-s.ground_energy()));
}

void check_q(const Spectrum& s, double q, const QgtOptions& opt) {
  require(std::isfinite(q) && q > 1.0, ErrorCode::invalid_argument,
          "q > 1 statistics need q > 1");
  if (q <= 2.0) return;
  if (!opt.allow_unverified_regime)
    fail(ErrorCode::unsupported_regime,
         "q = " + std::to_string(q) + " > 2 is outside the established regime");
  if (!s.is_finite() && q >= s.critical_q())
    fail(ErrorCode::divergence, "q must stay below q_c of " + s.describe());
}

double log_beta(const Spectrum& s, double q, double alpha) {
  const double k = 1.0 / (q - 1.0);
  const double l1 = shifted_power_sum(s, alpha, k).log_value();
  const double lq = shifted_power_sum(s, alpha, q * k).log_value();
  return 2.0 * lq - (1.0 + q) * l1 - std::log(q - 1.0);
}

}  // namespace

void validate(const QParams& p) {
  require(std::isfinite(p.q) && p.q > 0 && p.q != 1.0, ErrorCode::invalid_argument,
          "q must be positive and different from 1");
  require(std::isfinite(p.beta) && p.beta > 0, ErrorCode::domain, "beta must be positive");
  require(std::isfinite(p.k_B) && p.k_B > 0, ErrorCode::invalid_argument, "k_B must be positive");
}

double entropy_of_weights(std::span<const double> w, double q, double k_B) {
  require(q > 0 && q != 1.0, ErrorCode::invalid_argument, "entropy needs q > 0, q != 1");
  double tr = 0.0;
  for (double x : w) {
    require(x >= 0, ErrorCode::invalid_argument, "weights must be nonnegative");
    if (x > 0) tr += std::pow(x, q);
  }
  return k_B * (1.0 - tr) / (q - 1.0);
}

double log_f_alpha(const Spectrum& s, double q, double alpha, double x) {
  require(std::isfinite(q) && q > 1.0, ErrorCode::invalid_argument, "f_alpha needs q > 1");
  check_alpha(s, alpha);
  return shifted_power_sum(s, alpha, x / (q - 1.0)).log_value();
}

double f_alpha(const Spectrum& s, double q, double alpha, double x) {
  return std::exp(log_f_alpha(s, q, alpha, x));
}

TrialState trial_state(const Spectrum& s, double q, double alpha, const QgtOptions& opt) {
  check_q(s, q, opt);
  check_alpha(s, alpha);
  const double k = 1.0 / (q - 1.0);
  const SpectralSum s1 = shifted_power_sum(s, alpha, k);
  const SpectralSum sq = shifted_power_sum(s, alpha, q * k);
  const SpectralSum se = shifted_power_sum(s, alpha, q * k, Moment::excitation);

  TrialState st;
  st.alpha = alpha;
  st.q = q;
  st.ground_energy = s.ground_energy();
  st.log_zeta = s1.log_value();
  st.zeta = std::exp(st.log_zeta);
  const double log_fq = sq.log_value();
  st.trace_rho_q = std::exp(log_fq - q * st.log_zeta);
  st.excitation = se.scaled > 0 ? std::exp(se.log_value() - log_fq) : 0.0;
  st.tail_bound = std::max({s1.relative_tail(), sq.relative_tail(), se.relative_tail()});

  const auto levels = s.levels();
  const std::size_t n = std::min(s1.direct_levels, levels.size());
  st.truncation_index = s.cumulative_count(n);
  st.weights.resize(n);
  st.multiplicities.resize(n);
  for (std::size_t j = 0; j < n; ++j) {
    st.weights[j] = std::exp(-k * std::log(alpha + levels[j].energy) - st.log_zeta);
    st.multiplicities[j] = levels[j].multiplicity;
  }
  return st;
}

Observables observables(const TrialState& st, const QParams& p) {
  validate(p);
  require(st.q == p.q, ErrorCode::invalid_argument, "state and parameters disagree on q");
  Observables o;
  o.U = st.ground_energy + st.excitation;
  o.U_alt = std::exp((1.0 - st.q) * st.log_zeta) / st.trace_rho_q - st.alpha;
  const double scale = std::max({std::abs(o.U), std::abs(st.alpha), std::abs(st.ground_energy)});
  o.U_mismatch = scale > 0 ? std::abs(o.U - o.U_alt) / scale : 0.0;
  o.S = p.k_B * (1.0 - st.trace_rho_q) / (st.q - 1.0);
  o.F = o.U - p.temperature() * o.S;
  return o;
}

double beta_of_alpha(const Spectrum& s, double q, double alpha, const QgtOptions& opt) {
  check_q(s, q, opt);
  check_alpha(s, alpha);
  return std::exp(log_beta(s, q, alpha));
}

double alpha_of_beta(const Spectrum& s, double q, double beta, const QgtOptions& opt) {
  check_q(s, q, opt);
  require(std::isfinite(beta) && beta > 0, ErrorCode::domain, "beta must be positive");
  const double e0 = s.ground_energy();
  const double target = std::log(beta);
  // Work in u = log(alpha + eps_0); log beta_q is decreasing in u.
  auto g = [&](double u) { return log_beta(s, q, std::exp(u) - e0) - target; };

  // Both ends of beta_q behave like const / (alpha + eps_0).
  const double m = static_cast<double>(s.ground_multiplicity());
  double u0 = std::clamp((1.0 - q) * std::log(m) - std::log(q - 1.0) - target, -650.0, 650.0);
  double g0 = g(u0);
  if (g0 == 0) return std::exp(u0) - e0;
  double step = 1.0;
  double u1 = u0, g1 = g0;
  const double dir = g0 > 0 ? 1.0 : -1.0;
  for (int i = 0; i < 200; ++i) {
    u1 = std::clamp(u0 + dir * step, -700.0, 700.0);
    g1 = g(u1);
    if ((g1 > 0) != (g0 > 0) || g1 == 0) break;
    u0 = u1;
    g0 = g1;
    step *= 2.0;
    if (std::abs(u1) >= 700.0)
      fail(ErrorCode::domain, "alpha_of_beta: no bracket for beta = " + std::to_string(beta));
  }
  if (g1 == 0) return std::exp(u1) - e0;
  require((g1 > 0) != (g0 > 0), ErrorCode::internal, "alpha_of_beta: bracket search failed");

  double lo = std::min(u0, u1), hi = std::max(u0, u1);
  double glo = lo == u0 ? g0 : g1, ghi = lo == u0 ? g1 : g0;
  std::uintmax_t iters = 200;
  auto tol = [](double a, double b) { return std::abs(b - a) <= 1e-14 * std::max(1.0, std::abs(a)); };
  const auto [a, b] = boost::math::tools::toms748_solve(g, lo, hi, glo, ghi, tol, iters);
  return std::exp(0.5 * (a + b)) - e0;
}

Equilibrium equilibrium(const Spectrum& s, const QParams& p) {
  validate(p);
  if (!(p.q > 1.0 && p.q <= 2.0))
    fail(ErrorCode::unsupported_regime,
         "equilibrium over rho_alpha needs q in (1, 2]; got q = " + std::to_string(p.q));
  if (!s.is_finite() && p.q >= s.critical_q())
    fail(ErrorCode::unsupported_regime, "q = " + std::to_string(p.q) + " is not below q_c = " +
                                            std::to_string(s.critical_q()) + " of " +
                                            s.describe());
  Equilibrium e;
  e.beta = p.beta;
  const double alpha = alpha_of_beta(s, p.q, p.beta);
  e.state = trial_state(s, p.q, alpha);
  e.obs = observables(e.state, p);
  e.beta_check = beta_of_alpha(s, p.q, alpha);
  return e;
}

}  // namespace tsallis
