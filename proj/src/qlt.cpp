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

#include "tsallis/qlt.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "tsallis/error.hpp"
#include "tsallis/power_sum.hpp"

namespace tsallis {

namespace {

void check_q(double q) {
  require(std::isfinite(q) && q > 0.0 && q < 1.0, ErrorCode::invalid_argument,
          "cut states need 0 < q < 1");
}

}  // namespace

const char* to_string(MinimumType t) noexcept {
  switch (t) {
    case MinimumType::interior: return "interior";
    case MinimumType::ground_plateau: return "ground-plateau";
    case MinimumType::breakpoint: return "breakpoint";
  }
  return "unknown";
}

double f_alpha_plus(const Spectrum& s, double q, double alpha, double x) {
  check_q(q);
  require(x >= 0, ErrorCode::invalid_argument, "f_alpha_plus needs x >= 0");
  const SpectralSum r = cutoff_power_sum(s, alpha, x / (1.0 - q));
  return r.scaled > 0 ? r.value() : 0.0;
}

CutState cut_state(const Spectrum& s, double q, double alpha) {
  check_q(q);
  require(std::isfinite(alpha), ErrorCode::invalid_argument, "alpha must be finite");
  const double e0 = s.ground_energy();
  if (!(alpha > e0))
    fail(ErrorCode::domain, "cut state needs alpha > eps_0; got alpha = " + std::to_string(alpha));
  const double k = 1.0 / (1.0 - q);
  const SpectralSum s1 = cutoff_power_sum(s, alpha, k);
  const SpectralSum sq = cutoff_power_sum(s, alpha, q * k);
  const SpectralSum se = cutoff_power_sum(s, alpha, q * k, Moment::excitation);

  CutState cs;
  cs.alpha = alpha;
  cs.q = q;
  cs.ground_energy = e0;
  cs.log_zeta_prime = s1.log_value();
  cs.zeta_prime = std::exp(cs.log_zeta_prime);
  const double log_fq = sq.log_value();
  cs.trace_rho_q = std::exp(log_fq - q * cs.log_zeta_prime);
  cs.excitation = se.scaled > 0 ? std::exp(se.log_value() - log_fq) : 0.0;

  const auto levels = s.levels();
  const std::size_t n = s1.direct_levels;
  cs.rank = s.cumulative_count(n);
  cs.on_plateau = n == 1;
  cs.weights.resize(n);
  cs.multiplicities.resize(n);
  for (std::size_t j = 0; j < n; ++j) {
    cs.weights[j] = std::exp(k * std::log(alpha - levels[j].energy) - cs.log_zeta_prime);
    cs.multiplicities[j] = levels[j].multiplicity;
  }
  if (cs.on_plateau) {
    // Exact uniform state on the ground level.
    const double m = static_cast<double>(levels[0].multiplicity);
    cs.weights[0] = 1.0 / m;
    cs.trace_rho_q = std::pow(m, 1.0 - q);
    cs.excitation = 0.0;
  }
  return cs;
}

Observables observables_cut(const CutState& cs, const QParams& p) {
  validate(p);
  require(cs.q == p.q, ErrorCode::invalid_argument, "state and parameters disagree on q");
  Observables o;
  o.U = cs.ground_energy + cs.excitation;
  o.U_alt = cs.alpha - std::exp((1.0 - cs.q) * cs.log_zeta_prime) / cs.trace_rho_q;
  const double scale = std::max({std::abs(o.U), std::abs(cs.alpha), std::abs(cs.ground_energy)});
  o.U_mismatch = scale > 0 ? std::abs(o.U - o.U_alt) / scale : 0.0;
  o.S = p.k_B * (cs.trace_rho_q - 1.0) / (1.0 - cs.q);
  o.F = o.U - p.temperature() * o.S;
  return o;
}

double beta_prime_of_alpha(const Spectrum& s, double q, double alpha) {
  const CutState cs = cut_state(s, q, alpha);
  return cs.trace_rho_q * cs.trace_rho_q * std::exp((q - 1.0) * cs.log_zeta_prime) / (1.0 - q);
}

double ground_threshold(const Spectrum& s, double q) {
  check_q(q);
  require(s.level_count() >= 2, ErrorCode::invalid_argument,
          "ground threshold needs two distinct levels");
  const double m = static_cast<double>(s.ground_multiplicity());
  return std::pow(m, 1.0 - q) / ((1.0 - q) * (s.first_excited_energy() - s.ground_energy()));
}

double cut_free_energy(const Spectrum& s, const QParams& p, double alpha) {
  return observables_cut(cut_state(s, p.q, alpha), p).F;
}

BoundCheck energy_upper_bound_check(const Spectrum& s, double q, double alpha) {
  const CutState cs = cut_state(s, q, alpha);
  BoundCheck b;
  b.value = cs.ground_energy + cs.excitation;
  b.bound = partial_average(s, cs.rank);
  b.ok = b.value <= b.bound + 1e-12 * std::max(1.0, std::abs(b.bound));
  return b;
}

EntropyBoundCheck entropy_bound_check(const Spectrum& s, double q, double alpha, double qc,
                                      double k_B, double gamma) {
  require(qc >= 1.0, ErrorCode::invalid_argument, "q_c must be >= 1");
  require(k_B > 0, ErrorCode::invalid_argument, "k_B must be positive");
  const CutState cs = cut_state(s, q, alpha);
  EntropyBoundCheck e;
  e.S = k_B * (cs.trace_rho_q - 1.0) / (1.0 - q);
  e.bound = k_B / (1.0 - q) * std::pow(static_cast<double>(cs.rank), 1.0 - q);
  e.ok = e.S <= e.bound * (1.0 + 1e-12);
  e.condition_met = q + qc > 2.0;
  e.envelope = std::numeric_limits<double>::quiet_NaN();
  if (e.condition_met && std::isfinite(qc)) {
    const double p = qc - 1.0;
    if (!(gamma > 0)) {
      gamma = std::numeric_limits<double>::infinity();
      const std::size_t n_levels = std::min<std::size_t>(s.level_count(), 4096);
      for (std::size_t j = 1; j < n_levels; ++j) {
        const double n_last = static_cast<double>(s.cumulative_count(j + 1) - 1);
        gamma = std::min(gamma, (s.levels()[j].energy - s.ground_energy()) / std::pow(n_last, p));
      }
    }
    e.gamma = gamma;
    e.envelope = k_B / (1.0 - q) * std::pow(gamma, -(1.0 - q) / p) *
                 std::pow(alpha - s.ground_energy(), (1.0 - q) / p);
  }
  return e;
}

double two_level_closed_form(double mu, double beta, double alpha) {
  require(mu > 0 && beta > 0, ErrorCode::invalid_argument, "closed form needs mu > 0, beta > 0");
  if (!(alpha > -mu)) fail(ErrorCode::domain, "closed form needs alpha > -mu");
  if (alpha <= mu) return -mu;
  const double kappa = (alpha - mu) / (alpha + mu);
  return -mu * (1.0 - kappa) / (1.0 + kappa) +
         (2.0 / beta) * (1.0 - (1.0 + kappa) / std::sqrt(1.0 + kappa * kappa));
}

}  // namespace tsallis
