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

#include "tsallis/suites.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "tsallis/convexity_lab.hpp"
#include "tsallis/error.hpp"
#include "tsallis/qgt.hpp"
#include "tsallis/qlt.hpp"

namespace tsallis {

namespace {

constexpr std::size_t kKeepWorst = 5;

class Tracker {
 public:
  Tracker(SuiteReport& r, std::string name, std::uint64_t seed) : r_(r) {
    r_.name = std::move(name);
    r_.seed = seed;
    r_.worst_margin = std::numeric_limits<double>::infinity();
  }
  void finish() {
    if (r_.trials == 0) r_.worst_margin = 0.0;
    r_.ok = r_.failures == 0;
  }
  void add(const SuiteRecord& rec, bool pass) {
    ++r_.trials;
    if (!pass) ++r_.failures;
    r_.worst_margin = std::min(r_.worst_margin, rec.margin);
    auto& w = r_.worst;
    w.push_back(rec);
    std::sort(w.begin(), w.end(),
              [](const SuiteRecord& a, const SuiteRecord& b) { return a.margin < b.margin; });
    if (w.size() > kKeepWorst) w.pop_back();
  }
  void skip() { ++r_.skipped; }
  void max_diag(const std::string& key, double v) {
    auto [it, inserted] = r_.diagnostics.emplace(key, v);
    if (!inserted) it->second = std::max(it->second, v);
  }
  void count_diag(const std::string& key) { r_.diagnostics[key] += 1.0; }

 private:
  SuiteReport& r_;
};

std::size_t trials_or(const SuiteOptions& opt, std::size_t fallback) {
  return opt.trials > 0 ? opt.trials : fallback;
}

std::vector<double> qs_or(const SuiteOptions& opt, std::vector<double> fallback) {
  return opt.qs.empty() ? fallback : opt.qs;
}

double uniform(std::mt19937_64& rng, double a, double b) {
  return std::uniform_real_distribution<double>(a, b)(rng);
}

HamiltonianMatrix random_hamiltonian(std::mt19937_64& rng, int dim) {
  for (;;) {
    std::vector<double> e(static_cast<std::size_t>(dim));
    for (double& x : e) x = uniform(rng, -2.0, 3.0);
    std::sort(e.begin(), e.end());
    if (e.back() > e.front()) return HamiltonianMatrix(std::move(e));
  }
}

double random_shift_alpha(std::mt19937_64& rng, double e0) {
  return -e0 + std::exp(uniform(rng, std::log(0.05), std::log(5.0)));
}

double random_cutoff_alpha(std::mt19937_64& rng, const HamiltonianMatrix& H) {
  const double spread = H.diagonal().back() - H.ground_energy();
  return H.ground_energy() + uniform(rng, 0.01, 1.2) * (spread + 1.0);
}

CMatrix random_hermitian(std::mt19937_64& rng, int dim) {
  std::normal_distribution<double> normal(0.0, 1.0);
  CMatrix g(dim, dim);
  for (int j = 0; j < dim; ++j)
    for (int i = 0; i < dim; ++i) g(i, j) = {normal(rng), normal(rng)};
  return 0.5 * (g + g.adjoint());
}

std::vector<double> expand(const std::vector<double>& w, const std::vector<std::uint64_t>& m) {
  std::vector<double> out;
  for (std::size_t j = 0; j < w.size(); ++j) out.insert(out.end(), m[j], w[j]);
  return out;
}

}  // namespace

Spectrum random_finite_spectrum(std::mt19937_64& rng, std::uint64_t max_states,
                                bool multiplicities) {
  require(max_states >= 2, ErrorCode::invalid_argument, "random spectrum needs >= 2 states");
  std::uniform_int_distribution<std::uint64_t> pick_levels(2, std::max<std::uint64_t>(2, max_states / 2 + 1));
  for (;;) {
    const std::uint64_t n_levels = std::min(pick_levels(rng), max_states);
    std::vector<double> e(n_levels);
    const double offset = uniform(rng, -3.0, 3.0);
    for (double& x : e) x = offset + uniform(rng, 0.0, 5.0);
    std::sort(e.begin(), e.end());
    if (std::adjacent_find(e.begin(), e.end()) != e.end()) continue;
    std::vector<Level> levels;
    std::uint64_t states = 0;
    for (double x : e) {
      std::uint64_t m = 1;
      if (multiplicities && uniform(rng, 0.0, 1.0) < 0.3)
        m = std::uniform_int_distribution<std::uint64_t>(2, 4)(rng);
      m = std::min<std::uint64_t>(m, max_states - states - (n_levels - levels.size() - 1));
      levels.push_back({x, std::max<std::uint64_t>(m, 1)});
      states += levels.back().multiplicity;
    }
    return Spectrum::from_levels(std::move(levels));
  }
}

std::vector<std::string> suite_names() {
  return {"klein",        "bound-qgt",    "bound-qlt", "log-convexity",
          "cross-module", "monotonicity", "roundtrip", "stability"};
}

SuiteReport run_suite(const std::string& name, const SuiteOptions& opt) {
  if (name == "klein") return run_klein_suite(opt);
  if (name == "bound-qgt") return run_bound_suite(opt, false);
  if (name == "bound-qlt") return run_bound_suite(opt, true);
  if (name == "log-convexity") return run_log_convexity_suite(opt);
  if (name == "cross-module") return run_cross_module_suite(opt);
  if (name == "monotonicity") return run_monotonicity_suite(opt);
  if (name == "roundtrip") return run_roundtrip_suite(opt);
  if (name == "stability") return run_stability_suite(opt);
  fail(ErrorCode::invalid_argument, "unknown suite '" + name + "'");
}

SuiteReport run_klein_suite(const SuiteOptions& opt) {
  SuiteReport rep;
  Tracker t(rep, "klein", opt.seed);
  std::mt19937_64 rng(opt.seed);
  const std::size_t trials = trials_or(opt, 1000);
  const auto qs = qs_or(opt, {0.25, 0.5, 0.75, 1.25, 1.5, 2.0});
  const ConvexFunction sq = square_function();
  const ConvexFunction ab = abs_function();
  for (int dim = opt.dim_min; dim <= opt.dim_max; ++dim) {
    for (double q : qs) {
      const ConvexFunction pw = klein_power_function(q);
      for (std::size_t i = 0; i < trials; ++i) {
        const std::uint64_t seed = rng();
        std::mt19937_64 local(seed);
        const HamiltonianMatrix H = random_hamiltonian(local, dim);
        const bool cut = q < 1;
        const double alpha = cut ? random_cutoff_alpha(local, H) : random_shift_alpha(local, H.ground_energy());
        const std::vector<double> B =
            cut ? cutoff_trial_weights(H, q, alpha) : shifted_trial_weights(H, q, alpha);
        std::vector<double> W(static_cast<std::size_t>(dim));
        for (int n = 0; n < dim; ++n) {
          const double e = H.diagonal()[static_cast<std::size_t>(n)];
          W[static_cast<std::size_t>(n)] = cut ? std::max(alpha - e, 0.0) : alpha + e;
        }
        auto check = [&](const char* op, const KleinGap& g) {
          t.max_diag("max_form_disagreement", std::abs(g.gap - g.termwise));
          t.add({op, seed, dim, q, alpha, g.gap, 0.0, g.gap}, g.gap >= -opt.tol);
        };
        bool domain_ok = true;
        for (std::size_t n = 0; n < B.size(); ++n)
          if (cut && W[n] > 0 && B[n] < 1e-8) domain_ok = false;
        const DensityMatrix A = random_density_matrix(dim, local());
        if (domain_ok) {
          check("klein-power", klein_gap(A.matrix(), B, pw, W));
        } else {
          t.skip();
        }
        std::vector<double> b2(static_cast<std::size_t>(dim));
        for (double& x : b2) x = uniform(local, -1.0, 1.0);
        check("klein-square", klein_gap(random_hermitian(local, dim), b2, sq, W));
        check("klein-abs", klein_gap(random_hermitian(local, dim), b2, ab, W));
        // A = B is the equality case.
        const KleinGap eq = klein_gap(DensityMatrix::diagonal(B).matrix(), B, domain_ok ? pw : sq, W);
        t.max_diag("max_equality_residual", std::abs(eq.gap));
      }
    }
  }
  t.finish();
  return rep;
}

SuiteReport run_bound_suite(const SuiteOptions& opt, bool cutoff) {
  SuiteReport rep;
  Tracker t(rep, cutoff ? "bound-qlt" : "bound-qgt", opt.seed);
  std::mt19937_64 rng(opt.seed);
  const std::size_t trials = trials_or(opt, 1000);
  const auto qs = qs_or(opt, cutoff ? std::vector<double>{0.25, 0.5, 0.75}
                                    : std::vector<double>{1.25, 1.5, 2.0});
  for (int dim = opt.dim_min; dim <= opt.dim_max; ++dim) {
    for (double q : qs) {
      const ConvexityPrecheck pre = convexity_precheck(q);
      t.max_diag("precheck_failures", pre.ok ? 0.0 : 1.0);
      for (std::size_t i = 0; i < trials; ++i) {
        const std::uint64_t seed = rng();
        std::mt19937_64 local(seed);
        const HamiltonianMatrix H = random_hamiltonian(local, dim);
        const double alpha =
            cutoff ? random_cutoff_alpha(local, H) : random_shift_alpha(local, H.ground_energy());
        const DensityMatrix rho = random_density_matrix(dim, local());
        const QuadraticBound b = cutoff ? verify_bound_qlt(rho, H, q, alpha, opt.tol)
                                        : verify_bound_qgt(rho, H, q, alpha, opt.tol);
        t.add({cutoff ? "underbound-cutoff" : "underbound-shift", seed, dim, q, alpha, b.lhs, b.rhs,
               b.margin},
              b.ok);
        const std::vector<double> w =
            cutoff ? cutoff_trial_weights(H, q, alpha) : shifted_trial_weights(H, q, alpha);
        const DensityMatrix trial = DensityMatrix::diagonal(w);
        const QuadraticBound e = cutoff ? verify_bound_qlt(trial, H, q, alpha, opt.tol)
                                        : verify_bound_qgt(trial, H, q, alpha, opt.tol);
        const double eq = std::max(std::abs(e.lhs), std::abs(e.rhs));
        t.max_diag("max_equality_residual", eq);
        if (eq > 1e-12) t.count_diag("equality_failures");
      }
    }
  }
  if (cutoff) {
    // State supported entirely above the cutoff.
    const HamiltonianMatrix H({0.0, 1.0, 5.0});
    const double e5[] = {0.0, 0.0, 1.0};
    const QuadraticBound b = verify_bound_qlt(DensityMatrix::diagonal(e5), H, 0.5, 2.0, opt.tol);
    t.add({"underbound-cutoff-above", opt.seed, 3, 0.5, 2.0, b.lhs, b.rhs, b.margin}, b.ok);
  }
  if (rep.diagnostics["equality_failures"] > 0) ++rep.failures;
  t.finish();
  return rep;
}

SuiteReport run_log_convexity_suite(const SuiteOptions& opt) {
  SuiteReport rep;
  Tracker t(rep, "log-convexity", opt.seed);
  std::mt19937_64 rng(opt.seed);
  const std::size_t trials = trials_or(opt, 1000);
  const Spectrum harmonic = Spectrum::harmonic(1 << 12);
  for (std::size_t i = 0; i < trials; ++i) {
    const std::uint64_t seed = rng();
    std::mt19937_64 local(seed);
    const bool cut = i % 2 == 1;
    const bool use_harmonic = uniform(local, 0.0, 1.0) < 0.1;
    const Spectrum s = use_harmonic ? harmonic : random_finite_spectrum(local, 32);
    const double q = cut ? uniform(local, 0.05, 0.95) : uniform(local, 1.05, 2.0);
    const double e0 = s.ground_energy();
    double alpha, x1, x2;
    if (cut) {
      const double top = use_harmonic ? 200.0 : s.levels().back().energy - e0;
      alpha = e0 + uniform(local, 0.01, 1.5) * (top + 1.0);
      x1 = uniform(local, 0.0, 4.0);
      x2 = uniform(local, 0.0, 4.0);
    } else {
      alpha = random_shift_alpha(local, e0);
      const double lo = use_harmonic ? (q - 1.0) * 1.05 : -2.0;
      x1 = uniform(local, lo, 4.0);
      x2 = uniform(local, lo, 4.0);
    }
    const double gap =
        log_convexity_gap(s, cut ? TraceFamily::cutoff : TraceFamily::shift_plus, q, alpha, x1, x2);
    const bool single = cut && count_below(s, alpha) == s.ground_multiplicity();
    bool pass = gap <= 0.0;
    if (single) pass = pass && gap == 0.0;
    if (!single && std::abs(x1 - x2) > 1e-3 && !(gap < 0.0)) {
      t.count_diag("not_strict");
      pass = false;
    }
    t.add({cut ? "log-convexity-cutoff" : "log-convexity-shift", seed,
           static_cast<int>(std::min<std::uint64_t>(s.cached_count(), 1u << 30)), q, alpha, gap, 0.0,
           -gap},
          pass);
  }
  // Single repeated level: the gap vanishes identically.
  for (std::size_t i = 0; i < 100; ++i) {
    std::mt19937_64 local(rng());
    const Level l{uniform(local, -3.0, 3.0), std::uniform_int_distribution<std::uint64_t>(1, 9)(local)};
    const bool cut = i % 2 == 1;
    const double q = cut ? uniform(local, 0.05, 0.95) : uniform(local, 1.05, 2.0);
    const double alpha = cut ? l.energy + uniform(local, 0.1, 5.0) : -l.energy + uniform(local, 0.1, 5.0);
    const double gap = log_convexity_gap(std::span<const Level>(&l, 1),
                                         cut ? TraceFamily::cutoff : TraceFamily::shift_plus, q,
                                         alpha, uniform(local, 0.0, 3.0), uniform(local, 0.0, 3.0));
    if (gap != 0.0) t.count_diag("single_level_nonzero");
    t.add({"log-convexity-single-level", 0, 1, q, alpha, gap, 0.0, gap == 0.0 ? 0.0 : -std::abs(gap)},
          gap == 0.0);
  }
  t.finish();
  return rep;
}

SuiteReport run_cross_module_suite(const SuiteOptions& opt) {
  SuiteReport rep;
  Tracker t(rep, "cross-module", opt.seed);
  std::mt19937_64 rng(opt.seed);
  const std::size_t trials = trials_or(opt, 1000);
  const double qs[] = {0.25, 0.5, 0.75, 1.25, 1.5, 2.0};
  for (std::size_t i = 0; i < trials; ++i) {
    const std::uint64_t seed = rng();
    std::mt19937_64 local(seed);
    const Spectrum s = random_finite_spectrum(local, kMaxLabDimension);
    const double q = i % 2 == 0 ? qs[i / 2 % 6] : (uniform(local, 0, 1) < 0.5 ? uniform(local, 0.05, 0.95)
                                                                               : uniform(local, 1.05, 2.0));
    const double e0 = s.ground_energy();
    std::vector<double> energies;
    for (const Level& l : s.levels()) energies.insert(energies.end(), l.multiplicity, l.energy);
    const HamiltonianMatrix H(energies);
    const QParams p{q, 1.0, 1.0};
    double alpha, U, S, tr;
    std::vector<double> w;
    if (q > 1) {
      alpha = random_shift_alpha(local, e0);
      const TrialState st = trial_state(s, q, alpha);
      const Observables o = observables(st, p);
      w = expand(st.weights, st.multiplicities);
      U = o.U;
      S = o.S;
      tr = st.trace_rho_q;
    } else {
      alpha = e0 + uniform(local, 0.01, 1.2) * (s.levels().back().energy - e0 + 1.0);
      const CutState cs = cut_state(s, q, alpha);
      const Observables o = observables_cut(cs, p);
      w = expand(cs.weights, cs.multiplicities);
      w.resize(energies.size(), 0.0);
      U = o.U;
      S = o.S;
      tr = cs.trace_rho_q;
    }
    const DmObservables d = dm_observables(DensityMatrix::diagonal(w), H, q);
    auto diff = [](double a, double b) { return std::abs(a - b) / std::max(1.0, std::abs(a)); };
    const double worst = std::max({diff(U, d.U), diff(S, d.S), diff(tr, d.trace_rho_q),
                                   diff(U * tr, d.trace_rho_q_H)});
    t.max_diag("max_difference", worst);
    t.add({"diagonal-vs-trial", seed, H.dim(), q, alpha, worst, 1e-12, 1e-12 - worst}, worst <= 1e-12);
  }
  t.finish();
  return rep;
}

SuiteReport run_monotonicity_suite(const SuiteOptions& opt) {
  SuiteReport rep;
  Tracker t(rep, "monotonicity", opt.seed);
  std::mt19937_64 rng(opt.seed);
  const std::size_t trials = trials_or(opt, 100);
  constexpr double slack = 1e-12;
  constexpr int grid = 50;
  const auto qs = qs_or(opt, {0.25, 0.5, 0.75, 1.25, 1.5, 2.0});
  for (std::size_t i = 0; i < trials; ++i) {
    const std::uint64_t seed = rng();
    std::mt19937_64 local(seed);
    const Spectrum s = random_finite_spectrum(local, 64);
    const double e0 = s.ground_energy();
    const double em = s.first_excited_energy();
    const double spread = s.levels().back().energy - e0;
    const int dim = static_cast<int>(s.cached_count());
    for (double q : qs) {
      double prev_tr = 0.0, prev_beta = 0.0, prev_alpha = 0.0;
      double worst = std::numeric_limits<double>::infinity();
      bool pass = true;
      for (int k = 0; k < grid; ++k) {
        const double x = spread * std::pow(10.0, -2.0 + 4.0 * k / (grid - 1));
        if (q > 1) {
          const double alpha = x - e0;
          const double tr = trial_state(s, q, alpha).trace_rho_q;
          const double beta = beta_of_alpha(s, q, alpha);
          if (k > 0) {
            const double m_tr = (prev_tr - tr) / prev_tr - slack;
            const double m_beta = (prev_beta - beta) / prev_beta - slack;
            worst = std::min({worst, m_tr, m_beta});
            pass = pass && m_tr > 0 && m_beta > 0;
            if (!(m_tr > 0)) t.count_diag("trace_not_decreasing");
            if (!(m_beta > 0)) t.count_diag("beta_not_decreasing");
          }
          prev_tr = tr;
          prev_beta = beta;
          prev_alpha = alpha;
        } else {
          const double alpha = e0 + x;
          const double tr = cut_state(s, q, alpha).trace_rho_q;
          if (k > 0) {
            const bool off_plateau = prev_alpha > em;
            const double rel = (tr - prev_tr) / prev_tr;
            const double m = off_plateau ? rel - slack : rel + slack;
            worst = std::min(worst, m);
            const bool ok = off_plateau ? m > 0 : m >= 0;
            pass = pass && ok;
            if (!ok) t.count_diag(off_plateau ? "cut_trace_not_increasing" : "cut_trace_decreasing");
          }
          prev_tr = tr;
          prev_alpha = alpha;
        }
      }
      t.add({q > 1 ? "decreasing-trace-and-beta" : "increasing-cut-trace", seed, dim, q, 0.0, 0.0,
             0.0, worst},
            pass);
    }
  }
  t.finish();
  return rep;
}

SuiteReport run_roundtrip_suite(const SuiteOptions& opt) {
  SuiteReport rep;
  Tracker t(rep, "roundtrip", opt.seed);
  std::mt19937_64 rng(opt.seed);
  const std::size_t trials = trials_or(opt, 100);
  const Spectrum harmonic = Spectrum::harmonic(1 << 12);
  for (std::size_t i = 0; i < trials; ++i) {
    const std::uint64_t seed = rng();
    std::mt19937_64 local(seed);
    const bool use_harmonic = uniform(local, 0.0, 1.0) < 0.3;
    const Spectrum s = use_harmonic ? harmonic : random_finite_spectrum(local, 64);
    const double q = use_harmonic ? uniform(local, 1.05, 1.9) : uniform(local, 1.01, 2.0);
    const double beta = std::pow(10.0, uniform(local, -3.0, 3.0));
    const double alpha = alpha_of_beta(s, q, beta);
    const double back = beta_of_alpha(s, q, alpha);
    const double err = std::abs(back - beta) / beta;
    t.max_diag("max_roundtrip_error", err);
    t.add({"roundtrip", seed, static_cast<int>(std::min<std::uint64_t>(s.cached_count(), 1u << 30)),
           q, alpha, back, beta, 1e-10 - err},
          err <= 1e-10);
  }
  // Near-ground asymptote m^(1-q) / ((q-1)(alpha + eps_0)).
  for (std::uint64_t m : {1, 2, 3, 5}) {
    const Spectrum s = Spectrum::from_levels({{-0.5, m}, {0.5, 1}, {2.0, 2}});
    for (double q : {1.25, 1.5, 2.0}) {
      const double tgap = 1e-6;
      const double beta = beta_of_alpha(s, q, tgap + 0.5);
      const double asym = std::pow(static_cast<double>(m), 1.0 - q) / ((q - 1.0) * tgap);
      const double err = std::abs(beta / asym - 1.0);
      t.max_diag("max_asymptote_error", err);
      t.add({"near-ground-asymptote", m, 3, q, tgap + 0.5, beta, asym, 0.01 - err}, err <= 0.01);
      const double a8 = alpha_of_beta(s, q, 1e8);
      const double expect = std::pow(static_cast<double>(m), 1.0 - q) / ((q - 1.0) * 1e8);
      const double err8 = std::abs((a8 - 0.5) / expect - 1.0);
      t.add({"large-beta-inverse", m, 3, q, a8, a8 - 0.5, expect, 0.01 - err8}, err8 <= 0.01);
    }
  }
  t.finish();
  return rep;
}

SuiteReport run_stability_suite(const SuiteOptions& opt) {
  SuiteReport rep;
  Tracker t(rep, "stability", opt.seed);
  const Spectrum geometric = Spectrum::geometric(2.0);
  const Spectrum harmonic = Spectrum::harmonic(1 << 16);
  for (double q : {0.25, 0.5, 0.75}) {
    for (const Spectrum* s : {&geometric, &harmonic}) {
      for (int k = 0; k <= 40; ++k) {
        const double alpha = s->ground_energy() + 0.5 * std::pow(10.0, 4.0 * k / 40);
        const BoundCheck b = energy_upper_bound_check(*s, q, alpha);
        t.add({"energy-upper-bound-" + s->describe(), 0, 0, q, alpha, b.value, b.bound,
               b.bound - b.value},
              b.ok);
      }
    }
  }
  for (int k = 0; k <= 40; ++k) {
    const double alpha = 0.5 * std::pow(10.0, 4.0 * k / 40);
    const EntropyBoundCheck e = entropy_bound_check(harmonic, 0.5, alpha, 2.0);
    t.add({"entropy-bound-harmonic", 0, 0, 0.5, alpha, e.S, e.bound, e.bound - e.S},
          e.ok && e.condition_met);
  }
  const Spectrum factorial = Spectrum::factorial(std::uint64_t{1} << 36);
  for (double a : {1.1, 1.5, 2.0}) {
    const GrowthCheck g = check_growth_condition(factorial, a, 1, factorial.cached_count() - 1);
    t.add({"growth-fails-factorial", 0, 0, a, 0.0, g.pass ? 1.0 : 0.0, 0.0, g.pass ? -1.0 : 0.0},
          !g.pass);
    if (g.first_violation) rep.diagnostics["factorial_first_violation_a=" + std::to_string(a)] =
        static_cast<double>(*g.first_violation);
  }
  const GrowthCheck gh = check_growth_condition(harmonic, 1.5, 2, 1000);
  t.add({"growth-holds-harmonic", 0, 0, 1.5, 0.0, gh.worst_ratio, 1.5, gh.worst_ratio - 1.5}, gh.pass);
  const GrowthCheck gg = check_growth_condition(geometric, 1.9, 1, geometric.cached_count() - 1);
  t.add({"growth-holds-geometric", 0, 0, 1.9, 0.0, gg.worst_ratio, 1.9, gg.worst_ratio - 1.9},
        gg.pass);
  for (double a : {2.0, 3.0}) {
    const Spectrum g = Spectrum::geometric(a, 64);
    for (std::uint64_t n = 1; n <= 30; ++n) {
      const double avg = partial_average(g, n);
      const double expect = (std::pow(a, static_cast<double>(n)) - 1.0) / (static_cast<double>(n) * (a - 1.0));
      t.add({"geometric-partial-average", 0, static_cast<int>(n), a, 0.0, avg, expect,
             avg == expect ? 0.0 : -std::abs(avg - expect)},
            avg == expect);
    }
  }
  t.finish();
  return rep;
}

}  // namespace tsallis
