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

// One pass/fail line per acceptance criterion; exit status 1 if any fails.

#include <algorithm>
#include <boost/math/tools/minima.hpp>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "tsallis/convexity_lab.hpp"
#include "tsallis/qgt.hpp"
#include "tsallis/qlt.hpp"
#include "tsallis/spectrum.hpp"
#include "tsallis/suites.hpp"
#include "tsallis/thermo.hpp"

namespace {

using namespace tsallis;

struct Outcome {
  bool ok = false;
  std::string detail;
};

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

const Spectrum& symmetric_two_level() {
  static const Spectrum s = Spectrum::from_energies(std::vector<double>{-1.0, 1.0});
  return s;
}

Outcome closed_form() {
  double worst = 0.0;
  for (double beta : {0.5, 1.0, 2.0, 5.0}) {
    for (int i = 1; i <= 1000; ++i) {
      const double alpha = 1.0 + 49.0 * i / 1000.0;
      const double generic = cut_free_energy(symmetric_two_level(), {0.5, beta, 1.0}, alpha);
      worst = std::max(worst, std::abs(generic - two_level_closed_form(1.0, beta, alpha)));
    }
  }
  return {worst <= 1e-12, fmt("max |F_generic - F_closed| = %.2e over 4000 points", worst)};
}

// Lowest interior value of the closed form: grid scan on (mu, 50], then Brent.
double closed_form_interior_min(double beta) {
  auto F = [&](double a) { return two_level_closed_form(1.0, beta, a); };
  constexpr int n = 4000;
  double best_a = 0.0, best_F = INFINITY;
  std::vector<double> grid(n + 1);
  for (int i = 0; i <= n; ++i) grid[i] = 1.0 + 49.0 * std::pow(static_cast<double>(i) / n, 2.0);
  for (int i = 1; i < n; ++i) {
    const double f = F(grid[i]);
    if (f < F(grid[i - 1]) && f <= F(grid[i + 1]) && f < best_F) {
      best_F = f;
      best_a = grid[i];
    }
  }
  if (!std::isfinite(best_F)) return INFINITY;
  const auto idx = std::lower_bound(grid.begin(), grid.end(), best_a) - grid.begin();
  const auto r = boost::math::tools::brent_find_minima(F, grid[idx - 1], grid[idx + 1], 52);
  return r.second;
}

Outcome transition() {
  std::string diag;
  const auto t = locate_transition(symmetric_two_level(), 0.5, 0.5, 5.0, &diag);
  if (!t) return {false, "no transition found: " + diag};
  const LandscapeReport r = landscape(symmetric_two_level(), {0.5, 1.05, 1.0});
  // Independent bisection on the closed form.
  double lo = 0.9, hi = 1.08;
  for (int i = 0; i < 100 && hi - lo > 1e-13; ++i) {
    const double mid = 0.5 * (lo + hi);
    (closed_form_interior_min(mid) < -1.0 ? lo : hi) = mid;
  }
  const double beta_cf = 0.5 * (lo + hi);
  const bool ok = t->beta_star * 1.0 > 1.0 && t->delta_U > 0.0 && r.minima.size() == 2 &&
                  std::abs(t->beta_star - beta_cf) <= 1e-6;
  return {ok, fmt("beta* = %.12f (closed form %.12f, diff %.1e), dU = %.6f, minima at beta=1.05: %zu",
                  t->beta_star, beta_cf, std::abs(t->beta_star - beta_cf), t->delta_U,
                  r.minima.size())};
}

Outcome qc_reproduction() {
  const QcEstimate h = estimate_qc(Spectrum::harmonic(), 2048);
  bool ok = std::abs(h.qc - 2.0) <= 0.05;
  std::string detail = fmt("harmonic %.4f", h.qc);
  for (int d = 1; d <= 3; ++d) {
    const QcEstimate b = estimate_qc(Spectrum::box(d), 2048);
    ok = ok && std::abs(b.qc - (1.0 + 2.0 / d)) <= 0.08;
    detail += fmt(", box d=%d %.4f (want %.4f)", d, b.qc, 1.0 + 2.0 / d);
  }
  return {ok, detail};
}

Outcome suite_outcome(const SuiteReport& r, const std::string& extra = {}) {
  return {r.ok && r.failures == 0,
          fmt("%s: %zu checks, %zu failures, worst margin %.2e", r.name.c_str(), r.trials, r.failures,
              r.worst_margin) + extra};
}

double diag(const SuiteReport& r, const std::string& key) {
  const auto it = r.diagnostics.find(key);
  return it == r.diagnostics.end() ? 0.0 : it->second;
}

Outcome monotonicity() {
  SuiteOptions o;
  o.trials = 100;
  o.tol = 1e-12;
  return suite_outcome(run_monotonicity_suite(o));
}

Outcome roundtrip() {
  SuiteOptions o;
  o.trials = 100;
  const SuiteReport r = run_roundtrip_suite(o);
  // At q = 2 the general asymptote m^(1-q)/((q-1)(alpha+eps_0)) reduces to m^(1-q)/(alpha+eps_0).
  double literal = 0.0;
  for (std::uint64_t m : {1, 2, 4}) {
    const Spectrum s = Spectrum::from_levels({{0.3, m}, {1.0, 1}, {2.5, 3}});
    const double d = 1e-6;
    const double want = std::pow(static_cast<double>(m), -1.0) / d;
    literal = std::max(literal, std::abs(beta_of_alpha(s, 2.0, d - 0.3) / want - 1.0));
  }
  Outcome out = suite_outcome(r, fmt("; max roundtrip error %.2e, max asymptote error %.2e, "
                                     "q=2 literal form error %.2e",
                                     diag(r, "max_roundtrip_error"), diag(r, "max_asymptote_error"),
                                     literal));
  out.ok = out.ok && literal <= 0.01;
  return out;
}

Outcome klein_and_bounds() {
  SuiteOptions o;
  o.trials = 1000;
  o.dim_min = 2;
  o.dim_max = 6;
  o.qs = {0.25, 0.5, 0.75, 1.25, 1.5, 2.0};
  o.tol = 1e-9;
  const SuiteReport k = run_klein_suite(o);
  SuiteOptions gt = o;
  gt.qs = {1.25, 1.5, 2.0};
  const SuiteReport b1 = run_bound_suite(gt, false);
  SuiteOptions lt = o;
  lt.qs = {0.25, 0.5, 0.75};
  const SuiteReport b2 = run_bound_suite(lt, true);
  const double eq = std::max({diag(k, "max_equality_residual"), diag(b1, "max_equality_residual"),
                              diag(b2, "max_equality_residual")});
  const bool ok = k.ok && b1.ok && b2.ok && eq <= 1e-12;
  return {ok, fmt("klein %zu/%zu, bound-qgt %zu/%zu, bound-qlt %zu/%zu failures/checks; "
                  "worst gaps %.2e %.2e %.2e; equality residual %.2e",
                  k.failures, k.trials, b1.failures, b1.trials, b2.failures, b2.trials,
                  k.worst_margin, b1.worst_margin, b2.worst_margin, eq)};
}

Outcome thermo() {
  std::vector<double> T2(100), TH(100);
  for (int i = 0; i < 100; ++i) {
    T2[i] = 0.2 * std::pow(25.0, i / 99.0);
    TH[i] = 0.5 * std::pow(10.0, i / 99.0);
  }
  const ThermoCheck a =
      check_thermo_relations(temperature_sweep(Spectrum::from_energies(std::vector<double>{0, 1}), 1.5, T2));
  const ThermoCheck h = check_thermo_relations(temperature_sweep(Spectrum::harmonic(), 1.5, TH));
  const bool ok = a.ok && h.ok && a.max_rel_dFdT_plus_S <= 1e-5 && h.max_rel_dFdT_plus_S <= 1e-5 &&
                  a.min_dUdT > 0 && h.min_dUdT > 0;
  return {ok, fmt("two-level T in [0.2,5]: rel %.2e, min dU/dT %.3g; harmonic T in [0.5,5]: rel %.2e, "
                  "min dU/dT %.3g",
                  a.max_rel_dFdT_plus_S, a.min_dUdT, h.max_rel_dFdT_plus_S, h.min_dUdT)};
}

Outcome stability() {
  const SuiteReport r = run_stability_suite({});
  const Spectrum f = Spectrum::factorial(std::uint64_t{1} << 36);
  const bool f11 = !check_growth_condition(f, 1.1, 1, f.cached_count() - 1).pass;
  const bool f2 = !check_growth_condition(f, 2.0, 1, f.cached_count() - 1).pass;
  return {r.ok && f11 && f2,
          fmt("stability: %zu checks, %zu failures; factorial fails a=1.1: %s, a=2: %s", r.trials,
              r.failures, f11 ? "yes" : "no", f2 ? "yes" : "no")};
}

Outcome log_convexity() {
  SuiteOptions o;
  o.trials = 1000;
  const SuiteReport r = run_log_convexity_suite(o);
  return suite_outcome(r, fmt("; single-level nonzero gaps %.0f", diag(r, "single_level_nonzero")));
}

Outcome cross_module() {
  SuiteOptions o;
  o.trials = 1000;
  const SuiteReport r = run_cross_module_suite(o);
  return suite_outcome(r, fmt("; max difference %.2e", diag(r, "max_difference")));
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    double budget_s;  // <= 0: none
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {"two-level closed form", 1.0, closed_form},
      {"first-order transition", 5.0, transition},
      {"critical q reproduction", 10.0, qc_reproduction},
      {"monotonicity", 0.0, monotonicity},
      {"inversion roundtrip", 0.0, roundtrip},
      {"Klein and quadratic bounds", 60.0, klein_and_bounds},
      {"thermodynamic relations", 0.0, thermo},
      {"stability diagnostics", 0.0, stability},
      {"log-convexity", 0.0, log_convexity},
      {"cross-module oracle", 0.0, cross_module},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool ok = o.ok;
    std::string timing = fmt("%.2fs", secs);
    if (criteria[i].budget_s > 0) {
      timing += fmt(" of %.0fs", criteria[i].budget_s);
      if (secs >= criteria[i].budget_s) ok = false;
    }
    if (!ok) ++failed;
    std::printf("[%s] %2zu %-28s %s (%s)\n", ok ? "PASS" : "FAIL", i + 1, criteria[i].name,
                o.detail.c_str(), timing.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
