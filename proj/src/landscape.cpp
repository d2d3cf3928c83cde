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

#include <algorithm>
#include <boost/math/tools/toms748_solve.hpp>
#include <cmath>
#include <cstdint>
#include <limits>

#include "tsallis/error.hpp"
#include "tsallis/qlt.hpp"

namespace tsallis {

namespace {

constexpr std::size_t kMaxIntervals = 256;
constexpr std::size_t kUngroupedIntervals = 32;

struct Point {
  double alpha = 0.0;
  double g = 0.0;  // beta - beta'(alpha); dF/dalpha has this sign off the plateau
  double beta_prime = 0.0;
  double F = 0.0;
  double U = 0.0;
  double S = 0.0;
};

Point evaluate(const Spectrum& s, const QParams& p, double alpha) {
  const CutState cs = cut_state(s, p.q, alpha);
  const Observables o = observables_cut(cs, p);
  Point pt;
  pt.alpha = alpha;
  pt.beta_prime =
      cs.trace_rho_q * cs.trace_rho_q * std::exp((p.q - 1.0) * cs.log_zeta_prime) / (1.0 - p.q);
  pt.g = p.beta - pt.beta_prime;
  pt.F = o.F;
  pt.U = o.U;
  pt.S = o.S;
  return pt;
}

std::vector<double> interval_samples(double a, double b, int grid) {
  std::vector<double> x;
  x.reserve(2 * static_cast<std::size_t>(grid) + 2);
  const double w = b - a;
  for (int i = 0; i <= grid; ++i) x.push_back(a + w * i / grid);
  // Clustered towards the left breakpoint, where the cut sum switches on.
  for (int i = 0; i < grid; ++i) x.push_back(a + w * std::pow(10.0, -8.0 + 8.0 * i / grid));
  std::sort(x.begin(), x.end());
  x.erase(std::unique(x.begin(), x.end()), x.end());
  return x;
}

double nearest_breakpoint_distance(const Spectrum& s, double alpha) {
  const auto levels = s.levels();
  const auto it = std::lower_bound(levels.begin(), levels.end(), alpha,
                                   [](const Level& l, double a) { return l.energy < a; });
  double d = std::numeric_limits<double>::infinity();
  if (it != levels.end()) d = std::min(d, std::abs(it->energy - alpha) / std::max(1.0, std::abs(alpha)));
  if (it != levels.begin())
    d = std::min(d, std::abs(std::prev(it)->energy - alpha) / std::max(1.0, std::abs(alpha)));
  return d;
}

}  // namespace

double default_alpha_max(const Spectrum& s, const QParams& p) {
  const double e0 = s.ground_energy();
  const double gap = s.first_excited_energy() - e0;
  if (!s.is_finite()) return std::min(s.levels().back().energy, e0 + 1e4 * gap);
  const double dim = static_cast<double>(s.cached_count());
  return s.levels().back().energy + 10.0 * gap +
         10.0 * std::pow(dim, 1.0 - p.q) / ((1.0 - p.q) * p.beta);
}

LandscapeReport landscape(const Spectrum& s, const QParams& p, const LandscapeOptions& opt) {
  validate(p);
  require(p.q < 1.0, ErrorCode::invalid_argument, "landscape needs 0 < q < 1");
  require(opt.grid >= 4, ErrorCode::invalid_argument, "landscape grid must be >= 4");
  const double e0 = s.ground_energy();
  const double em = s.first_excited_energy();
  LandscapeReport rep;
  rep.alpha_max = opt.alpha_max > 0 ? opt.alpha_max : default_alpha_max(s, p);
  require(rep.alpha_max > em, ErrorCode::invalid_argument,
          "alpha_max must lie above the first excited level");

  std::vector<double> ends;
  for (const Level& l : s.levels()) {
    if (l.energy >= rep.alpha_max) break;
    if (l.energy >= em) ends.push_back(l.energy);
  }
  rep.breakpoints = ends;
  ends.push_back(rep.alpha_max);
  if (ends.size() - 1 > kMaxIntervals) {
    // Merge the far intervals so the scan cost stays bounded.
    std::vector<double> merged(ends.begin(), ends.begin() + kUngroupedIntervals);
    const std::size_t rest = ends.size() - kUngroupedIntervals;
    const std::size_t groups = kMaxIntervals - kUngroupedIntervals;
    for (std::size_t gi = 0; gi < groups; ++gi)
      merged.push_back(ends[kUngroupedIntervals + (gi * rest) / groups]);
    merged.push_back(ends.back());
    merged.erase(std::unique(merged.begin(), merged.end()), merged.end());
    ends = std::move(merged);
  }

  auto record = [&](const Point& pt) {
    rep.alpha_grid.push_back(pt.alpha);
    rep.free_energy.push_back(pt.F);
  };

  // Ground plateau: F is constant on (eps_0, eps_m].
  for (double f : {1e-3, 0.25, 0.5, 0.75}) record(evaluate(s, p, e0 + f * (em - e0)));
  Point prev = evaluate(s, p, em);
  record(prev);
  if (prev.g > 0)
    rep.minima.push_back({em, prev.F, prev.U, prev.S, MinimumType::ground_plateau});

  auto add_minimum = [&](double a, double b, const Point& pa, const Point& pb) {
    double root = a;
    if (pa.g < 0) {
      auto g = [&](double x) { return p.beta - evaluate(s, p, x).beta_prime; };
      std::uintmax_t iters = 200;
      auto tol = [](double u, double v) {
        return std::abs(v - u) <= 1e-15 * std::max(1.0, std::abs(u));
      };
      const auto [lo, hi] = boost::math::tools::toms748_solve(g, a, b, pa.g, pb.g, tol, iters);
      root = 0.5 * (lo + hi);
    }
    const Point r = evaluate(s, p, root);
    const MinimumType type = nearest_breakpoint_distance(s, root) <= 1e-9 ? MinimumType::breakpoint
                                                                           : MinimumType::interior;
    rep.minima.push_back({root, r.F, r.U, r.S, type});
  };

  int increasing_run = 0;
  for (std::size_t i = 0; i + 1 < ends.size(); ++i) {
    const auto xs = interval_samples(ends[i], ends[i + 1], opt.grid);
    bool increasing = prev.g > 0;
    for (std::size_t k = 1; k < xs.size(); ++k) {
      const Point cur = evaluate(s, p, xs[k]);
      record(cur);
      if (prev.g <= 0 && cur.g > 0) add_minimum(prev.alpha, cur.alpha, prev, cur);
      increasing = increasing && cur.g > 0;
      prev = cur;
    }
    increasing_run = increasing && prev.beta_prime < p.beta / 10 ? increasing_run + 1 : 0;
    if (opt.early_stop_intervals > 0 && increasing_run >= opt.early_stop_intervals &&
        i + 2 < ends.size()) {
      rep.stopped_early = true;
      rep.alpha_max = ends[i + 1];
      break;
    }
  }
  rep.descending_at_alpha_max = !rep.stopped_early && prev.g < 0;

  std::stable_sort(rep.minima.begin(), rep.minima.end(),
                   [](const LocalMinimum& a, const LocalMinimum& b) { return a.F < b.F; });
  rep.global_min = 0;
  rep.degenerate =
      rep.minima.size() >= 2 && rep.minima[1].F - rep.minima[0].F < opt.degeneracy_tol;
  return rep;
}

}  // namespace tsallis
