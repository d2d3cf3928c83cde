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

#include "tsallis/thermo.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

#include "tsallis/error.hpp"

namespace tsallis {

namespace {

// Weights of the first derivative at x0 over the nodes x (Fornberg 1988).
std::vector<double> first_derivative_weights(double x0, const std::vector<double>& x) {
  const std::size_t n = x.size();
  std::vector<std::vector<double>> c(n, std::vector<double>(2, 0.0));
  double c1 = 1.0;
  double c4 = x[0] - x0;
  c[0][0] = 1.0;
  for (std::size_t i = 1; i < n; ++i) {
    const std::size_t mn = std::min<std::size_t>(i, 1);
    double c2 = 1.0;
    const double c5 = c4;
    c4 = x[i] - x0;
    for (std::size_t j = 0; j < i; ++j) {
      const double c3 = x[i] - x[j];
      c2 *= c3;
      if (j == i - 1) {
        for (std::size_t k = mn; k >= 1; --k)
          c[i][k] = c1 * (static_cast<double>(k) * c[i - 1][k - 1] - c5 * c[i - 1][k]) / c2;
        c[i][0] = -c1 * c5 * c[i - 1][0] / c2;
      }
      for (std::size_t k = mn; k >= 1; --k)
        c[j][k] = (c4 * c[j][k] - static_cast<double>(k) * c[j][k - 1]) / c3;
      c[j][0] = c4 * c[j][0] / c3;
    }
    c1 = c2;
  }
  std::vector<double> w(n);
  for (std::size_t i = 0; i < n; ++i) w[i] = c[i][1];
  return w;
}

struct Branches {
  double F_plateau = 0.0;
  std::optional<LocalMinimum> interior;
};

Branches branches(const Spectrum& s, double q, double beta, const LandscapeOptions& opt) {
  const QParams p{q, beta, 1.0};
  const LandscapeReport rep = landscape(s, p, opt);
  Branches b;
  const double m = static_cast<double>(s.ground_multiplicity());
  b.F_plateau = s.ground_energy() - (std::pow(m, 1.0 - q) - 1.0) / ((1.0 - q) * beta);
  for (const LocalMinimum& lm : rep.minima) {
    if (lm.type == MinimumType::ground_plateau) continue;
    if (!b.interior || lm.F < b.interior->F) b.interior = lm;
  }
  return b;
}

// > 0 when the best interior minimum lies below the plateau.
double branch_gap(const Branches& b) {
  return b.interior ? b.F_plateau - b.interior->F : -1.0;
}

}  // namespace

const char* to_string(Regime r) noexcept {
  switch (r) {
    case Regime::q_above_one: return "q>1";
    case Regime::cut_interior: return "q<1-interior";
    case Regime::cut_ground: return "q<1-ground";
  }
  return "unknown";
}

SweepTable temperature_sweep(const Spectrum& s, double q, const std::vector<double>& T_grid,
                             double k_B, const LandscapeOptions& landscape_opt) {
  require(!T_grid.empty(), ErrorCode::invalid_argument, "temperature grid is empty");
  for (std::size_t i = 0; i < T_grid.size(); ++i) {
    require(std::isfinite(T_grid[i]) && T_grid[i] > 0, ErrorCode::invalid_argument,
            "temperatures must be positive");
    if (i > 0)
      require(T_grid[i] > T_grid[i - 1], ErrorCode::invalid_argument,
              "temperature grid must be strictly increasing");
  }
  SweepTable t;
  t.spectrum_digest = s.digest();
  t.spectrum_description = s.describe();
  t.q = q;
  t.k_B = k_B;
  for (double T : T_grid) {
    const QParams p{q, 1.0 / (k_B * T), k_B};
    validate(p);
    SweepRow row;
    row.T = T;
    row.beta = p.beta;
    if (q > 1) {
      const Equilibrium e = equilibrium(s, p);
      row.alpha = e.state.alpha;
      row.U = e.obs.U;
      row.S = e.obs.S;
      row.F = e.obs.F;
      row.regime = Regime::q_above_one;
    } else {
      const LandscapeReport rep = landscape(s, p, landscape_opt);
      if (rep.minima.empty())
        fail(ErrorCode::domain, "no free-energy minimum below alpha_max at T = " + std::to_string(T));
      const LocalMinimum& g = rep.minima[rep.global_min];
      row.alpha = g.alpha;
      row.U = g.U;
      row.S = g.S;
      row.F = g.F;
      row.regime = g.type == MinimumType::ground_plateau ? Regime::cut_ground : Regime::cut_interior;
      row.degenerate = rep.degenerate;
    }
    t.rows.push_back(row);
  }
  return t;
}

ThermoCheck check_thermo_relations(const SweepTable& t, double rel_tol) {
  require(t.rows.size() >= 3, ErrorCode::invalid_argument, "thermo check needs >= 3 rows");
  ThermoCheck c;
  c.min_dUdT = std::numeric_limits<double>::infinity();
  const std::size_t n = t.rows.size();
  std::size_t a = 0;
  while (a < n) {
    std::size_t b = a;
    while (b + 1 < n && t.rows[b + 1].regime == t.rows[a].regime) ++b;
    // Rows touching another regime sit on a kink.
    std::size_t lo = a + (a > 0 ? 1 : 0);
    std::size_t hi = b - (b + 1 < n && b > a ? 1 : 0);
    c.excluded_rows += (lo - a) + (b - hi);
    if (hi >= lo && hi - lo + 1 >= 3) {
      ++c.segments;
      const std::size_t len = hi - lo + 1;
      const std::size_t width = std::min<std::size_t>(5, len);
      for (std::size_t i = lo; i <= hi; ++i) {
        std::size_t first = i >= lo + width / 2 ? i - width / 2 : lo;
        first = std::min(first, hi + 1 - width);
        std::vector<double> x(width);
        for (std::size_t k = 0; k < width; ++k) x[k] = t.rows[first + k].T;
        const std::vector<double> w = first_derivative_weights(t.rows[i].T, x);
        double dF = 0.0, dU = 0.0;
        for (std::size_t k = 0; k < width; ++k) {
          dF += w[k] * t.rows[first + k].F;
          dU += w[k] * t.rows[first + k].U;
        }
        const double S = t.rows[i].S;
        const double resid = std::abs(dF + S);
        c.max_abs_dFdT_plus_S = std::max(c.max_abs_dFdT_plus_S, resid);
        c.max_rel_dFdT_plus_S = std::max(c.max_rel_dFdT_plus_S, resid / std::max(std::abs(S), 1e-12));
        c.min_dUdT = std::min(c.min_dUdT, dU);
        ++c.checked_rows;
      }
    } else {
      c.excluded_rows += hi >= lo ? hi - lo + 1 : 0;
    }
    a = b + 1;
  }
  if (c.checked_rows == 0) c.min_dUdT = 0.0;
  c.ok = c.checked_rows > 0 && c.max_rel_dFdT_plus_S <= rel_tol && c.min_dUdT > -1e-10;
  return c;
}

std::string to_csv(const SweepTable& t, const std::string& header_comment) {
  std::string out;
  std::string_view rest = header_comment;
  while (!rest.empty()) {
    const auto nl = rest.find('\n');
    out += "# ";
    out += rest.substr(0, nl);
    out += '\n';
    rest = nl == std::string_view::npos ? std::string_view{} : rest.substr(nl + 1);
  }
  char buf[512];
  std::snprintf(buf, sizeof buf, "# spectrum: %s digest=%s q=%.17g k_B=%.17g\n",
                t.spectrum_description.c_str(), t.spectrum_digest.c_str(), t.q, t.k_B);
  out += buf;
  out += "T,beta,alpha,U,S,F,regime\n";
  for (const SweepRow& r : t.rows) {
    std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%s\n", r.T, r.beta, r.alpha,
                  r.U, r.S, r.F, to_string(r.regime));
    out += buf;
  }
  return out;
}

std::optional<Transition> locate_transition(const Spectrum& s, double q, double beta_lo,
                                            double beta_hi, std::string* diagnostic,
                                            int scan_points, const LandscapeOptions& landscape_opt) {
  require(q > 0 && q < 1, ErrorCode::invalid_argument, "transitions are located for 0 < q < 1");
  require(beta_lo > 0 && beta_hi > beta_lo, ErrorCode::invalid_argument,
          "beta window must satisfy 0 < lo < hi");
  require(scan_points >= 2, ErrorCode::invalid_argument, "scan needs >= 2 points");
  auto say = [&](const std::string& msg) {
    if (diagnostic) *diagnostic = msg;
  };

  std::vector<double> betas(static_cast<std::size_t>(scan_points));
  std::vector<double> gaps(betas.size());
  for (std::size_t i = 0; i < betas.size(); ++i) {
    betas[i] = beta_lo * std::pow(beta_hi / beta_lo, static_cast<double>(i) / (scan_points - 1));
    gaps[i] = branch_gap(branches(s, q, betas[i], landscape_opt));
  }
  std::vector<std::size_t> crossings;
  for (std::size_t i = 0; i + 1 < betas.size(); ++i)
    if (gaps[i] > 0 && gaps[i + 1] <= 0) crossings.push_back(i);
  if (crossings.empty()) {
    const bool interior = gaps.front() > 0;
    say(std::string("no crossing in window: ") +
        (interior ? "an interior minimum is global throughout"
                  : "the ground plateau is global throughout"));
    return std::nullopt;
  }

  double lo = betas[crossings.front()], hi = betas[crossings.front() + 1];
  while (hi - lo > 1e-11 * hi) {
    const double mid = 0.5 * (lo + hi);
    if (branch_gap(branches(s, q, mid, landscape_opt)) > 0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  Transition tr;
  tr.beta_star = 0.5 * (lo + hi);
  // Interior branch evaluated just on its own side of the crossing.
  const Branches b = branches(s, q, lo, landscape_opt);
  const double m = static_cast<double>(s.ground_multiplicity());
  const double S_plateau = (std::pow(m, 1.0 - q) - 1.0) / (1.0 - q);
  tr.alpha_interior = b.interior->alpha;
  tr.delta_U = b.interior->U - s.ground_energy();
  tr.delta_S = b.interior->S - S_plateau;
  tr.F_star = b.F_plateau;
  const Branches bh = branches(s, q, hi, landscape_opt);
  std::string msg = bh.interior ? "plateau and interior minimum exchange at beta*"
                                : "interior minimum disappears at beta*";
  if (crossings.size() > 1) msg += "; " + std::to_string(crossings.size()) + " crossings on the scan grid";
  tr.diagnostic = msg;
  say(msg);
  return tr;
}

}  // namespace tsallis
