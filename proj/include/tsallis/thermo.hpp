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

#include <optional>
#include <string>
#include <vector>

#include "tsallis/qgt.hpp"
#include "tsallis/qlt.hpp"
#include "tsallis/spectrum.hpp"

namespace tsallis {

enum class Regime { q_above_one, cut_interior, cut_ground };

/// "q>1", "q<1-interior", "q<1-ground".
const char* to_string(Regime r) noexcept;

struct SweepRow {
  double T = 0.0;
  double beta = 0.0;
  double alpha = 0.0;
  double U = 0.0;
  double S = 0.0;
  double F = 0.0;
  Regime regime = Regime::q_above_one;
  bool degenerate = false;  ///< q < 1: two minima tie at this temperature
};

struct SweepTable {
  std::string spectrum_digest;
  std::string spectrum_description;
  double q = 0.0;
  double k_B = 1.0;
  std::vector<SweepRow> rows;
};

/// q > 1 rows solve `equilibrium`; q < 1 rows take the global landscape minimum.
SweepTable temperature_sweep(const Spectrum& s, double q, const std::vector<double>& T_grid,
                             double k_B = 1.0, const LandscapeOptions& landscape_opt = {});

struct ThermoCheck {
  double max_rel_dFdT_plus_S = 0.0;  ///< max |dF/dT + S| / max(|S|, floor)
  double max_abs_dFdT_plus_S = 0.0;
  double min_dUdT = 0.0;
  std::size_t checked_rows = 0;
  std::size_t excluded_rows = 0;  ///< rows next to a regime change
  std::size_t segments = 0;
  bool ok = false;
};

/// Finite differences (five-point where the segment allows, otherwise three)
/// on each maximal run of rows sharing one regime. Rows adjacent to a regime
/// change are excluded. ok when the relative residual is <= 1e-5 and
/// dU/dT > -1e-10. Needs >= 3 rows.
ThermoCheck check_thermo_relations(const SweepTable& t, double rel_tol = 1e-5);

/// Column CSV with a '#' metadata header.
std::string to_csv(const SweepTable& t, const std::string& header_comment = {});

struct Transition {
  double beta_star = 0.0;
  double delta_U = 0.0;        ///< U(interior) - U(plateau) at beta*
  double delta_S = 0.0;        ///< S(interior) - S(plateau): jump of -dF/dT
  double alpha_interior = 0.0;
  double F_star = 0.0;
  std::string diagnostic;
};

/// Bisection on F(plateau) - F(best interior minimum) over the window,
/// after a scan for sign changes. nullopt when no crossing is found; the
/// reason is written to `diagnostic` if given.
std::optional<Transition> locate_transition(const Spectrum& s, double q, double beta_lo,
                                            double beta_hi, std::string* diagnostic = nullptr,
                                            int scan_points = 64,
                                            const LandscapeOptions& landscape_opt = {});

}  // namespace tsallis
