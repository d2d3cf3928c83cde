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

#include "json_report.hpp"

#include <cmath>
#include <cstdio>

namespace tsallis::json {

namespace {

ordered_json num(double x) {
  if (std::isfinite(x)) return x;
  return nullptr;
}

ordered_json minimum(const LocalMinimum& m) {
  return {{"alpha", num(m.alpha)}, {"F", num(m.F)}, {"U", num(m.U)}, {"S", num(m.S)},
          {"type", to_string(m.type)}};
}

}  // namespace

ordered_json spectrum_info(const Spectrum& s) {
  ordered_json j;
  j["description"] = s.describe();
  j["digest"] = s.digest();
  j["finite"] = s.is_finite();
  j["ground_energy"] = s.ground_energy();
  j["ground_multiplicity"] = s.ground_multiplicity();
  j["first_excited_energy"] = s.first_excited_energy();
  j["cached_levels"] = s.level_count();
  j["cached_states"] = s.cached_count();
  j["critical_q"] = num(s.critical_q());
  return j;
}

ordered_json equilibrium(const Spectrum& s, const Equilibrium& e, const QParams& p) {
  ordered_json j;
  j["spectrum"] = spectrum_info(s);
  j["q"] = p.q;
  j["beta"] = p.beta;
  j["k_B"] = p.k_B;
  j["T"] = p.temperature();
  j["statistics"] = "q>1";
  j["alpha"] = e.state.alpha;
  j["beta_check"] = e.beta_check;
  j["zeta"] = num(e.state.zeta);
  j["log_zeta"] = e.state.log_zeta;
  j["trace_rho_q"] = e.state.trace_rho_q;
  j["U"] = e.obs.U;
  j["S"] = e.obs.S;
  j["F"] = e.obs.F;
  j["U_alt"] = num(e.obs.U_alt);
  j["U_mismatch"] = num(e.obs.U_mismatch);
  j["direct_levels"] = e.state.truncation_index;
  j["tail_bound"] = e.state.tail_bound;
  return j;
}

ordered_json cut_solution(const Spectrum& s, const LandscapeReport& r, const QParams& p) {
  ordered_json j;
  j["spectrum"] = spectrum_info(s);
  j["q"] = p.q;
  j["beta"] = p.beta;
  j["k_B"] = p.k_B;
  j["T"] = p.temperature();
  j["statistics"] = "q<1";
  if (r.minima.empty()) {
    j["minimum"] = nullptr;
  } else {
    const LocalMinimum& m = r.minima[r.global_min];
    j["alpha"] = m.alpha;
    j["U"] = m.U;
    j["S"] = m.S;
    j["F"] = m.F;
    j["type"] = to_string(m.type);
    j["regime"] = m.type == MinimumType::ground_plateau ? "q<1-ground" : "q<1-interior";
  }
  j["local_minima"] = r.minima.size();
  j["degenerate"] = r.degenerate;
  j["alpha_max"] = r.alpha_max;
  return j;
}

ordered_json landscape(const Spectrum& s, const LandscapeReport& r, const QParams& p,
                       bool include_curve) {
  ordered_json j;
  j["spectrum"] = spectrum_info(s);
  j["q"] = p.q;
  j["beta"] = p.beta;
  j["k_B"] = p.k_B;
  j["alpha_max"] = r.alpha_max;
  ordered_json mins = ordered_json::array();
  for (const LocalMinimum& m : r.minima) mins.push_back(minimum(m));
  j["minima"] = mins;
  if (r.minima.empty()) {
    j["global_minimum"] = nullptr;
  } else {
    j["global_minimum"] = minimum(r.minima[r.global_min]);
  }
  j["degenerate"] = r.degenerate;
  j["stopped_early"] = r.stopped_early;
  j["descending_at_alpha_max"] = r.descending_at_alpha_max;
  j["breakpoints"] = r.breakpoints;
  if (include_curve) {
    j["alpha_grid"] = r.alpha_grid;
    j["free_energy"] = r.free_energy;
  }
  return j;
}

ordered_json transition(const Spectrum& s, double q, double beta_lo, double beta_hi,
                        const std::optional<Transition>& t, const std::string& diagnostic) {
  ordered_json j;
  j["spectrum"] = spectrum_info(s);
  j["q"] = q;
  j["beta_window"] = {beta_lo, beta_hi};
  j["found"] = t.has_value();
  if (t) {
    j["beta_star"] = t->beta_star;
    j["T_star"] = 1.0 / t->beta_star;
    j["delta_U"] = t->delta_U;
    j["delta_S"] = t->delta_S;
    j["alpha_interior"] = t->alpha_interior;
    j["F_star"] = t->F_star;
  }
  j["diagnostic"] = diagnostic;
  return j;
}

ordered_json thermo_check(const ThermoCheck& c) {
  return {{"max_rel_dFdT_plus_S", c.max_rel_dFdT_plus_S},
          {"max_abs_dFdT_plus_S", c.max_abs_dFdT_plus_S},
          {"min_dUdT", c.min_dUdT},
          {"checked_rows", c.checked_rows},
          {"excluded_rows", c.excluded_rows},
          {"segments", c.segments},
          {"ok", c.ok}};
}

ordered_json sweep(const SweepTable& t, const std::optional<ThermoCheck>& check) {
  ordered_json j;
  j["spectrum"] = {{"description", t.spectrum_description}, {"digest", t.spectrum_digest}};
  j["q"] = t.q;
  j["k_B"] = t.k_B;
  ordered_json rows = ordered_json::array();
  for (const SweepRow& r : t.rows)
    rows.push_back({{"T", r.T}, {"beta", r.beta}, {"alpha", r.alpha}, {"U", r.U}, {"S", r.S},
                    {"F", r.F}, {"regime", to_string(r.regime)}, {"degenerate", r.degenerate}});
  j["rows"] = rows;
  if (check) j["check"] = thermo_check(*check);
  return j;
}

std::string record_digest(const SuiteRecord& r) {
  char buf[256];
  std::snprintf(buf, sizeof buf, "%s|%llu|%d|%.17g|%.17g", r.operation.c_str(),
                static_cast<unsigned long long>(r.seed), r.dim, r.q, r.alpha);
  std::uint64_t h = 1469598103934665603ull;
  for (const char* c = buf; *c; ++c) {
    h ^= static_cast<unsigned char>(*c);
    h *= 1099511628211ull;
  }
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

ordered_json suite(const SuiteReport& r) {
  ordered_json j;
  j["suite"] = r.name;
  j["seed"] = r.seed;
  j["trials"] = r.trials;
  j["failures"] = r.failures;
  j["skipped"] = r.skipped;
  j["worst_margin"] = num(r.worst_margin);
  ordered_json worst = ordered_json::array();
  for (const SuiteRecord& w : r.worst)
    worst.push_back({{"operation", w.operation}, {"inputs_digest", record_digest(w)},
                     {"seed", w.seed}, {"dim", w.dim}, {"q", w.q}, {"alpha", num(w.alpha)},
                     {"lhs", num(w.lhs)}, {"rhs", num(w.rhs)}, {"margin", num(w.margin)}});
  j["worst"] = worst;
  ordered_json diag = ordered_json::object();
  for (const auto& [k, v] : r.diagnostics) diag[k] = num(v);
  j["diagnostics"] = diag;
  j["ok"] = r.ok;
  return j;
}

}  // namespace tsallis::json
