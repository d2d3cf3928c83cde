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

#include "tsallis/tsallis.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <new>
#include <string>
#include <vector>

#include "json_report.hpp"
#include "tsallis/error.hpp"
#include "tsallis/qgt.hpp"
#include "tsallis/qlt.hpp"
#include "tsallis/spectrum.hpp"
#include "tsallis/suites.hpp"
#include "tsallis/thermo.hpp"

struct tsallis_spectrum {
  tsallis::Spectrum value;
};

struct tsallis_sweep {
  tsallis::SweepTable value;
};

namespace {

thread_local std::string g_last_error;

tsallis_status set_error(tsallis_status st, const char* msg) {
  g_last_error = msg;
  return st;
}

// Runs f, mapping exceptions to status codes.
template <typename F>
tsallis_status guard(F&& f) noexcept {
  try {
    f();
    g_last_error.clear();
    return TSALLIS_OK;
  } catch (const tsallis::Error& e) {
    return set_error(static_cast<tsallis_status>(static_cast<int>(e.code())), e.what());
  } catch (const std::bad_alloc&) {
    return set_error(TSALLIS_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return set_error(TSALLIS_INTERNAL, e.what());
  } catch (...) {
    return set_error(TSALLIS_INTERNAL, "unknown error");
  }
}

void need(const void* p, const char* name) {
  if (!p) tsallis::fail(tsallis::ErrorCode::invalid_argument, std::string(name) + " is null");
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

const std::string& suite_list() {
  static const std::string names = [] {
    std::string out;
    for (const std::string& n : tsallis::suite_names()) {
      if (!out.empty()) out += ',';
      out += n;
    }
    return out;
  }();
  return names;
}

}  // namespace

extern "C" {

const char* tsallis_version(void) { return "0.1.0"; }

const char* tsallis_status_name(tsallis_status status) {
  if (status == TSALLIS_OK) return "ok";
  if (status < TSALLIS_INVALID_ARGUMENT || status > TSALLIS_INTERNAL) return "unknown";
  return tsallis::to_string(static_cast<tsallis::ErrorCode>(static_cast<int>(status)));
}

const char* tsallis_last_error(void) { return g_last_error.c_str(); }

void tsallis_string_free(char* s) { std::free(s); }

tsallis_status tsallis_spectrum_build(const char* family, const double* params, size_t n_params,
                                      uint64_t truncation, int params_are_pairs,
                                      tsallis_spectrum** out) {
  return guard([&] {
    need(family, "family");
    need(out, "out");
    if (n_params > 0) need(params, "params");
    const auto fam = tsallis::parse_family(family);
    if (!fam)
      tsallis::fail(tsallis::ErrorCode::invalid_argument,
                    std::string("unknown spectrum family '") + family + "'");
    const std::uint64_t trunc = truncation == 0 ? tsallis::kDefaultTruncation : truncation;
    *out = new tsallis_spectrum{tsallis::build_spectrum(
        *fam, std::span<const double>(params, n_params), trunc, params_are_pairs != 0)};
  });
}

tsallis_status tsallis_spectrum_from_levels(const double* energies, const uint64_t* multiplicities,
                                            size_t n, tsallis_spectrum** out) {
  return guard([&] {
    need(energies, "energies");
    need(multiplicities, "multiplicities");
    need(out, "out");
    std::vector<tsallis::Level> levels(n);
    for (size_t i = 0; i < n; ++i) levels[i] = {energies[i], multiplicities[i]};
    *out = new tsallis_spectrum{tsallis::Spectrum::from_levels(std::move(levels))};
  });
}

tsallis_status tsallis_spectrum_parse(const char* text, tsallis_spectrum** out) {
  return guard([&] {
    need(text, "text");
    need(out, "out");
    *out = new tsallis_spectrum{tsallis::parse_spectrum_text(text)};
  });
}

tsallis_status tsallis_spectrum_load(const char* path, tsallis_spectrum** out) {
  return guard([&] {
    need(path, "path");
    need(out, "out");
    *out = new tsallis_spectrum{tsallis::load_spectrum_file(path)};
  });
}

void tsallis_spectrum_free(tsallis_spectrum* s) { delete s; }

tsallis_status tsallis_spectrum_format(const tsallis_spectrum* s, size_t max_levels,
                                       const char* header, char** out) {
  return guard([&] {
    need(s, "spectrum");
    need(out, "out");
    *out = dup_string(tsallis::format_spectrum(s->value, max_levels, header ? header : ""));
  });
}

tsallis_status tsallis_spectrum_info_json(const tsallis_spectrum* s, char** out) {
  return guard([&] {
    need(s, "spectrum");
    need(out, "out");
    *out = dup_string(tsallis::json::spectrum_info(s->value).dump(2));
  });
}

int tsallis_spectrum_is_finite(const tsallis_spectrum* s) { return s && s->value.is_finite(); }

size_t tsallis_spectrum_level_count(const tsallis_spectrum* s) {
  return s ? s->value.level_count() : 0;
}

tsallis_status tsallis_spectrum_level(const tsallis_spectrum* s, size_t index, double* energy,
                                      uint64_t* multiplicity) {
  return guard([&] {
    need(s, "spectrum");
    const auto lv = s->value.level_at(index);
    if (!lv)
      tsallis::fail(tsallis::ErrorCode::truncation,
                    "level " + std::to_string(index) + " is not available");
    if (energy) *energy = lv->energy;
    if (multiplicity) *multiplicity = lv->multiplicity;
  });
}

double tsallis_spectrum_critical_q(const tsallis_spectrum* s) {
  return s ? s->value.critical_q() : 0.0;
}

tsallis_status tsallis_count_below(const tsallis_spectrum* s, double alpha, uint64_t* out) {
  return guard([&] {
    need(s, "spectrum");
    need(out, "out");
    *out = tsallis::count_below(s->value, alpha);
  });
}

tsallis_status tsallis_partial_average(const tsallis_spectrum* s, uint64_t n, double* out) {
  return guard([&] {
    need(s, "spectrum");
    need(out, "out");
    *out = tsallis::partial_average(s->value, n);
  });
}

tsallis_status tsallis_estimate_qc(const tsallis_spectrum* s, uint64_t n_max,
                                   tsallis_qc_estimate* out) {
  return guard([&] {
    need(s, "spectrum");
    need(out, "out");
    const tsallis::QcEstimate e = tsallis::estimate_qc(s->value, n_max);
    *out = {e.qc, e.slope, e.residual_rms, e.slope_lower, e.slope_upper, e.bounded,
            e.super_power_law};
  });
}

tsallis_status tsallis_check_growth(const tsallis_spectrum* s, double a, uint64_t n0,
                                    uint64_t n_max, tsallis_growth_check* out) {
  return guard([&] {
    need(s, "spectrum");
    need(out, "out");
    const tsallis::GrowthCheck g = tsallis::check_growth_condition(s->value, a, n0, n_max);
    *out = {g.pass, g.first_violation.has_value(), g.first_violation.value_or(0), g.worst_ratio};
  });
}

tsallis_status tsallis_beta_of_alpha(const tsallis_spectrum* s, double q, double alpha,
                                     double* out) {
  return guard([&] {
    need(s, "spectrum");
    need(out, "out");
    *out = tsallis::beta_of_alpha(s->value, q, alpha);
  });
}

tsallis_status tsallis_alpha_of_beta(const tsallis_spectrum* s, double q, double beta,
                                     double* out) {
  return guard([&] {
    need(s, "spectrum");
    need(out, "out");
    *out = tsallis::alpha_of_beta(s->value, q, beta);
  });
}

tsallis_status tsallis_equilibrium_solve(const tsallis_spectrum* s, double q, double beta,
                                         double k_B, tsallis_equilibrium* out) {
  return guard([&] {
    need(s, "spectrum");
    need(out, "out");
    const tsallis::Equilibrium e = tsallis::equilibrium(s->value, {q, beta, k_B});
    *out = {e.state.alpha, e.beta,  e.beta_check, e.state.zeta, e.state.trace_rho_q,
            e.obs.U,       e.obs.S, e.obs.F,      e.obs.U_alt};
  });
}

tsallis_status tsallis_cut_state_eval(const tsallis_spectrum* s, double q, double beta, double k_B,
                                      double alpha, tsallis_cut_state* out) {
  return guard([&] {
    need(s, "spectrum");
    need(out, "out");
    const tsallis::QParams p{q, beta, k_B};
    tsallis::validate(p);
    const tsallis::CutState cs = tsallis::cut_state(s->value, q, alpha);
    const tsallis::Observables o = tsallis::observables_cut(cs, p);
    *out = {cs.alpha, cs.zeta_prime, cs.trace_rho_q, o.U, o.S, o.F, cs.rank, cs.on_plateau};
  });
}

tsallis_status tsallis_beta_prime(const tsallis_spectrum* s, double q, double alpha, double* out) {
  return guard([&] {
    need(s, "spectrum");
    need(out, "out");
    *out = tsallis::beta_prime_of_alpha(s->value, q, alpha);
  });
}

tsallis_status tsallis_ground_threshold(const tsallis_spectrum* s, double q, double* out) {
  return guard([&] {
    need(s, "spectrum");
    need(out, "out");
    *out = tsallis::ground_threshold(s->value, q);
  });
}

tsallis_status tsallis_two_level_closed_form(double mu, double beta, double alpha, double* out) {
  return guard([&] {
    need(out, "out");
    *out = tsallis::two_level_closed_form(mu, beta, alpha);
  });
}

tsallis_status tsallis_solve_json(const tsallis_spectrum* s, double q, double beta, double k_B,
                                  double alpha_max, char** out) {
  return guard([&] {
    need(s, "spectrum");
    need(out, "out");
    const tsallis::QParams p{q, beta, k_B};
    tsallis::validate(p);
    if (q > 1) {
      *out = dup_string(tsallis::json::equilibrium(s->value, tsallis::equilibrium(s->value, p), p)
                            .dump(2));
    } else {
      tsallis::LandscapeOptions opt;
      opt.alpha_max = alpha_max;
      const tsallis::LandscapeReport r = tsallis::landscape(s->value, p, opt);
      if (r.minima.empty())
        tsallis::fail(tsallis::ErrorCode::domain,
                      "free energy still decreasing at alpha_max; no minimum found");
      *out = dup_string(tsallis::json::cut_solution(s->value, r, p).dump(2));
    }
  });
}

tsallis_status tsallis_landscape_json(const tsallis_spectrum* s, double q, double beta, double k_B,
                                      double alpha_max, int grid, int include_curve, char** out) {
  return guard([&] {
    need(s, "spectrum");
    need(out, "out");
    const tsallis::QParams p{q, beta, k_B};
    tsallis::LandscapeOptions opt;
    opt.alpha_max = alpha_max;
    if (grid > 0) opt.grid = grid;
    const tsallis::LandscapeReport r = tsallis::landscape(s->value, p, opt);
    *out = dup_string(tsallis::json::landscape(s->value, r, p, include_curve != 0).dump(2));
  });
}

tsallis_status tsallis_transition_json(const tsallis_spectrum* s, double q, double beta_lo,
                                       double beta_hi, int scan_points, int* found, char** out) {
  return guard([&] {
    need(s, "spectrum");
    need(out, "out");
    std::string diag;
    const auto t = tsallis::locate_transition(s->value, q, beta_lo, beta_hi, &diag,
                                              scan_points > 0 ? scan_points : 64);
    if (found) *found = t.has_value();
    *out = dup_string(tsallis::json::transition(s->value, q, beta_lo, beta_hi, t, diag).dump(2));
  });
}

const char* tsallis_suite_names(void) { return suite_list().c_str(); }

void tsallis_suite_options_init(tsallis_suite_options* opt) {
  if (!opt) return;
  const tsallis::SuiteOptions d;
  *opt = {d.seed, 0, d.dim_min, d.dim_max, nullptr, 0, d.tol};
}

tsallis_status tsallis_verify_json(const char* suite, const tsallis_suite_options* opt,
                                   int* passed, char** out) {
  return guard([&] {
    need(suite, "suite");
    need(out, "out");
    tsallis::SuiteOptions o;
    o.trials = 0;
    if (opt) {
      o.seed = opt->seed;
      o.trials = opt->trials;
      o.dim_min = opt->dim_min;
      o.dim_max = opt->dim_max;
      if (opt->qs && opt->n_qs > 0) o.qs.assign(opt->qs, opt->qs + opt->n_qs);
      o.tol = opt->tol;
    }
    const tsallis::SuiteReport r = tsallis::run_suite(suite, o);
    if (passed) *passed = r.ok;
    *out = dup_string(tsallis::json::suite(r).dump(2));
  });
}

tsallis_status tsallis_sweep_run(const tsallis_spectrum* s, double q, double k_B, const double* T,
                                 size_t n, tsallis_sweep** out) {
  return guard([&] {
    need(s, "spectrum");
    need(out, "out");
    if (n > 0) need(T, "T");
    const std::vector<double> grid(T, T + n);
    *out = new tsallis_sweep{tsallis::temperature_sweep(s->value, q, grid, k_B)};
  });
}

void tsallis_sweep_free(tsallis_sweep* sw) { delete sw; }

size_t tsallis_sweep_row_count(const tsallis_sweep* sw) { return sw ? sw->value.rows.size() : 0; }

tsallis_status tsallis_sweep_row_at(const tsallis_sweep* sw, size_t i, tsallis_sweep_row* out) {
  return guard([&] {
    need(sw, "sweep");
    need(out, "out");
    tsallis::require(i < sw->value.rows.size(), tsallis::ErrorCode::invalid_argument,
                     "row index out of range");
    const tsallis::SweepRow& r = sw->value.rows[i];
    *out = {r.T, r.beta, r.alpha, r.U, r.S, r.F, static_cast<tsallis_regime>(r.regime)};
  });
}

tsallis_status tsallis_sweep_check(const tsallis_sweep* sw, double rel_tol,
                                   tsallis_thermo_check* out) {
  return guard([&] {
    need(sw, "sweep");
    need(out, "out");
    const tsallis::ThermoCheck c =
        tsallis::check_thermo_relations(sw->value, rel_tol > 0 ? rel_tol : 1e-5);
    *out = {c.max_rel_dFdT_plus_S, c.max_abs_dFdT_plus_S, c.min_dUdT, c.checked_rows,
            c.excluded_rows, c.ok};
  });
}

tsallis_status tsallis_sweep_csv(const tsallis_sweep* sw, const char* header, char** out) {
  return guard([&] {
    need(sw, "sweep");
    need(out, "out");
    *out = dup_string(tsallis::to_csv(sw->value, header ? header : ""));
  });
}

tsallis_status tsallis_sweep_json(const tsallis_sweep* sw, int with_check, char** out) {
  return guard([&] {
    need(sw, "sweep");
    need(out, "out");
    std::optional<tsallis::ThermoCheck> check;
    if (with_check) check = tsallis::check_thermo_relations(sw->value);
    *out = dup_string(tsallis::json::sweep(sw->value, check).dump(2));
  });
}

}  // extern "C"
