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

#ifndef TSALLIS_TSALLIS_H_
#define TSALLIS_TSALLIS_H_

#include <stddef.h>
#include <stdint.h>

#if defined(TSALLIS_BUILDING_LIBRARY)
#define TSALLIS_API __attribute__((visibility("default")))
#else
#define TSALLIS_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Status codes. Every fallible call returns one; on failure a message is
 * available from tsallis_last_error() on the calling thread. */
typedef enum tsallis_status {
  TSALLIS_OK = 0,
  TSALLIS_INVALID_ARGUMENT = 1,
  TSALLIS_DOMAIN = 2,
  TSALLIS_DIVERGENCE = 3,
  TSALLIS_TRUNCATION = 4,
  TSALLIS_UNSUPPORTED_REGIME = 5,
  TSALLIS_INSUFFICIENT_DATA = 6,
  TSALLIS_PARSE = 7,
  TSALLIS_IO = 8,
  TSALLIS_INVARIANT = 9,
  TSALLIS_INTERNAL = 10
} tsallis_status;

typedef struct tsallis_spectrum tsallis_spectrum;
typedef struct tsallis_sweep tsallis_sweep;

TSALLIS_API const char* tsallis_version(void);
TSALLIS_API const char* tsallis_status_name(tsallis_status status);
/* Message of the last failed call on this thread; "" if none. */
TSALLIS_API const char* tsallis_last_error(void);
/* Releases strings returned through char** out-parameters. */
TSALLIS_API void tsallis_string_free(char* s);

/* ---- spectra ---- */

/* family: "list", "two-level", "harmonic", "box", "geometric", "factorial".
 * list takes energies, or energy/multiplicity pairs when params_are_pairs;
 * two-level takes two energies; box takes d; geometric takes the ratio.
 * truncation 0 selects the default cache size. */
TSALLIS_API tsallis_status tsallis_spectrum_build(const char* family, const double* params,
                                                  size_t n_params, uint64_t truncation,
                                                  int params_are_pairs, tsallis_spectrum** out);
TSALLIS_API tsallis_status tsallis_spectrum_from_levels(const double* energies,
                                                        const uint64_t* multiplicities,
                                                        size_t n, tsallis_spectrum** out);
TSALLIS_API tsallis_status tsallis_spectrum_parse(const char* text, tsallis_spectrum** out);
TSALLIS_API tsallis_status tsallis_spectrum_load(const char* path, tsallis_spectrum** out);
TSALLIS_API void tsallis_spectrum_free(tsallis_spectrum* s);

/* Text form of up to max_levels cached levels (all when 0); header lines
 * become '#' comments. */
TSALLIS_API tsallis_status tsallis_spectrum_format(const tsallis_spectrum* s, size_t max_levels,
                                                   const char* header, char** out);
TSALLIS_API tsallis_status tsallis_spectrum_info_json(const tsallis_spectrum* s, char** out);
TSALLIS_API int tsallis_spectrum_is_finite(const tsallis_spectrum* s);
TSALLIS_API size_t tsallis_spectrum_level_count(const tsallis_spectrum* s);
TSALLIS_API tsallis_status tsallis_spectrum_level(const tsallis_spectrum* s, size_t index,
                                                  double* energy, uint64_t* multiplicity);
TSALLIS_API double tsallis_spectrum_critical_q(const tsallis_spectrum* s);

TSALLIS_API tsallis_status tsallis_count_below(const tsallis_spectrum* s, double alpha,
                                               uint64_t* out);
TSALLIS_API tsallis_status tsallis_partial_average(const tsallis_spectrum* s, uint64_t n,
                                                   double* out);

typedef struct tsallis_qc_estimate {
  double qc;
  double slope;
  double residual_rms;
  double slope_lower;
  double slope_upper;
  int bounded;
  int super_power_law;
} tsallis_qc_estimate;

TSALLIS_API tsallis_status tsallis_estimate_qc(const tsallis_spectrum* s, uint64_t n_max,
                                               tsallis_qc_estimate* out);

typedef struct tsallis_growth_check {
  int pass;
  int has_violation;
  uint64_t first_violation;
  double worst_ratio;
} tsallis_growth_check;

TSALLIS_API tsallis_status tsallis_check_growth(const tsallis_spectrum* s, double a, uint64_t n0,
                                                uint64_t n_max, tsallis_growth_check* out);

/* ---- q > 1 ---- */

TSALLIS_API tsallis_status tsallis_beta_of_alpha(const tsallis_spectrum* s, double q,
                                                 double alpha, double* out);
TSALLIS_API tsallis_status tsallis_alpha_of_beta(const tsallis_spectrum* s, double q,
                                                 double beta, double* out);

typedef struct tsallis_equilibrium {
  double alpha;
  double beta;
  double beta_check;
  double zeta;
  double trace_rho_q;
  double U;
  double S;
  double F;
  double U_alt;
} tsallis_equilibrium;

TSALLIS_API tsallis_status tsallis_equilibrium_solve(const tsallis_spectrum* s, double q,
                                                     double beta, double k_B,
                                                     tsallis_equilibrium* out);

/* ---- 0 < q < 1 ---- */

typedef struct tsallis_cut_state {
  double alpha;
  double zeta_prime;
  double trace_rho_q;
  double U;
  double S;
  double F;
  uint64_t rank;
  int on_plateau;
} tsallis_cut_state;

TSALLIS_API tsallis_status tsallis_cut_state_eval(const tsallis_spectrum* s, double q,
                                                  double beta, double k_B, double alpha,
                                                  tsallis_cut_state* out);
TSALLIS_API tsallis_status tsallis_beta_prime(const tsallis_spectrum* s, double q, double alpha,
                                              double* out);
TSALLIS_API tsallis_status tsallis_ground_threshold(const tsallis_spectrum* s, double q,
                                                    double* out);
TSALLIS_API tsallis_status tsallis_two_level_closed_form(double mu, double beta, double alpha,
                                                         double* out);

/* ---- JSON reports ---- */

/* Equilibrium for q > 1, global landscape minimum for 0 < q < 1. */
TSALLIS_API tsallis_status tsallis_solve_json(const tsallis_spectrum* s, double q, double beta,
                                              double k_B, double alpha_max, char** out);
/* alpha_max <= 0 and grid <= 0 select defaults. */
TSALLIS_API tsallis_status tsallis_landscape_json(const tsallis_spectrum* s, double q,
                                                  double beta, double k_B, double alpha_max,
                                                  int grid, int include_curve, char** out);
/* found is set to 1 when a crossing lies in the window. scan_points <= 0
 * selects the default. */
TSALLIS_API tsallis_status tsallis_transition_json(const tsallis_spectrum* s, double q,
                                                   double beta_lo, double beta_hi,
                                                   int scan_points, int* found, char** out);

/* Suite names joined by ','. */
TSALLIS_API const char* tsallis_suite_names(void);

typedef struct tsallis_suite_options {
  uint64_t seed;
  size_t trials; /* 0 selects the suite default */
  int dim_min;
  int dim_max;
  const double* qs; /* NULL or n_qs == 0 selects the suite default */
  size_t n_qs;
  double tol;
} tsallis_suite_options;

TSALLIS_API void tsallis_suite_options_init(tsallis_suite_options* opt);
/* passed is set to 1 when the suite found no violation. */
TSALLIS_API tsallis_status tsallis_verify_json(const char* suite, const tsallis_suite_options* opt,
                                               int* passed, char** out);

/* ---- temperature sweeps ---- */

typedef enum tsallis_regime {
  TSALLIS_REGIME_Q_ABOVE_ONE = 0,
  TSALLIS_REGIME_CUT_INTERIOR = 1,
  TSALLIS_REGIME_CUT_GROUND = 2
} tsallis_regime;

typedef struct tsallis_sweep_row {
  double T;
  double beta;
  double alpha;
  double U;
  double S;
  double F;
  tsallis_regime regime;
} tsallis_sweep_row;

typedef struct tsallis_thermo_check {
  double max_rel_dFdT_plus_S;
  double max_abs_dFdT_plus_S;
  double min_dUdT;
  size_t checked_rows;
  size_t excluded_rows;
  int ok;
} tsallis_thermo_check;

TSALLIS_API tsallis_status tsallis_sweep_run(const tsallis_spectrum* s, double q, double k_B,
                                             const double* T, size_t n, tsallis_sweep** out);
TSALLIS_API void tsallis_sweep_free(tsallis_sweep* sw);
TSALLIS_API size_t tsallis_sweep_row_count(const tsallis_sweep* sw);
TSALLIS_API tsallis_status tsallis_sweep_row_at(const tsallis_sweep* sw, size_t i,
                                                tsallis_sweep_row* out);
/* rel_tol <= 0 selects 1e-5. */
TSALLIS_API tsallis_status tsallis_sweep_check(const tsallis_sweep* sw, double rel_tol,
                                               tsallis_thermo_check* out);
TSALLIS_API tsallis_status tsallis_sweep_csv(const tsallis_sweep* sw, const char* header,
                                             char** out);
/* with_check adds the thermodynamic-relation check (needs >= 3 rows). */
TSALLIS_API tsallis_status tsallis_sweep_json(const tsallis_sweep* sw, int with_check,
                                              char** out);

#ifdef __cplusplus
}
#endif

#endif  // TSALLIS_TSALLIS_H_
