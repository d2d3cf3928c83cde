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

#include <gtest/gtest.h>

#include <cmath>
#include <cstring>
#include <string>

#include "json.hpp"
#include "tsallis/tsallis.h"

namespace {

using nlohmann::json;

struct SpectrumHandle {
  tsallis_spectrum* p = nullptr;
  ~SpectrumHandle() { tsallis_spectrum_free(p); }
};

struct Str {
  char* p = nullptr;
  ~Str() { tsallis_string_free(p); }
};

TEST(CApi, BuildAndQuerySpectrum) {
  SpectrumHandle s;
  const double params[] = {-1.0, 1.0};
  ASSERT_EQ(tsallis_spectrum_build("two-level", params, 2, 0, 0, &s.p), TSALLIS_OK);
  EXPECT_TRUE(tsallis_spectrum_is_finite(s.p));
  EXPECT_EQ(tsallis_spectrum_level_count(s.p), 2u);
  double e = 0;
  uint64_t m = 0;
  ASSERT_EQ(tsallis_spectrum_level(s.p, 1, &e, &m), TSALLIS_OK);
  EXPECT_EQ(e, 1.0);
  EXPECT_EQ(m, 1u);
  EXPECT_EQ(tsallis_spectrum_level(s.p, 5, &e, &m), TSALLIS_TRUNCATION);
  EXPECT_GT(std::strlen(tsallis_last_error()), 0u);
}

TEST(CApi, ErrorsAreReported) {
  SpectrumHandle s;
  EXPECT_EQ(tsallis_spectrum_build("bogus", nullptr, 0, 0, 0, &s.p), TSALLIS_INVALID_ARGUMENT);
  EXPECT_EQ(s.p, nullptr);
  EXPECT_NE(std::string(tsallis_last_error()).find("bogus"), std::string::npos);
  EXPECT_EQ(tsallis_spectrum_parse("1 1\n1 2\n", &s.p), TSALLIS_PARSE);
  EXPECT_EQ(tsallis_spectrum_load("/nonexistent", &s.p), TSALLIS_IO);
  EXPECT_EQ(tsallis_spectrum_build(nullptr, nullptr, 0, 0, 0, &s.p), TSALLIS_INVALID_ARGUMENT);
  EXPECT_STREQ(tsallis_status_name(TSALLIS_DOMAIN), "domain");
  EXPECT_STREQ(tsallis_status_name(TSALLIS_OK), "ok");

  SpectrumHandle h;
  ASSERT_EQ(tsallis_spectrum_build("harmonic", nullptr, 0, 0, 0, &h.p), TSALLIS_OK);
  tsallis_equilibrium eq{};
  EXPECT_EQ(tsallis_equilibrium_solve(h.p, 2.0, 1.0, 1.0, &eq), TSALLIS_UNSUPPORTED_REGIME);
  double out = 0;
  EXPECT_EQ(tsallis_beta_of_alpha(h.p, 1.5, 1.0, &out), TSALLIS_OK);
  EXPECT_STREQ(tsallis_last_error(), "");
}

TEST(CApi, EquilibriumAndCutState) {
  SpectrumHandle s;
  const double params[] = {0.0, 1.0};
  ASSERT_EQ(tsallis_spectrum_build("two-level", params, 2, 0, 0, &s.p), TSALLIS_OK);
  tsallis_equilibrium eq{};
  ASSERT_EQ(tsallis_equilibrium_solve(s.p, 1.5, 1.44897204941986372, 1.0, &eq), TSALLIS_OK);
  EXPECT_NEAR(eq.alpha, 1.0, 1e-12);
  EXPECT_NEAR(eq.F, -0.158066652777647960746, 1e-13);
  EXPECT_NEAR(eq.zeta, 1.25, 1e-12);

  tsallis_cut_state cs{};
  ASSERT_EQ(tsallis_cut_state_eval(s.p, 0.5, 1.0, 1.0, 2.0, &cs), TSALLIS_OK);
  EXPECT_NEAR(cs.zeta_prime, 5.0, 1e-14);
  EXPECT_NEAR(cs.U, 1.0 / 3.0, 1e-15);
  EXPECT_EQ(cs.rank, 2u);
  double thr = 0, bp = 0, cf = 0;
  ASSERT_EQ(tsallis_ground_threshold(s.p, 0.5, &thr), TSALLIS_OK);
  EXPECT_NEAR(thr, 2.0, 1e-15);
  ASSERT_EQ(tsallis_beta_prime(s.p, 0.5, 2.0, &bp), TSALLIS_OK);
  EXPECT_NEAR(bp, 1.60996894379984858, 1e-14);
  ASSERT_EQ(tsallis_two_level_closed_form(1.0, 2.0, 3.0, &cf), TSALLIS_OK);
  EXPECT_NEAR(cf, -0.674974119833207151, 1e-15);
}

TEST(CApi, SpectrumStatistics) {
  SpectrumHandle h;
  ASSERT_EQ(tsallis_spectrum_build("harmonic", nullptr, 0, 0, 0, &h.p), TSALLIS_OK);
  tsallis_qc_estimate qc{};
  ASSERT_EQ(tsallis_estimate_qc(h.p, 2048, &qc), TSALLIS_OK);
  EXPECT_NEAR(qc.qc, 2.0, 0.05);
  uint64_t n = 0;
  ASSERT_EQ(tsallis_count_below(h.p, 10.0, &n), TSALLIS_OK);
  EXPECT_EQ(n, 10u);
  double avg = 0;
  ASSERT_EQ(tsallis_partial_average(h.p, 10, &avg), TSALLIS_OK);
  EXPECT_DOUBLE_EQ(avg, 4.5);

  SpectrumHandle f;
  ASSERT_EQ(tsallis_spectrum_build("factorial", nullptr, 0, 0, 0, &f.p), TSALLIS_OK);
  tsallis_growth_check g{};
  ASSERT_EQ(tsallis_check_growth(f.p, 2.0, 1, 1000, &g), TSALLIS_OK);
  EXPECT_FALSE(g.pass);
  EXPECT_TRUE(g.has_violation);
  EXPECT_EQ(g.first_violation, 4u);
}

TEST(CApi, FormatAndParseRoundTrip) {
  SpectrumHandle h;
  ASSERT_EQ(tsallis_spectrum_build("harmonic", nullptr, 0, 0, 0, &h.p), TSALLIS_OK);
  Str text;
  ASSERT_EQ(tsallis_spectrum_format(h.p, 100, "harmonic", &text.p), TSALLIS_OK);
  SpectrumHandle back;
  ASSERT_EQ(tsallis_spectrum_parse(text.p, &back.p), TSALLIS_OK);
  EXPECT_EQ(tsallis_spectrum_level_count(back.p), 100u);
  double e = 0;
  ASSERT_EQ(tsallis_spectrum_level(back.p, 99, &e, nullptr), TSALLIS_OK);
  EXPECT_EQ(e, 99.0);
}

TEST(CApi, JsonReports) {
  SpectrumHandle s;
  const double params[] = {-1.0, 1.0};
  ASSERT_EQ(tsallis_spectrum_build("two-level", params, 2, 0, 0, &s.p), TSALLIS_OK);

  Str land;
  ASSERT_EQ(tsallis_landscape_json(s.p, 0.5, 5.0, 1.0, 20.0, 0, 0, &land.p), TSALLIS_OK);
  const json l = json::parse(land.p);
  EXPECT_EQ(l["global_minimum"]["type"], "ground-plateau");

  Str tr;
  int found = 0;
  ASSERT_EQ(tsallis_transition_json(s.p, 0.5, 0.5, 5.0, 0, &found, &tr.p), TSALLIS_OK);
  EXPECT_EQ(found, 1);
  const json t = json::parse(tr.p);
  EXPECT_NEAR(t["beta_star"].get<double>(), 1.0635257174251396785, 1e-8);

  Str solve;
  ASSERT_EQ(tsallis_solve_json(s.p, 0.5, 0.5, 1.0, 0.0, &solve.p), TSALLIS_OK);
  EXPECT_EQ(json::parse(solve.p)["regime"], "q<1-interior");

  tsallis_suite_options opt;
  tsallis_suite_options_init(&opt);
  opt.trials = 5;
  int passed = 0;
  Str ver;
  ASSERT_EQ(tsallis_verify_json("klein", &opt, &passed, &ver.p), TSALLIS_OK);
  EXPECT_EQ(passed, 1);
  EXPECT_EQ(json::parse(ver.p)["suite"], "klein");
  EXPECT_NE(std::string(tsallis_suite_names()).find("bound-qgt"), std::string::npos);
}

TEST(CApi, Sweep) {
  SpectrumHandle h;
  ASSERT_EQ(tsallis_spectrum_build("harmonic", nullptr, 0, 0, 0, &h.p), TSALLIS_OK);
  double T[100];
  for (int i = 0; i < 100; ++i) T[i] = 0.5 * std::pow(10.0, i / 99.0);
  tsallis_sweep* sw = nullptr;
  ASSERT_EQ(tsallis_sweep_run(h.p, 1.5, 1.0, T, 100, &sw), TSALLIS_OK);
  EXPECT_EQ(tsallis_sweep_row_count(sw), 100u);
  tsallis_sweep_row row{};
  ASSERT_EQ(tsallis_sweep_row_at(sw, 0, &row), TSALLIS_OK);
  EXPECT_EQ(row.regime, TSALLIS_REGIME_Q_ABOVE_ONE);
  EXPECT_NEAR(row.F, row.U - row.T * row.S, 1e-12);
  EXPECT_EQ(tsallis_sweep_row_at(sw, 100, &row), TSALLIS_INVALID_ARGUMENT);
  tsallis_thermo_check c{};
  ASSERT_EQ(tsallis_sweep_check(sw, 0.0, &c), TSALLIS_OK);
  EXPECT_TRUE(c.ok);
  Str csv;
  ASSERT_EQ(tsallis_sweep_csv(sw, "x", &csv.p), TSALLIS_OK);
  EXPECT_NE(std::string(csv.p).find("T,beta,alpha,U,S,F,regime"), std::string::npos);
  Str js;
  ASSERT_EQ(tsallis_sweep_json(sw, 1, &js.p), TSALLIS_OK);
  EXPECT_TRUE(json::parse(js.p)["check"]["ok"].get<bool>());
  tsallis_sweep_free(sw);
}

}  // namespace
