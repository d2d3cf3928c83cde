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
#include <vector>

#include "tsallis/error.hpp"
#include "tsallis/qgt.hpp"

namespace tsallis {
namespace {

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::internal;
}

// H = diag(0, 1), q = 3/2, alpha = 1: weights (4/5, 1/5).
constexpr double kTwoZeta = 1.25;
constexpr double kTwoTrace = 0.804984471899924290707302520743;
constexpr double kTwoU = 1.0 / 9.0;
constexpr double kTwoS = 0.390031056200151418585394958514;
constexpr double kTwoBeta = 1.44897204941986372327314453734;
constexpr double kTwoF = -0.158066652777647960746403499217;

// Harmonic oscillator, q = 3/2, alpha = 1: zeta = zeta(2), Tr = zeta(3)/zeta(2)^(3/2).
constexpr double kHarmZeta = 1.64493406684822643647241516665;
constexpr double kHarmBeta = 0.832738822133737262163909425457;
constexpr double kHarmTrace = 0.569773549702324328746396509695;
constexpr double kHarmU = 0.368432777620205875736765853985;
constexpr double kHarmS = 0.86045290059535134250720698061;

const Spectrum& two_level() {
  static const Spectrum s = Spectrum::from_energies(std::vector<double>{0.0, 1.0});
  return s;
}

TEST(Qgt, ValidateRejectsBadParameters) {
  EXPECT_EQ(code_of([] { validate({1.0, 1.0, 1.0}); }), ErrorCode::invalid_argument);
  EXPECT_EQ(code_of([] { validate({0.0, 1.0, 1.0}); }), ErrorCode::invalid_argument);
  EXPECT_EQ(code_of([] { validate({1.5, -1.0, 1.0}); }), ErrorCode::domain);
  EXPECT_EQ(code_of([] { validate({1.5, 1.0, 0.0}); }), ErrorCode::invalid_argument);
}

TEST(Qgt, EntropyOfWeights) {
  const std::vector<double> pure{1.0, 0.0};
  EXPECT_EQ(entropy_of_weights(pure, 1.5), 0.0);
  const std::vector<double> uniform{0.25, 0.25, 0.25, 0.25};
  EXPECT_NEAR(entropy_of_weights(uniform, 2.0), 0.75, 1e-15);
}

TEST(Qgt, TwoLevelTrialState) {
  const TrialState st = trial_state(two_level(), 1.5, 1.0);
  EXPECT_NEAR(st.zeta, kTwoZeta, 1e-15);
  ASSERT_EQ(st.weights.size(), 2u);
  EXPECT_NEAR(st.weights[0], 0.8, 1e-15);
  EXPECT_NEAR(st.weights[1], 0.2, 1e-15);
  EXPECT_NEAR(st.trace_rho_q, kTwoTrace, 1e-15);
  EXPECT_NEAR(f_alpha(two_level(), 1.5, 1.0, 1.5), 1.125, 1e-15);

  const double beta = beta_of_alpha(two_level(), 1.5, 1.0);
  EXPECT_NEAR(beta, kTwoBeta, 1e-14);
  const Observables o = observables(st, {1.5, beta, 1.0});
  EXPECT_NEAR(o.U, kTwoU, 1e-15);
  EXPECT_NEAR(o.S, kTwoS, 1e-15);
  EXPECT_NEAR(o.F, kTwoF, 1e-14);
  EXPECT_NEAR(o.U_alt, o.U, 1e-14);
}

TEST(Qgt, TwoLevelEquilibriumRoundTrip) {
  const Equilibrium e = equilibrium(two_level(), {1.5, kTwoBeta, 1.0});
  EXPECT_NEAR(e.state.alpha, 1.0, 1e-12);
  EXPECT_NEAR(e.obs.F, kTwoF, 1e-13);
  EXPECT_NEAR(e.beta_check, kTwoBeta, 1e-12 * kTwoBeta);
}

TEST(Qgt, QEqualsTwoWeights) {
  const Spectrum s = Spectrum::from_energies(std::vector<double>{-1.0, 1.0});
  const TrialState st = trial_state(s, 2.0, 2.0);
  EXPECT_NEAR(st.weights[0], 0.75, 1e-15);
  EXPECT_NEAR(st.weights[1], 0.25, 1e-15);
}

TEST(Qgt, HarmonicTrialState) {
  const Spectrum h = Spectrum::harmonic();
  const TrialState st = trial_state(h, 1.5, 1.0);
  EXPECT_NEAR(st.zeta, kHarmZeta, 1e-14 * kHarmZeta);
  EXPECT_NEAR(st.trace_rho_q, kHarmTrace, 1e-13);
  const double beta = beta_of_alpha(h, 1.5, 1.0);
  EXPECT_NEAR(beta, kHarmBeta, 1e-13);
  const Observables o = observables(st, {1.5, beta, 1.0});
  EXPECT_NEAR(o.U, kHarmU, 1e-13);
  EXPECT_NEAR(o.S, kHarmS, 1e-13);
  EXPECT_NEAR(alpha_of_beta(h, 1.5, beta), 1.0, 1e-12);
}

TEST(Qgt, BetaDecreasesWithAlpha) {
  const Spectrum h = Spectrum::harmonic();
  double prev = beta_of_alpha(h, 1.5, 1e-3);
  for (double a = 2e-3; a < 100; a *= 1.7) {
    const double b = beta_of_alpha(h, 1.5, a);
    EXPECT_LT(b, prev);
    prev = b;
  }
}

TEST(Qgt, NearGroundAsymptote) {
  // beta ~ m^(1-q) / ((q-1)(alpha + eps_0)) as alpha -> -eps_0.
  const Spectrum s = Spectrum::from_levels({{0.0, 3}, {1.0, 1}, {2.0, 2}});
  for (double q : {1.25, 1.5, 2.0}) {
    const double d = 1e-6;
    const double want = std::pow(3.0, 1.0 - q) / ((q - 1.0) * d);
    EXPECT_NEAR(beta_of_alpha(s, q, d), want, 0.01 * want) << "q=" << q;
  }
}

TEST(Qgt, RegimeGuards) {
  const Spectrum h = Spectrum::harmonic();
  EXPECT_EQ(code_of([&] { equilibrium(h, {2.0, 1.0, 1.0}); }), ErrorCode::unsupported_regime);
  EXPECT_EQ(code_of([&] { equilibrium(two_level(), {2.5, 1.0, 1.0}); }),
            ErrorCode::unsupported_regime);
  EXPECT_EQ(code_of([&] { equilibrium(two_level(), {0.5, 1.0, 1.0}); }),
            ErrorCode::unsupported_regime);
  EXPECT_EQ(code_of([&] { beta_of_alpha(h, 2.5, 1.0, {true}); }), ErrorCode::divergence);
  EXPECT_EQ(code_of([&] { beta_of_alpha(two_level(), 1.5, -0.5); }), ErrorCode::domain);
  // Box d = 1 has q_c = 3, so q = 2.5 converges when explicitly allowed.
  EXPECT_GT(beta_of_alpha(Spectrum::box(1), 2.5, 1.0, {true}), 0.0);
  EXPECT_EQ(code_of([&] { beta_of_alpha(Spectrum::box(1), 2.5, 1.0); }),
            ErrorCode::unsupported_regime);
}

TEST(Qgt, FreeEnergyMinimalAtEquilibrium) {
  // F(alpha) at fixed beta is stationary at the solution.
  const Spectrum s = Spectrum::from_levels({{0.0, 1}, {0.7, 2}, {1.9, 1}});
  const QParams p{1.5, 2.0, 1.0};
  const Equilibrium e = equilibrium(s, p);
  auto F = [&](double a) { return observables(trial_state(s, 1.5, a), p).F; };
  EXPECT_LE(e.obs.F, F(e.state.alpha * 1.01) + 1e-15);
  EXPECT_LE(e.obs.F, F(e.state.alpha * 0.99) + 1e-15);
}

}  // namespace
}  // namespace tsallis
