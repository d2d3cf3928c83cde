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
#include <complex>
#include <vector>

#include "tsallis/convexity_lab.hpp"
#include "tsallis/error.hpp"
#include "tsallis/qgt.hpp"
#include "tsallis/qlt.hpp"

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

TEST(ConvexityLab, DensityMatrixValidation) {
  CMatrix m = CMatrix::Identity(2, 2) * 0.5;
  EXPECT_NO_THROW(DensityMatrix{m});
  CMatrix bad_trace = CMatrix::Identity(2, 2);
  EXPECT_EQ(code_of([&] { DensityMatrix{bad_trace}; }), ErrorCode::invariant);
  CMatrix non_herm = m;
  non_herm(0, 1) = {0.1, 0.0};
  EXPECT_EQ(code_of([&] { DensityMatrix{non_herm}; }), ErrorCode::invariant);
  CMatrix negative = CMatrix::Zero(2, 2);
  negative(0, 0) = 1.5;
  negative(1, 1) = -0.5;
  EXPECT_EQ(code_of([&] { DensityMatrix{negative}; }), ErrorCode::invariant);
}

TEST(ConvexityLab, RandomDensityMatrixIsValidAndSeeded) {
  const DensityMatrix a = random_density_matrix(5, 42);
  const DensityMatrix b = random_density_matrix(5, 42);
  EXPECT_EQ((a.matrix() - b.matrix()).norm(), 0.0);
  EXPECT_NEAR(a.matrix().trace().real(), 1.0, 1e-14);
  EXPECT_GE(a.eigenvalues().minCoeff(), 0.0);
  const DensityMatrix c = random_density_matrix(5, 43);
  EXPECT_GT((a.matrix() - c.matrix()).norm(), 0.0);
}

TEST(ConvexityLab, MatrixPower) {
  const std::vector<double> w{0.5, 0.3, 0.2, 0.0};
  const DensityMatrix rho = DensityMatrix::diagonal(w);
  const CMatrix p = rho.power(0.5);
  for (int i = 0; i < 4; ++i) EXPECT_NEAR(p(i, i).real(), std::sqrt(w[i]), 1e-15);
  EXPECT_EQ(p(3, 3), std::complex<double>(0.0, 0.0));
}

TEST(ConvexityLab, DiagonalObservablesMatchTrialState) {
  const std::vector<double> eps{0.0, 1.0};
  const HamiltonianMatrix H(eps);
  const DensityMatrix rho = DensityMatrix::diagonal(shifted_trial_weights(H, 1.5, 1.0));
  const DmObservables o = dm_observables(rho, H, 1.5);
  EXPECT_NEAR(o.U, 1.0 / 9.0, 1e-15);
  EXPECT_NEAR(o.S, 0.390031056200151418585394958514, 1e-15);
  EXPECT_NEAR(g_functional(rho, H, 1.5, 0.5), -0.105572809000084121436330532508, 1e-15);
}

TEST(ConvexityLab, KleinGapSquareIsFrobenius) {
  // f = x^2: Tr (A - B)^2 with W = 1.
  const DensityMatrix a = random_density_matrix(4, 7);
  const std::vector<double> B{0.1, 0.2, 0.3, 0.4};
  const std::vector<double> W(4, 1.0);
  const KleinGap g = klein_gap(a.matrix(), B, square_function(), W);
  CMatrix Bm = CMatrix::Zero(4, 4);
  for (int i = 0; i < 4; ++i) Bm(i, i) = B[static_cast<std::size_t>(i)];
  EXPECT_NEAR(g.gap, (a.matrix() - Bm).squaredNorm(), 1e-14);
  EXPECT_NEAR(g.gap, g.termwise, 1e-14);
  EXPECT_GE(g.min_term, -1e-15);
}

TEST(ConvexityLab, KleinGapRejectsNonDiagonal) {
  const DensityMatrix a = random_density_matrix(3, 1);
  EXPECT_EQ(code_of([&] {
              klein_gap(a.matrix(), a.matrix(), square_function(), CMatrix::Identity(3, 3));
            }),
            ErrorCode::invalid_argument);
}

TEST(ConvexityLab, PowerFunctionConvexity) {
  for (double q : {0.25, 0.5, 0.75, 1.25, 1.5, 2.0}) {
    const ConvexityPrecheck p = convexity_precheck(q);
    EXPECT_TRUE(p.ok) << q;
  }
}

TEST(ConvexityLab, QuadraticBoundsHold) {
  const HamiltonianMatrix H({-0.3, 0.0, 0.8, 2.0});
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    const DensityMatrix rho = random_density_matrix(4, seed);
    const QuadraticBound b = verify_bound_qgt(rho, H, 1.5, 1.2);
    EXPECT_TRUE(b.ok) << seed << " margin " << b.margin;
    const QuadraticBound c = verify_bound_qlt(rho, H, 0.5, 1.0);
    EXPECT_TRUE(c.ok) << seed << " margin " << c.margin;
  }
}

TEST(ConvexityLab, BoundEqualityAtTrialState) {
  const HamiltonianMatrix H({-0.3, 0.0, 0.8, 2.0});
  const DensityMatrix trial = DensityMatrix::diagonal(shifted_trial_weights(H, 1.5, 1.2));
  const QuadraticBound b = verify_bound_qgt(trial, H, 1.5, 1.2);
  EXPECT_NEAR(b.lhs, 0.0, 1e-12);
  EXPECT_NEAR(b.rhs, 0.0, 1e-12);
  const DensityMatrix cut = DensityMatrix::diagonal(cutoff_trial_weights(H, 0.5, 1.0));
  const QuadraticBound c = verify_bound_qlt(cut, H, 0.5, 1.0);
  EXPECT_NEAR(c.lhs, 0.0, 1e-12);
  EXPECT_NEAR(c.rhs, 0.0, 1e-12);
}

TEST(ConvexityLab, LogConvexityGap) {
  const Spectrum s = Spectrum::from_levels({{0.0, 2}, {0.4, 1}, {1.5, 3}});
  EXPECT_LE(log_convexity_gap(s, TraceFamily::shift_plus, 1.5, 0.7, 0.5, 3.0), 0.0);
  EXPECT_LE(log_convexity_gap(s, TraceFamily::cutoff, 0.5, 1.0, 0.5, 3.0), 0.0);
  EXPECT_LE(log_convexity_gap(Spectrum::harmonic(), TraceFamily::shift_plus, 1.5, 1.0, 1.2, 4.0),
            0.0);
  const std::vector<Level> single{{0.3, 5}};
  EXPECT_EQ(log_convexity_gap(single, TraceFamily::shift_plus, 1.5, 0.7, 0.5, 3.0), 0.0);
  // Cut family with only the ground level below alpha.
  EXPECT_EQ(log_convexity_gap(s, TraceFamily::cutoff, 0.5, 0.3, 0.5, 3.0), 0.0);
}

TEST(ConvexityLab, CrossModuleAgainstFormulas) {
  const Spectrum s = Spectrum::from_levels({{0.0, 1}, {0.6, 1}, {1.1, 1}, {2.0, 1}});
  const HamiltonianMatrix H({0.0, 0.6, 1.1, 2.0});
  const TrialState st = trial_state(s, 1.25, 0.9);
  const Observables o = observables(st, {1.25, 1.0, 1.0});
  const DmObservables d =
      dm_observables(DensityMatrix::diagonal(shifted_trial_weights(H, 1.25, 0.9)), H, 1.25);
  EXPECT_NEAR(d.U, o.U, 1e-13);
  EXPECT_NEAR(d.S, o.S, 1e-13);
  EXPECT_NEAR(d.trace_rho_q, st.trace_rho_q, 1e-13);
}

}  // namespace
}  // namespace tsallis
