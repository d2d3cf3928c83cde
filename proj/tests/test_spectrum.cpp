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
#include "tsallis/spectrum.hpp"

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

TEST(Spectrum, FiniteListKeepsLevels) {
  const Spectrum s = Spectrum::from_levels({{-1.0, 2}, {0.5, 1}, {3.0, 4}});
  EXPECT_TRUE(s.is_finite());
  EXPECT_EQ(s.level_count(), 3u);
  EXPECT_EQ(s.cached_count(), 7u);
  EXPECT_EQ(s.ground_energy(), -1.0);
  EXPECT_EQ(s.ground_multiplicity(), 2u);
  EXPECT_EQ(s.first_excited_energy(), 0.5);
  EXPECT_EQ(s.eigenvalue(1), -1.0);
  EXPECT_EQ(s.eigenvalue(2), 0.5);
  EXPECT_EQ(s.eigenvalue(6), 3.0);
  EXPECT_EQ(code_of([&] { s.eigenvalue(7); }), ErrorCode::truncation);
  EXPECT_EQ(s.critical_q(), 1.0);
}

TEST(Spectrum, FiniteListRejectsBadInput) {
  EXPECT_EQ(code_of([] { Spectrum::from_levels({{0.0, 1}}); }), ErrorCode::invalid_argument);
  EXPECT_EQ(code_of([] { Spectrum::from_levels({{0.0, 1}, {0.0, 1}}); }),
            ErrorCode::invalid_argument);
  EXPECT_EQ(code_of([] { Spectrum::from_levels({{1.0, 1}, {0.0, 1}}); }),
            ErrorCode::invalid_argument);
  EXPECT_EQ(code_of([] { Spectrum::from_levels({{0.0, 0}, {1.0, 1}}); }),
            ErrorCode::invalid_argument);
}

TEST(Spectrum, HarmonicLevels) {
  const Spectrum s = Spectrum::harmonic(1000);
  EXPECT_EQ(s.kind(), SpectrumKind::harmonic);
  EXPECT_FALSE(s.is_finite());
  EXPECT_GE(s.cached_count(), 1000u);
  for (std::uint64_t n = 0; n < 1000; ++n) EXPECT_EQ(s.eigenvalue(n), static_cast<double>(n));
  EXPECT_EQ(s.critical_q(), 2.0);
  const auto far = s.level_at(5000000);
  ASSERT_TRUE(far.has_value());
  EXPECT_EQ(far->energy, 5000000.0);
}

TEST(Spectrum, BoxGroundAndMultiplicities) {
  const Spectrum s = Spectrum::box(2, 200);
  EXPECT_EQ(s.ground_energy(), 2.0);
  EXPECT_EQ(s.ground_multiplicity(), 1u);
  EXPECT_EQ(s.first_excited_energy(), 5.0);
  EXPECT_EQ(s.levels()[1].multiplicity, 2u);
  EXPECT_EQ(s.levels()[2].energy, 8.0);
  EXPECT_DOUBLE_EQ(s.critical_q(), 2.0);
  EXPECT_DOUBLE_EQ(Spectrum::box(3, 100).critical_q(), 1.0 + 2.0 / 3.0);
}

TEST(Spectrum, GeometricAndFactorial) {
  const Spectrum g = Spectrum::geometric(2.0);
  EXPECT_EQ(g.eigenvalue(0), 1.0);
  EXPECT_EQ(g.eigenvalue(10), 1024.0);
  EXPECT_TRUE(std::isinf(g.critical_q()));

  const Spectrum f = Spectrum::factorial();
  EXPECT_EQ(f.ground_energy(), 1.0);
  EXPECT_EQ(f.ground_multiplicity(), 1u);
  EXPECT_EQ(f.levels()[1].energy, 2.0);
  EXPECT_EQ(f.levels()[1].multiplicity, 1u);
  EXPECT_EQ(f.levels()[2].energy, 6.0);
  EXPECT_EQ(f.levels()[2].multiplicity, 4u);
  EXPECT_EQ(f.levels()[3].energy, 24.0);
  EXPECT_EQ(f.levels()[3].multiplicity, 18u);
}

TEST(Spectrum, TwoLevelBuilder) {
  const std::vector<double> p{-1.0, 1.0};
  const Spectrum s = build_spectrum(Family::two_level, p);
  EXPECT_EQ(s.level_count(), 2u);
  EXPECT_EQ(s.ground_energy(), -1.0);
  EXPECT_EQ(parse_family("two-level"), Family::two_level);
  EXPECT_FALSE(parse_family("bogus").has_value());
}

TEST(Spectrum, DigestIsStable) {
  const Spectrum a = Spectrum::from_energies(std::vector<double>{0, 1});
  const Spectrum b = Spectrum::from_energies(std::vector<double>{0, 1});
  const Spectrum c = Spectrum::from_energies(std::vector<double>{0, 2});
  EXPECT_EQ(a.digest(), b.digest());
  EXPECT_NE(a.digest(), c.digest());
}

TEST(Spectrum, CountBelowAndPartialAverage) {
  const Spectrum h = Spectrum::harmonic(1000);
  EXPECT_EQ(count_below(h, 0.0), 0u);
  EXPECT_EQ(count_below(h, 0.5), 1u);
  EXPECT_EQ(count_below(h, 10.0), 10u);
  EXPECT_DOUBLE_EQ(partial_average(h, 10), 4.5);

  const Spectrum g = Spectrum::geometric(3.0);
  for (std::uint64_t N : {1u, 2u, 5u, 17u, 30u}) {
    const double eps_N = std::pow(3.0, static_cast<double>(N));
    EXPECT_DOUBLE_EQ(partial_average(g, N), (eps_N - 1.0) / (static_cast<double>(N) * 2.0));
  }
  EXPECT_EQ(code_of([&] { count_below(Spectrum::harmonic(100), 1e9); }), ErrorCode::truncation);
}

TEST(Spectrum, QcEstimates) {
  const QcEstimate h = estimate_qc(Spectrum::harmonic(), 2048);
  EXPECT_NEAR(h.qc, 2.0, 0.05);
  for (int d = 1; d <= 3; ++d) {
    const QcEstimate b = estimate_qc(Spectrum::box(d), 2048);
    EXPECT_NEAR(b.qc, 1.0 + 2.0 / d, 0.08) << "d=" << d;
  }
  EXPECT_TRUE(estimate_qc(Spectrum::from_energies(std::vector<double>{0, 1, 2}), 3).bounded);
  EXPECT_TRUE(estimate_qc(Spectrum::geometric(2.0), 200).super_power_law);
}

TEST(Spectrum, GrowthCondition) {
  const Spectrum f = Spectrum::factorial();
  const GrowthCheck g2 = check_growth_condition(f, 2.0, 1, 1000);
  EXPECT_FALSE(g2.pass);
  ASSERT_TRUE(g2.first_violation.has_value());
  EXPECT_EQ(*g2.first_violation, 4u);
  const GrowthCheck g15 = check_growth_condition(f, 1.5, 1, 1000);
  ASSERT_TRUE(g15.first_violation.has_value());
  EXPECT_EQ(*g15.first_violation, 5u);
  const Spectrum big = Spectrum::factorial(std::uint64_t{1} << 36);
  const GrowthCheck g11 = check_growth_condition(big, 1.1, 1, big.cached_count() - 1);
  EXPECT_FALSE(g11.pass);
  ASSERT_TRUE(g11.first_violation.has_value());
  EXPECT_EQ(*g11.first_violation, 36618226u);

  EXPECT_TRUE(check_growth_condition(Spectrum::geometric(2.0), 1.5, 1, 60).pass);
}

TEST(SpectrumIo, ParsesCommentsAndBlankLines) {
  const Spectrum s = parse_spectrum_text("# header\n\n0 1   # ground\n1 1\n");
  EXPECT_EQ(s.level_count(), 2u);
  EXPECT_EQ(s.first_excited_energy(), 1.0);
}

TEST(SpectrumIo, RejectsMalformedWithLineNumber) {
  try {
    parse_spectrum_text("1 1\n1 2\n");
    FAIL() << "expected a parse error";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::parse);
    EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos);
  }
  EXPECT_EQ(code_of([] { parse_spectrum_text("0 1\n1 0\n"); }), ErrorCode::parse);
  EXPECT_EQ(code_of([] { parse_spectrum_text("0 x\n1 1\n"); }), ErrorCode::parse);
  EXPECT_EQ(code_of([] { parse_spectrum_text("0 1 2\n1 1\n"); }), ErrorCode::parse);
  EXPECT_EQ(code_of([] { load_spectrum_file("/nonexistent/file"); }), ErrorCode::io);
}

TEST(SpectrumIo, HarmonicRoundTrip) {
  const Spectrum h = Spectrum::harmonic();
  const Spectrum back = parse_spectrum_text(format_spectrum(h, 100, "harmonic\nfirst 100"));
  ASSERT_EQ(back.level_count(), 100u);
  for (std::size_t i = 0; i < 100; ++i) {
    EXPECT_EQ(back.levels()[i].energy, h.levels()[i].energy);
    EXPECT_EQ(back.levels()[i].multiplicity, h.levels()[i].multiplicity);
  }
}

TEST(SpectrumIo, FullPrecisionRoundTrip) {
  const Spectrum s = Spectrum::from_energies(std::vector<double>{0.1, 1.0 / 3.0, M_PI});
  const Spectrum back = parse_spectrum_text(format_spectrum(s));
  for (std::size_t i = 0; i < 3; ++i) EXPECT_EQ(back.levels()[i].energy, s.levels()[i].energy);
}

}  // namespace
}  // namespace tsallis
