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

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace tsallis {

/// One distinct eigenvalue of H together with its multiplicity.
struct Level {
  double energy = 0.0;
  std::uint64_t multiplicity = 1;
};

enum class SpectrumKind { finite_list, harmonic, box, geometric, factorial };

const char* to_string(SpectrumKind kind) noexcept;

inline constexpr std::uint64_t kDefaultTruncation = std::uint64_t{1} << 20;

/// Discrete spectrum of a Hamiltonian bounded from below, stored as
/// strictly increasing distinct energies with multiplicities.
///
/// Infinite families keep an explicit cache of the lowest levels covering at
/// least `truncation` repeated eigenvalues. Counting operations refuse to
/// answer beyond the cache. Spectral sums go further: the harmonic, geometric
/// and factorial families evaluate any level from their defining rule, the
/// box family has a certified Weyl-law tail (see `power_sum.hpp`).
///
/// Immutable after construction.
class Spectrum {
 public:
  /// Finite spectrum. Energies must be strictly increasing, finite, with
  /// multiplicities >= 1, and there must be at least two distinct levels.
  static Spectrum from_levels(std::vector<Level> levels);
  static Spectrum from_energies(std::span<const double> energies);

  /// eps_n = n, n >= 0, multiplicity one.
  static Spectrum harmonic(std::uint64_t truncation = kDefaultTruncation);
  /// Dirichlet box: eps = |k|^2 over k in {1,2,...}^dim.
  static Spectrum box(int dim, std::uint64_t truncation = kDefaultTruncation);
  /// eps_n = ratio^n, n >= 0. Cache also stops before overflow.
  static Spectrum geometric(double ratio, std::uint64_t truncation = kDefaultTruncation);
  /// eps_0 = 1 (simple); for n >= 2 the level n! has multiplicity (n-1)(n-1)!.
  static Spectrum factorial(std::uint64_t truncation = kDefaultTruncation);

  SpectrumKind kind() const noexcept { return kind_; }
  bool is_finite() const noexcept { return kind_ == SpectrumKind::finite_list; }

  /// Cached levels. For finite spectra this is the whole spectrum.
  std::span<const Level> levels() const noexcept { return levels_; }
  std::size_t level_count() const noexcept { return levels_.size(); }

  /// Number of repeated eigenvalues covered by the cache (the dimension for
  /// finite spectra).
  std::uint64_t cached_count() const noexcept { return cumulative_.back(); }

  /// Number of repeated eigenvalues in cached levels [0, level).
  std::uint64_t cumulative_count(std::size_t level) const { return cumulative_.at(level); }

  double ground_energy() const noexcept { return levels_.front().energy; }
  std::uint64_t ground_multiplicity() const noexcept { return levels_.front().multiplicity; }
  /// First excited energy eps_m.
  double first_excited_energy() const noexcept { return levels_[1].energy; }

  /// eps_n with repetition by multiplicity. Throws truncation past the cache.
  double eigenvalue(std::uint64_t n) const;

  /// Level with index `j`; beyond the cache only for rule-based families.
  /// Returns nullopt when the level cannot be produced.
  std::optional<Level> level_at(std::size_t j) const;

  int box_dimension() const noexcept { return box_dim_; }
  double geometric_ratio() const noexcept { return ratio_; }

  /// Critical entropic parameter of the family: 1 when bounded, 2 for the
  /// harmonic oscillator, 1 + 2/d for the box, +inf for geometric growth. The
  /// factorial family grows like its repeated index, hence 2.
  double critical_q() const noexcept;

  std::string describe() const;
  /// Stable FNV-1a digest over family, parameters and cached levels.
  std::string digest() const;

 private:
  Spectrum(SpectrumKind kind, std::vector<Level> levels);

  SpectrumKind kind_;
  std::vector<Level> levels_;
  std::vector<std::uint64_t> cumulative_;
  int box_dim_ = 0;
  double ratio_ = 0.0;
};

/// Families accepted by `build_spectrum`.
enum class Family { finite_list, two_level, harmonic, box, geometric, factorial };

std::optional<Family> parse_family(std::string_view name);

/// `params`: finite_list takes energies (distinct, increasing) or
/// energy/multiplicity pairs when `params_are_pairs`; two_level takes two
/// energies; box takes d; geometric takes a.
Spectrum build_spectrum(Family family, std::span<const double> params,
                        std::uint64_t truncation = kDefaultTruncation,
                        bool params_are_pairs = false);

/// #{n : eps_n < alpha} with multiplicity.
std::uint64_t count_below(const Spectrum& s, double alpha);

/// (1/N) sum_{n<N} eps_n.
double partial_average(const Spectrum& s, std::uint64_t n);

struct QcEstimateOptions {
  double shift = 0.0;           ///< added to eps_n - eps_0 before the log
  double window_fraction = 0.25;///< window is [n_max * fraction, n_max]
  std::size_t max_points = 512; ///< log-spaced subsample cap
};

struct QcEstimate {
  double qc = 1.0;              ///< +inf for super-power-law growth
  double slope = 0.0;
  double intercept = 0.0;
  double residual_rms = 0.0;
  double slope_lower = 0.0;     ///< slope over the lower half window
  double slope_upper = 0.0;     ///< slope over the upper half window
  std::uint64_t window_lo = 0;
  std::uint64_t window_hi = 0;
  std::size_t points = 0;
  bool bounded = false;
  bool super_power_law = false;
};

/// Tail log-log fit of eps_n - eps_0 against n; q_c ~ 1 + slope.
QcEstimate estimate_qc(const Spectrum& s, std::uint64_t n_max,
                       const QcEstimateOptions& options = {});

struct GrowthCheck {
  bool pass = true;
  std::optional<std::uint64_t> first_violation;
  double worst_ratio = 0.0;     ///< min over checked N of eps_N / average_N
};

/// Checks eps_N >= a * (1/N) sum_{n<N} eps_n for every N in [n0, n_max].
/// Works level by level, so n_max may be far larger than the level count.
GrowthCheck check_growth_condition(const Spectrum& s, double a, std::uint64_t n0,
                                   std::uint64_t n_max);

// Text format: one level per line "energy multiplicity", '#' comments.
Spectrum parse_spectrum_text(std::string_view text);
Spectrum load_spectrum_file(const std::string& path);
/// Writes up to `max_levels` cached levels (all when 0). `header` lines are
/// emitted as '#' comments.
std::string format_spectrum(const Spectrum& s, std::size_t max_levels = 0,
                            std::string_view header = {});

}  // namespace tsallis
