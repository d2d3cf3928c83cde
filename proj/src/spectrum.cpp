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

#include "tsallis/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <numbers>

#include "tsallis/error.hpp"

namespace tsallis {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::invalid_argument: return "invalid-argument";
    case ErrorCode::domain: return "domain";
    case ErrorCode::divergence: return "divergence";
    case ErrorCode::truncation: return "truncation";
    case ErrorCode::unsupported_regime: return "unsupported-regime";
    case ErrorCode::insufficient_data: return "insufficient-data";
    case ErrorCode::parse: return "parse";
    case ErrorCode::io: return "io";
    case ErrorCode::invariant: return "invariant";
    case ErrorCode::internal: return "internal";
  }
  return "unknown";
}

const char* to_string(SpectrumKind kind) noexcept {
  switch (kind) {
    case SpectrumKind::finite_list: return "finite-list";
    case SpectrumKind::harmonic: return "harmonic";
    case SpectrumKind::box: return "box";
    case SpectrumKind::geometric: return "geometric";
    case SpectrumKind::factorial: return "factorial";
  }
  return "unknown";
}

namespace {

constexpr double kMaxEnergy = 1e300;

void validate_levels(const std::vector<Level>& levels) {
  require(!levels.empty(), ErrorCode::invalid_argument, "spectrum has no levels");
  for (std::size_t i = 0; i < levels.size(); ++i) {
    require(std::isfinite(levels[i].energy), ErrorCode::invalid_argument,
            "spectrum energies must be finite");
    require(levels[i].multiplicity >= 1, ErrorCode::invalid_argument,
            "multiplicities must be >= 1");
    if (i > 0) {
      require(levels[i].energy > levels[i - 1].energy, ErrorCode::invalid_argument,
              "energies must be strictly increasing");
    }
  }
}

}  // namespace

Spectrum::Spectrum(SpectrumKind kind, std::vector<Level> levels)
    : kind_(kind), levels_(std::move(levels)) {
  validate_levels(levels_);
  cumulative_.reserve(levels_.size() + 1);
  cumulative_.push_back(0);
  for (const auto& l : levels_) cumulative_.push_back(cumulative_.back() + l.multiplicity);
}

Spectrum Spectrum::from_levels(std::vector<Level> levels) {
  require(levels.size() >= 2, ErrorCode::invalid_argument,
          "H is not a multiple of the identity: a finite spectrum needs two distinct levels");
  return Spectrum(SpectrumKind::finite_list, std::move(levels));
}

Spectrum Spectrum::from_energies(std::span<const double> energies) {
  std::vector<Level> levels;
  levels.reserve(energies.size());
  for (double e : energies) levels.push_back({e, 1});
  return from_levels(std::move(levels));
}

Spectrum Spectrum::harmonic(std::uint64_t truncation) {
  require(truncation >= 2, ErrorCode::invalid_argument, "truncation must be >= 2");
  std::vector<Level> levels(truncation);
  for (std::uint64_t n = 0; n < truncation; ++n) levels[n] = {static_cast<double>(n), 1};
  return Spectrum(SpectrumKind::harmonic, std::move(levels));
}

Spectrum Spectrum::box(int dim, std::uint64_t truncation) {
  require(dim >= 1 && dim <= 8, ErrorCode::invalid_argument, "box dimension must be in [1, 8]");
  require(truncation >= 2, ErrorCode::invalid_argument, "truncation must be >= 2");
  const double d = dim;
  const double vol = std::pow(std::numbers::pi, d / 2) / std::tgamma(d / 2 + 1) / std::pow(2.0, d);
  // The leading Weyl term over-counts lattice points, so start there and grow.
  double cut = std::pow(static_cast<double>(truncation) / vol, 2.0 / d);
  std::vector<std::uint64_t> energies;
  for (;;) {
    energies.clear();
    const auto cut_int = static_cast<std::uint64_t>(std::floor(cut));
    std::function<void(int, std::uint64_t)> visit = [&](int axis, std::uint64_t partial) {
      for (std::uint64_t k = 1;; ++k) {
        const std::uint64_t e = partial + k * k;
        if (e > cut_int) break;
        if (axis + 1 == dim) {
          energies.push_back(e);
        } else {
          visit(axis + 1, e);
        }
      }
    };
    visit(0, 0);
    if (energies.size() >= truncation) break;
    cut *= 1.25;
  }
  std::sort(energies.begin(), energies.end());
  std::vector<Level> levels;
  for (std::uint64_t e : energies) {
    if (!levels.empty() && levels.back().energy == static_cast<double>(e)) {
      ++levels.back().multiplicity;
    } else {
      levels.push_back({static_cast<double>(e), 1});
    }
  }
  Spectrum s(SpectrumKind::box, std::move(levels));
  s.box_dim_ = dim;
  return s;
}

Spectrum Spectrum::geometric(double ratio, std::uint64_t truncation) {
  require(std::isfinite(ratio) && ratio > 1.0, ErrorCode::invalid_argument,
          "geometric ratio must satisfy a > 1");
  require(truncation >= 2, ErrorCode::invalid_argument, "truncation must be >= 2");
  std::vector<Level> levels;
  double e = 1.0;
  for (std::uint64_t n = 0; n < truncation && e <= kMaxEnergy; ++n) {
    if (!levels.empty() && !(e > levels.back().energy)) break;
    levels.push_back({e, 1});
    e = std::pow(ratio, static_cast<double>(n + 1));
  }
  require(levels.size() >= 2, ErrorCode::invalid_argument, "geometric ratio too close to 1");
  Spectrum s(SpectrumKind::geometric, std::move(levels));
  s.ratio_ = ratio;
  return s;
}

Spectrum Spectrum::factorial(std::uint64_t truncation) {
  require(truncation >= 2, ErrorCode::invalid_argument, "truncation must be >= 2");
  std::vector<Level> levels{{1.0, 1}};
  std::uint64_t count = 1;
  std::uint64_t prev_fact = 1;  // (n-1)!
  for (std::uint64_t n = 2; count < truncation; ++n) {
    const std::uint64_t mult = (n - 1) * prev_fact;
    const std::uint64_t fact = n * prev_fact;
    levels.push_back({static_cast<double>(fact), mult});
    count += mult;
    prev_fact = fact;
    if (n >= 20) break;  // 20! is the last factorial in 64 bits
  }
  return Spectrum(SpectrumKind::factorial, std::move(levels));
}

double Spectrum::eigenvalue(std::uint64_t n) const {
  if (n >= cached_count())
    fail(ErrorCode::truncation, "eigenvalue index " + std::to_string(n) + " exceeds the cached " +
                                    std::to_string(cached_count()) + " eigenvalues");
  const auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), n);
  return levels_[static_cast<std::size_t>(it - cumulative_.begin()) - 1].energy;
}

std::optional<Level> Spectrum::level_at(std::size_t j) const {
  if (j < levels_.size()) return levels_[j];
  switch (kind_) {
    case SpectrumKind::harmonic:
      return Level{static_cast<double>(j), 1};
    case SpectrumKind::geometric: {
      const double e = std::pow(ratio_, static_cast<double>(j));
      if (!std::isfinite(e)) return std::nullopt;
      return Level{e, 1};
    }
    case SpectrumKind::factorial: {
      // Multiplicity j * j! no longer fits an integer; only exposed in cache.
      return std::nullopt;
    }
    default:
      return std::nullopt;
  }
}

double Spectrum::critical_q() const noexcept {
  switch (kind_) {
    case SpectrumKind::finite_list: return 1.0;
    case SpectrumKind::harmonic: return 2.0;
    case SpectrumKind::box: return 1.0 + 2.0 / box_dim_;
    case SpectrumKind::geometric: return std::numeric_limits<double>::infinity();
    case SpectrumKind::factorial: return 2.0;
  }
  return 1.0;
}

std::string Spectrum::describe() const {
  char buf[96];
  switch (kind_) {
    case SpectrumKind::box:
      std::snprintf(buf, sizeof buf, "box(d=%d)", box_dim_);
      return buf;
    case SpectrumKind::geometric:
      std::snprintf(buf, sizeof buf, "geometric(a=%.17g)", ratio_);
      return buf;
    case SpectrumKind::finite_list:
      std::snprintf(buf, sizeof buf, "finite-list(levels=%zu)", levels_.size());
      return buf;
    default:
      return to_string(kind_);
  }
}

std::string Spectrum::digest() const {
  std::uint64_t h = 14695981039346656037ull;
  auto mix = [&h](const void* data, std::size_t n) {
    const auto* p = static_cast<const unsigned char*>(data);
    for (std::size_t i = 0; i < n; ++i) {
      h ^= p[i];
      h *= 1099511628211ull;
    }
  };
  const int k = static_cast<int>(kind_);
  mix(&k, sizeof k);
  mix(&box_dim_, sizeof box_dim_);
  mix(&ratio_, sizeof ratio_);
  for (const auto& l : levels_) {
    mix(&l.energy, sizeof l.energy);
    mix(&l.multiplicity, sizeof l.multiplicity);
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::optional<Family> parse_family(std::string_view name) {
  if (name == "harmonic") return Family::harmonic;
  if (name == "box") return Family::box;
  if (name == "geometric") return Family::geometric;
  if (name == "factorial") return Family::factorial;
  if (name == "two-level") return Family::two_level;
  if (name == "list" || name == "finite-list") return Family::finite_list;
  return std::nullopt;
}

Spectrum build_spectrum(Family family, std::span<const double> params,
                        std::uint64_t truncation, bool params_are_pairs) {
  switch (family) {
    case Family::harmonic:
      return Spectrum::harmonic(truncation);
    case Family::factorial:
      return Spectrum::factorial(truncation);
    case Family::box: {
      require(params.size() == 1, ErrorCode::invalid_argument, "box takes one parameter d");
      const double d = params[0];
      require(d >= 1 && d == std::floor(d), ErrorCode::invalid_argument,
              "box dimension must be an integer >= 1");
      return Spectrum::box(static_cast<int>(d), truncation);
    }
    case Family::geometric:
      require(params.size() == 1, ErrorCode::invalid_argument, "geometric takes one parameter a");
      require(params[0] > 0, ErrorCode::invalid_argument, "geometric ratio must be positive");
      return Spectrum::geometric(params[0], truncation);
    case Family::two_level:
      require(params.size() == 2, ErrorCode::invalid_argument,
              "two-level takes two energies");
      return Spectrum::from_energies(params);
    case Family::finite_list: {
      if (!params_are_pairs) return Spectrum::from_energies(params);
      require(params.size() % 2 == 0, ErrorCode::invalid_argument,
              "energy/multiplicity pairs expected");
      std::vector<Level> levels;
      for (std::size_t i = 0; i < params.size(); i += 2) {
        const double m = params[i + 1];
        require(m >= 1 && m == std::floor(m), ErrorCode::invalid_argument,
                "multiplicity must be a positive integer");
        levels.push_back({params[i], static_cast<std::uint64_t>(m)});
      }
      return Spectrum::from_levels(std::move(levels));
    }
  }
  fail(ErrorCode::invalid_argument, "unknown spectrum family");
}

std::uint64_t count_below(const Spectrum& s, double alpha) {
  const auto levels = s.levels();
  if (!s.is_finite()) {
    require(alpha <= levels.back().energy, ErrorCode::truncation,
            "count_below: alpha beyond the cached spectrum (raise the truncation)");
  }
  const auto it = std::lower_bound(levels.begin(), levels.end(), alpha,
                                   [](const Level& l, double a) { return l.energy < a; });
  return s.cumulative_count(static_cast<std::size_t>(it - levels.begin()));
}

double partial_average(const Spectrum& s, std::uint64_t n) {
  require(n >= 1, ErrorCode::invalid_argument, "partial_average needs N >= 1");
  require(n <= s.cached_count(), ErrorCode::truncation,
          "partial_average: N exceeds the cached spectrum");
  double sum = 0.0;
  std::uint64_t remaining = n;
  for (const auto& l : s.levels()) {
    const std::uint64_t take = std::min(remaining, l.multiplicity);
    sum += static_cast<double>(take) * l.energy;
    remaining -= take;
    if (remaining == 0) break;
  }
  return sum / static_cast<double>(n);
}

namespace {

struct LineFit {
  double slope = 0, intercept = 0, rms = 0;
};

LineFit fit_line(std::span<const double> x, std::span<const double> y) {
  const double n = static_cast<double>(x.size());
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
  }
  LineFit f;
  f.slope = sxy / sxx;
  f.intercept = my - f.slope * mx;
  double ss = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double r = y[i] - (f.intercept + f.slope * x[i]);
    ss += r * r;
  }
  f.rms = std::sqrt(ss / n);
  return f;
}

}  // namespace

QcEstimate estimate_qc(const Spectrum& s, std::uint64_t n_max, const QcEstimateOptions& options) {
  QcEstimate est;
  if (s.is_finite()) {
    est.bounded = true;
    est.qc = 1.0;
    return est;
  }
  require(n_max >= 32, ErrorCode::invalid_argument, "estimate_qc needs n_max >= 32");
  require(n_max < s.cached_count(), ErrorCode::truncation,
          "estimate_qc: n_max exceeds the cached spectrum");
  require(options.window_fraction > 0 && options.window_fraction < 1,
          ErrorCode::invalid_argument, "window fraction must lie in (0, 1)");

  const std::uint64_t lo = std::max<std::uint64_t>(
      1, static_cast<std::uint64_t>(std::floor(static_cast<double>(n_max) * options.window_fraction)));
  est.window_lo = lo;
  est.window_hi = n_max;

  std::vector<std::uint64_t> idx;
  const std::uint64_t span = n_max - lo + 1;
  if (span <= options.max_points) {
    for (std::uint64_t n = lo; n <= n_max; ++n) idx.push_back(n);
  } else {
    const double llo = std::log(static_cast<double>(lo));
    const double lhi = std::log(static_cast<double>(n_max));
    for (std::size_t i = 0; i < options.max_points; ++i) {
      const double t = llo + (lhi - llo) * static_cast<double>(i) / (options.max_points - 1);
      const auto n = static_cast<std::uint64_t>(std::llround(std::exp(t)));
      if (idx.empty() || n > idx.back()) idx.push_back(std::clamp(n, lo, n_max));
    }
  }

  const double e0 = s.ground_energy();
  std::vector<double> x, y;
  for (std::uint64_t n : idx) {
    const double v = s.eigenvalue(n) - e0 + options.shift;
    if (v > 0) {
      x.push_back(std::log(static_cast<double>(n)));
      y.push_back(std::log(v));
    }
  }
  require(x.size() >= 8, ErrorCode::insufficient_data,
          "estimate_qc: fewer than 8 usable points in the fit window");
  est.points = x.size();

  const LineFit all = fit_line(x, y);
  est.slope = all.slope;
  est.intercept = all.intercept;
  est.residual_rms = all.rms;

  const double mid = 0.5 * (x.front() + x.back());
  const auto split = static_cast<std::size_t>(
      std::lower_bound(x.begin(), x.end(), mid) - x.begin());
  if (split >= 4 && x.size() - split >= 4) {
    const std::span<const double> xs(x), ys(y);
    est.slope_lower = fit_line(xs.first(split), ys.first(split)).slope;
    est.slope_upper = fit_line(xs.subspan(split), ys.subspan(split)).slope;
  } else {
    est.slope_lower = est.slope_upper = all.slope;
  }
  // A power law has a window-independent slope; geometric-type growth has a
  // local slope proportional to n.
  est.super_power_law =
      est.slope_upper > 1.25 * est.slope_lower + 0.05 || est.slope > 50.0;
  est.qc = est.super_power_law ? std::numeric_limits<double>::infinity() : 1.0 + est.slope;
  return est;
}

GrowthCheck check_growth_condition(const Spectrum& s, double a, std::uint64_t n0,
                                   std::uint64_t n_max) {
  require(a > 1.0, ErrorCode::invalid_argument, "growth condition needs a > 1");
  require(n_max < s.cached_count() || s.is_finite(), ErrorCode::truncation,
          "check_growth_condition: N_max exceeds the cached spectrum");
  GrowthCheck out;
  out.worst_ratio = std::numeric_limits<double>::infinity();
  const std::uint64_t first = std::max<std::uint64_t>(n0, 1);
  const std::uint64_t last = std::min<std::uint64_t>(n_max, s.cached_count() - 1);
  long double prefix = 0.0L;  // sum of eps_n, n < start of the current level
  std::uint64_t start = 0;
  for (const auto& lvl : s.levels()) {
    if (start > last) break;
    const std::uint64_t end = start + lvl.multiplicity - 1;
    const std::uint64_t lo = std::max(start, first);
    const std::uint64_t hi = std::min(end, last);
    if (lo <= hi) {
      // Within a level the running average grows towards E, so the ratio
      // eps_N / avg_N is smallest at the last index.
      const long double e = lvl.energy;
      auto avg = [&](std::uint64_t n) {
        return (prefix + static_cast<long double>(n - start) * e) / static_cast<long double>(n);
      };
      const long double ratio_hi = e / avg(hi);
      out.worst_ratio = std::min(out.worst_ratio, static_cast<double>(ratio_hi));
      if (out.pass && e < static_cast<long double>(a) * avg(hi)) {
        // Smallest N in [lo, hi] with N (a - 1) E > a (start E - prefix).
        const long double thr =
            static_cast<long double>(a) * (static_cast<long double>(start) * e - prefix) /
            ((static_cast<long double>(a) - 1.0L) * e);
        std::uint64_t n = thr < static_cast<long double>(lo)
                              ? lo
                              : std::min<std::uint64_t>(hi, static_cast<std::uint64_t>(thr));
        while (n > lo && e < static_cast<long double>(a) * avg(n - 1)) --n;
        while (n < hi && !(e < static_cast<long double>(a) * avg(n))) ++n;
        out.pass = false;
        out.first_violation = n;
      }
    }
    prefix += static_cast<long double>(lvl.multiplicity) * lvl.energy;
    start = end + 1;
  }
  return out;
}

}  // namespace tsallis
