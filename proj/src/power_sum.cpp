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

#include "tsallis/power_sum.hpp"

#include <algorithm>
#include <array>
#include <boost/math/quadrature/tanh_sinh.hpp>
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include "tsallis/error.hpp"

namespace tsallis {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();
// Stop summing once the certified remainder is below this fraction.
constexpr double kTailTarget = 1e-16;

struct Tail {
  double estimate = 0.0;  // scaled
  double bound = 0.0;     // scaled, on |true tail - estimate|
};

double growth_exponent(const Spectrum& s) { return s.critical_q() - 1.0; }

void check_convergence(const Spectrum& s, double exponent, Moment moment) {
  if (s.is_finite()) return;
  const double need = 1.0 / growth_exponent(s) + (moment == Moment::excitation ? 1.0 : 0.0);
  if (!(exponent > need))
    fail(ErrorCode::divergence, "spectral sum diverges on " + s.describe() + ": exponent " +
                                    std::to_string(exponent) + " must exceed " +
                                    std::to_string(need) + " (requires q < q_c)");
}

double weight_log(const Level& l, double e0, Moment moment) {
  double lw = std::log(static_cast<double>(l.multiplicity));
  if (moment == Moment::excitation) {
    const double g = l.energy - e0;
    lw = g > 0 ? lw + std::log(g) : kNegInf;
  } else if (moment == Moment::excited && !(l.energy > e0)) {
    lw = kNegInf;
  }
  return lw;
}

// Accumulates exp(log_term - ref) where ref is fixed by the first terms.
class ScaledAccumulator {
 public:
  explicit ScaledAccumulator(double ref) : ref_(ref) {}
  void add_log(double log_term) {
    if (log_term == kNegInf) return;
    sum_ += std::exp(log_term - ref_);
  }
  double sum() const { return sum_; }
  double ref() const { return ref_; }

 private:
  double ref_;
  double sum_ = 0.0;
};

// ---------------------------------------------------------------- harmonic

// Bernoulli numbers B_2, B_4, ..., B_26.
constexpr std::array<double, 13> kBernoulli = {
    1.0 / 6,          -1.0 / 30,           1.0 / 42,        -1.0 / 30,        5.0 / 66,
    -691.0 / 2730,    7.0 / 6,             -3617.0 / 510,   43867.0 / 798,    -174611.0 / 330,
    854513.0 / 138,   -236364091.0 / 2730, 8553103.0 / 6};
constexpr int kEulerMaclaurinTerms = 10;

// Hurwitz zeta sum_{k>=0} (a+k)^(-s), s > 1, scaled by exp(-ref).
Tail hurwitz_tail(double s, double a, double ref) {
  const double la = std::log(a);
  Tail t;
  t.estimate = std::exp((1.0 - s) * la - std::log(s - 1.0) - ref) + 0.5 * std::exp(-s * la - ref);
  double magnitude = std::abs(t.estimate);
  const double lgs = std::lgamma(s);
  for (int j = 1; j <= kEulerMaclaurinTerms + 1; ++j) {
    const int k = 2 * j;
    // B_2j / (2j)! * s (s+1) ... (s+2j-2) * a^(-s-2j+1)
    const double lmag = std::log(std::abs(kBernoulli[j - 1])) - std::lgamma(k + 1.0) +
                        std::lgamma(s + k - 1.0) - lgs + (-s - k + 1.0) * la - ref;
    const double term = std::copysign(std::exp(lmag), kBernoulli[j - 1]);
    if (j <= kEulerMaclaurinTerms) {
      t.estimate += term;
      magnitude += std::abs(term);
    } else {
      t.bound = std::abs(term);
    }
  }
  t.bound += 4.0 * std::numeric_limits<double>::epsilon() * magnitude;
  return t;
}

SpectralSum harmonic_sum(double shift, double s, Moment moment) {
  // Sum directly until the Euler-Maclaurin expansion is safely asymptotic.
  const double a_min = std::max(12.0, 0.5 * (s + 2.0 * kEulerMaclaurinTerms + 4.0));
  const auto direct = static_cast<std::size_t>(std::max(0.0, std::ceil(a_min - shift)));
  const std::size_t n_direct = std::max<std::size_t>(direct, 2);

  std::vector<double> logs(n_direct);
  double ref = kNegInf;
  for (std::size_t j = 0; j < n_direct; ++j) {
    const double n = static_cast<double>(j);
    double lw = 0.0;
    if (moment == Moment::excitation) lw = j == 0 ? kNegInf : std::log(n);
    if (moment == Moment::excited && j == 0) lw = kNegInf;
    logs[j] = lw - s * std::log(shift + n);
    ref = std::max(ref, logs[j]);
  }
  ScaledAccumulator acc(ref);
  for (double l : logs) acc.add_log(l);

  const double a = shift + static_cast<double>(n_direct);
  Tail tail;
  if (moment != Moment::excitation) {
    tail = hurwitz_tail(s, a, ref);
  } else {
    // sum n (c+n)^-s = sum (c+n)^(1-s) - c sum (c+n)^-s
    const Tail hi = hurwitz_tail(s - 1.0, a, ref);
    const Tail lo = hurwitz_tail(s, a, ref);
    tail.estimate = hi.estimate - shift * lo.estimate;
    tail.bound = hi.bound + std::abs(shift) * lo.bound +
                 4.0 * std::numeric_limits<double>::epsilon() *
                     (std::abs(hi.estimate) + std::abs(shift * lo.estimate));
  }
  SpectralSum out;
  out.log_ref = ref;
  out.scaled = acc.sum() + tail.estimate;
  out.scaled_tail_bound = tail.bound;
  out.direct_levels = n_direct;
  return out;
}

// ----------------------------------------------------------- rule families

// Geometric majorants for the remainder after `next` summed levels, in log.
double geometric_remainder_log(const Spectrum& sp, std::size_t next, double shift, double s,
                               Moment moment) {
  const double la = std::log(sp.geometric_ratio());
  const double lead = static_cast<double>(next) * la;  // log a^J
  const double kappa = 1.0 + std::min(shift, 0.0) * std::exp(-lead);
  const double sx = moment == Moment::excitation ? s - 1.0 : s;
  return -s * std::log(kappa) - sx * lead - std::log1p(-std::exp(-sx * la));
}

double factorial_remainder_log(std::size_t next, double shift, double s, Moment moment) {
  // Levels j >= J have energy (j+1)! and multiplicity j * j!.
  const double j = static_cast<double>(next);
  const double lfact = std::lgamma(j + 2.0);  // log (J+1)!
  const double kappa = 1.0 + std::min(shift, 0.0) * std::exp(-lfact);
  const double p = moment == Moment::excitation ? 2.0 - s : 1.0 - s;
  return -s * std::log(kappa) + p * lfact - std::log1p(-std::exp(p * std::log(j + 2.0)));
}

SpectralSum rule_family_sum(const Spectrum& sp, double shift, double s, Moment moment) {
  const double e0 = sp.ground_energy();
  const bool geometric = sp.kind() == SpectrumKind::geometric;
  auto level_log = [&](std::size_t j) -> std::optional<double> {
    if (j < sp.level_count()) {
      const Level& l = sp.levels()[j];
      return weight_log(l, e0, moment) - s * std::log(shift + l.energy);
    }
    if (geometric) {
      const auto l = sp.level_at(j);
      if (!l) return std::nullopt;
      return weight_log(*l, e0, moment) - s * std::log(shift + l->energy);
    }
    // factorial beyond the cache, in logs
    const double jj = static_cast<double>(j);
    const double le = std::lgamma(jj + 2.0);
    double lw = std::log(jj) + std::lgamma(jj + 1.0);
    if (moment == Moment::excitation) lw += le + std::log1p(-std::exp(-le));
    return lw - s * (le + std::log1p(shift * std::exp(-le)));
  };
  auto remainder_log = [&](std::size_t next) {
    return geometric ? geometric_remainder_log(sp, next, shift, s, moment)
                     : factorial_remainder_log(next, shift, s, moment);
  };

  // The first levels dominate; take the largest of them as reference.
  double ref = kNegInf;
  for (std::size_t j = 0; j < std::min<std::size_t>(4, sp.level_count()); ++j)
    ref = std::max(ref, *level_log(j));
  ScaledAccumulator acc(ref);
  constexpr std::size_t kMaxLevels = 1u << 22;
  std::size_t j = 0;
  double rem = 0.0;
  for (; j < kMaxLevels; ++j) {
    const auto l = level_log(j);
    if (!l) break;
    acc.add_log(*l);
    if (j >= 1) {
      rem = std::exp(remainder_log(j + 1) - ref);
      if (rem <= kTailTarget * acc.sum()) {
        ++j;
        break;
      }
    }
  }
  if (j > 0) rem = std::exp(remainder_log(j) - ref);
  SpectralSum out;
  out.log_ref = ref;
  out.scaled = acc.sum();
  out.scaled_tail_bound = std::isfinite(rem) ? rem : std::numeric_limits<double>::infinity();
  out.direct_levels = j;
  return out;
}

// --------------------------------------------------------------------- box

struct BoxTailInputs {
  double d, vol, dcorr;  // N_w(E) = vol E^(d/2) - dcorr E^((d-1)/2)
};

BoxTailInputs box_constants(int dim) {
  const double d = dim;
  auto ball = [](double k) { return std::pow(std::numbers::pi, k / 2) / std::tgamma(k / 2 + 1); };
  return {d, ball(d) / std::pow(2.0, d), d * ball(d - 1) / std::pow(2.0, d)};
}

// Tail of sum (c + eps)^-s over eps > e_cut; n_cut states have eps <= e_cut.
// N(E) <= vol E^(d/2) makes `bound` rigorous; `estimate` uses two Weyl terms.
Tail box_count_tail(const BoxTailInputs& k, double e_cut, double n_cut, double c, double s,
                    double ref, bool with_estimate) {
  const double b = c + e_cut;
  const double lb = std::log(b);
  const double rho = c >= 0 ? 1.0 : e_cut / b;
  const double half = k.d / 2;
  const double boundary = std::exp(std::log(n_cut) - s * lb - ref);
  const double upper =
      std::exp(std::log(s * k.vol) + half * std::log(rho) + (half - s) * lb - std::log(s - half) - ref);
  Tail t;
  t.bound = std::max(0.0, upper - boundary);
  if (with_estimate) {
    boost::math::quadrature::tanh_sinh<double> integrator;
    auto f = [&](double u) {
      if (u <= 0) return 0.0;
      // N_w(E) u^(s-1) with E = (b - c u)/u, written without forming E.
      const double w = b - c * u;
      const double v = k.vol * std::pow(w, half) * std::pow(u, s - 1.0 - half) -
                       k.dcorr * std::pow(w, half - 0.5) * std::pow(u, s - 0.5 - half);
      return std::max(0.0, v);
    };
    const double integral = integrator.integrate(f, 0.0, 1.0);
    t.estimate = std::clamp(s * integral * std::exp(-s * lb - ref) - boundary, 0.0, t.bound);
  }
  return t;
}

SpectralSum box_sum(const Spectrum& sp, double shift, double s, Moment moment) {
  const auto levels = sp.levels();
  const double e0 = sp.ground_energy();
  const BoxTailInputs k = box_constants(sp.box_dimension());
  auto bound_from = [&](std::size_t next, double ref, bool with_estimate) {
    const double e_cut = levels[next - 1].energy;
    const double n_cut = static_cast<double>(sp.cumulative_count(next));
    if (moment != Moment::excitation)
      return box_count_tail(k, e_cut, n_cut, shift, s, ref, with_estimate);
    // eps - eps0 <= c + eps, so the s-1 count tail majorises the excitation tail.
    const Tail hi = box_count_tail(k, e_cut, n_cut, shift, s - 1.0, ref, with_estimate);
    Tail t{0.0, hi.bound};
    if (with_estimate) {
      const Tail lo = box_count_tail(k, e_cut, n_cut, shift, s, ref, true);
      t.estimate = std::clamp(hi.estimate - (shift + e0) * lo.estimate, 0.0, hi.bound);
    }
    return t;
  };

  double ref = kNegInf;
  for (std::size_t j = 0; j < std::min<std::size_t>(4, levels.size()); ++j)
    ref = std::max(ref, weight_log(levels[j], e0, moment) - s * std::log(shift + levels[j].energy));
  ScaledAccumulator acc(ref);
  std::size_t j = 0;
  Tail tail;
  bool closed = false;
  for (; j < levels.size(); ++j) {
    acc.add_log(weight_log(levels[j], e0, moment) - s * std::log(shift + levels[j].energy));
    if ((j + 1) % 256 == 0) {
      const Tail t = bound_from(j + 1, ref, false);
      if (t.bound <= kTailTarget * acc.sum()) {
        tail = t;
        closed = true;
        ++j;
        break;
      }
    }
  }
  if (!closed) {
    const Tail t = bound_from(j, ref, true);
    tail.estimate = t.estimate;
    tail.bound = std::max(t.bound - t.estimate, t.estimate);
  }
  SpectralSum out;
  out.log_ref = ref;
  out.scaled = acc.sum() + tail.estimate;
  out.scaled_tail_bound = tail.bound;
  out.direct_levels = j;
  return out;
}

}  // namespace

SpectralSum shifted_power_sum(const Spectrum& sp, double shift, double exponent, Moment moment) {
  require(std::isfinite(shift) && std::isfinite(exponent), ErrorCode::invalid_argument,
          "shifted_power_sum: non-finite argument");
  require(shift + sp.ground_energy() > 0, ErrorCode::domain,
          "shifted_power_sum: shift must exceed -eps_0");
  check_convergence(sp, exponent, moment);

  if (sp.is_finite()) {
    const auto levels = sp.levels();
    const double e0 = sp.ground_energy();
    std::vector<double> logs(levels.size());
    double ref = kNegInf;
    for (std::size_t j = 0; j < levels.size(); ++j) {
      logs[j] = weight_log(levels[j], e0, moment) - exponent * std::log(shift + levels[j].energy);
      ref = std::max(ref, logs[j]);
    }
    ScaledAccumulator acc(ref);
    for (double l : logs) acc.add_log(l);
    SpectralSum out;
    out.log_ref = ref;
    out.scaled = acc.sum();
    out.direct_levels = levels.size();
    return out;
  }
  switch (sp.kind()) {
    case SpectrumKind::harmonic: return harmonic_sum(shift, exponent, moment);
    case SpectrumKind::box: return box_sum(sp, shift, exponent, moment);
    default: return rule_family_sum(sp, shift, exponent, moment);
  }
}

SpectralSum cutoff_power_sum(const Spectrum& sp, double alpha, double exponent, Moment moment) {
  require(std::isfinite(alpha) && std::isfinite(exponent) && exponent >= 0,
          ErrorCode::invalid_argument, "cutoff_power_sum: needs finite alpha and exponent >= 0");
  SpectralSum out;
  const double e0 = sp.ground_energy();
  if (alpha <= e0) return out;
  (void)count_below(sp, alpha);  // truncation check on infinite spectra
  const auto levels = sp.levels();
  const auto n_levels = static_cast<std::size_t>(
      std::lower_bound(levels.begin(), levels.end(), alpha,
                       [](const Level& l, double a) { return l.energy < a; }) -
      levels.begin());

  double ref = kNegInf;
  std::vector<double> logs(n_levels);
  for (std::size_t j = 0; j < n_levels; ++j) {
    logs[j] = weight_log(levels[j], e0, moment) + exponent * std::log(alpha - levels[j].energy);
    ref = std::max(ref, logs[j]);
  }
  out.direct_levels = n_levels;
  if (ref == kNegInf) return out;  // excitation moment on the ground plateau
  ScaledAccumulator acc(ref);
  for (double l : logs) acc.add_log(l);
  out.log_ref = ref;
  out.scaled = acc.sum();
  return out;
}

}  // namespace tsallis
