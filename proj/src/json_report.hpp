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

#include <optional>
#include <string>

#include "json.hpp"
#include "tsallis/qgt.hpp"
#include "tsallis/qlt.hpp"
#include "tsallis/spectrum.hpp"
#include "tsallis/suites.hpp"
#include "tsallis/thermo.hpp"

namespace tsallis::json {

using nlohmann::ordered_json;

ordered_json spectrum_info(const Spectrum& s);
ordered_json equilibrium(const Spectrum& s, const Equilibrium& e, const QParams& p);
/// Global landscape minimum of a q < 1 problem as a solve result.
ordered_json cut_solution(const Spectrum& s, const LandscapeReport& r, const QParams& p);
/// `include_curve` adds the sampled (alpha, F) arrays.
ordered_json landscape(const Spectrum& s, const LandscapeReport& r, const QParams& p,
                       bool include_curve);
ordered_json transition(const Spectrum& s, double q, double beta_lo, double beta_hi,
                        const std::optional<Transition>& t, const std::string& diagnostic);
ordered_json sweep(const SweepTable& t, const std::optional<ThermoCheck>& check);
ordered_json thermo_check(const ThermoCheck& c);
ordered_json suite(const SuiteReport& r);

/// FNV-1a over the inputs of one record, as 16 hex digits.
std::string record_digest(const SuiteRecord& r);

}  // namespace tsallis::json
