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

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "tsallis/error.hpp"
#include "tsallis/spectrum.hpp"

namespace tsallis {

namespace {

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

[[noreturn]] void parse_error(std::size_t line, const std::string& msg) {
  fail(ErrorCode::parse, "line " + std::to_string(line) + ": " + msg);
}

}  // namespace

Spectrum parse_spectrum_text(std::string_view text) {
  std::vector<Level> levels;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    std::istringstream in{std::string(line)};
    std::string energy_tok, mult_tok, extra;
    in >> energy_tok >> mult_tok;
    if (mult_tok.empty()) parse_error(line_no, "expected 'energy multiplicity'");
    if (in >> extra) parse_error(line_no, "trailing tokens");

    double energy = 0;
    {
      const char* b = energy_tok.data();
      const char* e = b + energy_tok.size();
      auto [p, ec] = std::from_chars(b, e, energy);
      if (ec != std::errc() || p != e || !std::isfinite(energy))
        parse_error(line_no, "malformed energy '" + energy_tok + "'");
    }
    std::uint64_t mult = 0;
    {
      const char* b = mult_tok.data();
      const char* e = b + mult_tok.size();
      auto [p, ec] = std::from_chars(b, e, mult);
      if (ec != std::errc() || p != e) parse_error(line_no, "malformed multiplicity '" + mult_tok + "'");
    }
    if (mult == 0) parse_error(line_no, "multiplicity must be >= 1");
    if (!levels.empty() && !(energy > levels.back().energy))
      parse_error(line_no, "energies must be strictly increasing (duplicates are not merged)");
    levels.push_back({energy, mult});
  }
  if (levels.size() < 2) fail(ErrorCode::parse, "spectrum file needs at least two distinct levels");
  return Spectrum::from_levels(std::move(levels));
}

Spectrum load_spectrum_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  require(static_cast<bool>(in), ErrorCode::io, "cannot open spectrum file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_spectrum_text(buf.str());
}

std::string format_spectrum(const Spectrum& s, std::size_t max_levels, std::string_view header) {
  std::string out;
  while (!header.empty()) {
    const auto nl = header.find('\n');
    out += "# ";
    out += header.substr(0, nl);
    out += '\n';
    header = nl == std::string_view::npos ? std::string_view{} : header.substr(nl + 1);
  }
  const auto levels = s.levels();
  const std::size_t n = max_levels == 0 ? levels.size() : std::min(max_levels, levels.size());
  char buf[64];
  for (std::size_t i = 0; i < n; ++i) {
    std::snprintf(buf, sizeof buf, "%.17g %llu\n", levels[i].energy,
                  static_cast<unsigned long long>(levels[i].multiplicity));
    out += buf;
  }
  return out;
}

}  // namespace tsallis
