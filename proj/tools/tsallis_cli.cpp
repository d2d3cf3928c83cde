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

// Command-line front end over the C API.

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "tsallis/tsallis.h"

namespace {

using nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitDomain = 2;
constexpr int kExitVerification = 3;
constexpr int kExitUsage = 64;
constexpr int kExitDataErr = 65;
constexpr int kExitNoInput = 66;
constexpr int kExitSoftware = 70;

struct CliError {
  int exit_code;
  std::string message;
};

int exit_code_for(tsallis_status st) {
  switch (st) {
    case TSALLIS_OK: return kExitOk;
    case TSALLIS_PARSE: return kExitDataErr;
    case TSALLIS_IO: return kExitNoInput;
    case TSALLIS_INVARIANT:
    case TSALLIS_INTERNAL: return kExitSoftware;
    default: return kExitDomain;
  }
}

void check(tsallis_status st) {
  if (st != TSALLIS_OK)
    throw CliError{exit_code_for(st),
                   std::string(tsallis_status_name(st)) + ": " + tsallis_last_error()};
}

struct CString {
  char* p = nullptr;
  ~CString() { tsallis_string_free(p); }
  std::string str() const { return p ? p : ""; }
};

struct SpectrumDeleter {
  void operator()(tsallis_spectrum* s) const { tsallis_spectrum_free(s); }
};
using SpectrumPtr = std::unique_ptr<tsallis_spectrum, SpectrumDeleter>;

struct SweepDeleter {
  void operator()(tsallis_sweep* s) const { tsallis_sweep_free(s); }
};
using SweepPtr = std::unique_ptr<tsallis_sweep, SweepDeleter>;

struct SpectrumSource {
  std::string family;
  std::vector<double> params;
  bool pairs = false;
  std::uint64_t truncation = 0;
  std::string file;
};

struct Output {
  std::string path;
  std::string format;
};

struct Config {
  std::string command_line;
  SpectrumSource src;
  Output out;
  double q = 0.0;
  std::optional<double> beta;
  std::optional<double> T;
  double k_B = 1.0;
  std::uint64_t seed = 1;
};

std::string quote_arg(const std::string& a) {
  if (!a.empty() && a.find_first_of(" \t\"'\\$") == std::string::npos) return a;
  std::string out = "'";
  for (char c : a) {
    if (c == '\'') {
      out += "'\\''";
    } else {
      out += c;
    }
  }
  return out + "'";
}

bool looks_negative_value(const std::string& a) {
  return a.size() >= 2 && a[0] == '-' && (std::isdigit(static_cast<unsigned char>(a[1])) || a[1] == '.');
}

// "--params -1,1" would read as a short flag; glue such values to their option.
std::vector<std::string> normalize_args(int argc, char** argv) {
  std::vector<std::string> out;
  for (int i = 1; i < argc; ++i) {
    std::string a = argv[i];
    if (a.rfind("--", 0) == 0 && a.find('=') == std::string::npos && i + 1 < argc &&
        looks_negative_value(argv[i + 1])) {
      out.push_back(a + "=" + argv[i + 1]);
      ++i;
    } else {
      out.push_back(a);
    }
  }
  return out;
}

void add_spectrum_options(CLI::App* cmd, SpectrumSource& src) {
  auto* fam = cmd->add_option("--family", src.family,
                              "Builtin family: list, two-level, harmonic, box, geometric, factorial");
  cmd->add_option("--params", src.params, "Comma-separated family parameters")->delimiter(',');
  cmd->add_flag("--pairs", src.pairs, "list: params are energy,multiplicity pairs");
  cmd->add_option("--truncation", src.truncation, "Cached eigenvalues for infinite families");
  auto* file = cmd->add_option("--spectrum-file", src.file, "Spectrum file (energy multiplicity)");
  fam->excludes(file);
  file->excludes(fam);
}

SpectrumPtr load_spectrum(const SpectrumSource& src) {
  if (src.family.empty() == src.file.empty())
    throw CliError{kExitUsage, "exactly one of --family or --spectrum-file is required"};
  tsallis_spectrum* s = nullptr;
  if (!src.file.empty()) {
    check(tsallis_spectrum_load(src.file.c_str(), &s));
  } else {
    check(tsallis_spectrum_build(src.family.c_str(), src.params.data(), src.params.size(),
                                 src.truncation, src.pairs, &s));
  }
  return SpectrumPtr(s);
}

double resolve_beta(const Config& c) {
  if (c.beta.has_value() == c.T.has_value())
    throw CliError{kExitUsage, "exactly one of --beta or --T is required"};
  if (c.beta) return *c.beta;
  if (!(*c.T > 0)) throw CliError{kExitDomain, "temperature must be positive"};
  return 1.0 / (c.k_B * *c.T);
}

std::filesystem::path resolve_path(const std::string& path) {
  std::filesystem::path p(path);
  if (p.is_relative()) {
    if (const char* dir = std::getenv("TSALLIS_OUTPUT_DIR"); dir && *dir) p = std::filesystem::path(dir) / p;
  }
  return p;
}

void emit(const Output& out, const std::string& content) {
  if (out.path.empty() || out.path == "-") {
    std::cout << content;
    if (!content.empty() && content.back() != '\n') std::cout << '\n';
    std::cout.flush();
    return;
  }
  const std::filesystem::path p = resolve_path(out.path);
  if (p.has_parent_path()) {
    std::error_code ec;
    std::filesystem::create_directories(p.parent_path(), ec);
  }
  std::ofstream f(p, std::ios::binary);
  if (!f) throw CliError{kExitNoInput, "cannot write '" + p.string() + "'"};
  f << content;
  if (!content.empty() && content.back() != '\n') f << '\n';
  if (!f) throw CliError{kExitNoInput, "write failed for '" + p.string() + "'"};
}

ordered_json meta(const Config& c, const ordered_json& tolerances) {
  ordered_json m;
  m["tool"] = "tsallis";
  m["version"] = tsallis_version();
  m["command_line"] = c.command_line;
  m["seed"] = c.seed;
  m["tolerances"] = tolerances;
  return m;
}

std::string comment_header(const Config& c, const ordered_json& tolerances) {
  std::string h = std::string("tsallis ") + tsallis_version() + "\n";
  h += "command: " + c.command_line + "\n";
  h += "seed: " + std::to_string(c.seed) + "\n";
  h += "tolerances: " + tolerances.dump();
  return h;
}

std::string with_meta(const Config& c, const ordered_json& tolerances, const std::string& result) {
  ordered_json j;
  j["meta"] = meta(c, tolerances);
  j["result"] = ordered_json::parse(result);
  return j.dump(2);
}

std::string prefix_comments(const std::string& header) {
  std::string out;
  std::size_t start = 0;
  while (start <= header.size()) {
    const auto nl = header.find('\n', start);
    out += "# " + header.substr(start, nl == std::string::npos ? std::string::npos : nl - start) + "\n";
    if (nl == std::string::npos) break;
    start = nl + 1;
  }
  return out;
}

std::vector<double> temperature_grid(double lo, double hi, int points, const std::string& spacing) {
  if (!(lo > 0) || !(hi >= lo)) throw CliError{kExitDomain, "need 0 < --T-min <= --T-max"};
  if (points < 1) throw CliError{kExitUsage, "--points must be >= 1"};
  if (points > 1 && !(hi > lo)) throw CliError{kExitDomain, "need --T-min < --T-max for several points"};
  std::vector<double> T(static_cast<std::size_t>(points));
  for (int i = 0; i < points; ++i) {
    const double t = points == 1 ? 0.0 : static_cast<double>(i) / (points - 1);
    T[static_cast<std::size_t>(i)] = spacing == "log" ? lo * std::pow(hi / lo, t) : lo + (hi - lo) * t;
  }
  T.back() = hi;
  if (points == 1) T[0] = lo;
  return T;
}

}  // namespace

int main(int argc, char** argv) {
  Config cfg;
  for (int i = 0; i < argc; ++i) cfg.command_line += (i ? " " : "") + quote_arg(argv[i]);

  CLI::App app{"Tsallis thermodynamics of discrete spectra"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(tsallis_version()));

  // spectrum
  auto* spec_cmd = app.add_subcommand("spectrum", "Build or load a spectrum and write its levels");
  add_spectrum_options(spec_cmd, cfg.src);
  std::size_t spec_levels = 0;
  bool spec_info = false;
  spec_cmd->add_option("--n", spec_levels, "Levels to write (0: all cached)");
  spec_cmd->add_flag("--info", spec_info, "Write a JSON summary instead of the level list");
  spec_cmd->add_option("--out", cfg.out.path, "Output file (relative paths use TSALLIS_OUTPUT_DIR)");

  // solve
  auto* solve_cmd = app.add_subcommand("solve", "Equilibrium state at one temperature");
  add_spectrum_options(solve_cmd, cfg.src);
  double solve_alpha_max = 0.0;
  solve_cmd->add_option("--q", cfg.q, "Entropic parameter")->required();
  solve_cmd->add_option("--beta", cfg.beta, "Inverse temperature");
  solve_cmd->add_option("--T", cfg.T, "Temperature");
  solve_cmd->add_option("--k-B", cfg.k_B, "Boltzmann constant");
  solve_cmd->add_option("--alpha-max", solve_alpha_max, "q < 1: landscape scan limit");
  solve_cmd->add_option("--out", cfg.out.path, "Output file");

  // sweep
  auto* sweep_cmd = app.add_subcommand("sweep", "Temperature sweep of (alpha, U, S, F)");
  add_spectrum_options(sweep_cmd, cfg.src);
  double T_min = 0.5, T_max = 5.0, rel_tol = 1e-5;
  int points = 100;
  std::string spacing = "log";
  std::vector<double> T_list;
  bool sweep_check = false;
  cfg.out.format = "csv";
  sweep_cmd->add_option("--q", cfg.q, "Entropic parameter")->required();
  sweep_cmd->add_option("--T-min", T_min, "Lowest temperature")->capture_default_str();
  sweep_cmd->add_option("--T-max", T_max, "Highest temperature")->capture_default_str();
  sweep_cmd->add_option("--points", points, "Grid points")->capture_default_str();
  sweep_cmd->add_option("--spacing", spacing, "Grid spacing")
      ->check(CLI::IsMember({"log", "linear"}))
      ->capture_default_str();
  sweep_cmd->add_option("--T-list", T_list, "Explicit comma-separated temperatures")->delimiter(',');
  sweep_cmd->add_option("--k-B", cfg.k_B, "Boltzmann constant");
  sweep_cmd->add_flag("--check", sweep_check, "Check dF/dT = -S and dU/dT > 0; exit 3 on failure");
  sweep_cmd->add_option("--rel-tol", rel_tol, "Relative tolerance of the check")->capture_default_str();
  sweep_cmd->add_option("--format", cfg.out.format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  sweep_cmd->add_option("--out", cfg.out.path, "Output file");

  // landscape
  auto* land_cmd = app.add_subcommand("landscape", "Free-energy landscape over alpha (q < 1)");
  add_spectrum_options(land_cmd, cfg.src);
  double land_alpha_max = 0.0;
  int land_grid = 0;
  bool land_curve = false;
  std::string land_format = "json";
  land_cmd->add_option("--q", cfg.q, "Entropic parameter")->required();
  land_cmd->add_option("--beta", cfg.beta, "Inverse temperature");
  land_cmd->add_option("--T", cfg.T, "Temperature");
  land_cmd->add_option("--k-B", cfg.k_B, "Boltzmann constant");
  land_cmd->add_option("--alpha-max", land_alpha_max, "Scan limit (default from beta)");
  land_cmd->add_option("--grid", land_grid, "Samples per eigenvalue interval");
  land_cmd->add_flag("--curve", land_curve, "Include the sampled F(alpha) curve");
  land_cmd->add_option("--format", land_format, "json, or csv for the curve")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  land_cmd->add_option("--out", cfg.out.path, "Output file");

  // verify
  auto* ver_cmd = app.add_subcommand("verify", "Run a property suite; exit 3 on any violation");
  std::string suite;
  std::size_t trials = 0;
  std::optional<int> dim, dim_min, dim_max;
  std::vector<double> qs;
  tsallis_suite_options sopt;
  tsallis_suite_options_init(&sopt);
  double tol = sopt.tol;
  ver_cmd->add_option("--suite", suite, std::string("all, or one of: ") + tsallis_suite_names())
      ->required();
  ver_cmd->add_option("--trials", trials, "Trials (0: suite default)");
  ver_cmd->add_option("--seed", cfg.seed, "RNG seed")->capture_default_str();
  ver_cmd->add_option("--dim", dim, "Fix the matrix dimension");
  ver_cmd->add_option("--dim-min", dim_min, "Smallest dimension");
  ver_cmd->add_option("--dim-max", dim_max, "Largest dimension");
  ver_cmd->add_option("--qs", qs, "Comma-separated q values")->delimiter(',');
  ver_cmd->add_option("--tol", tol, "Violation slack")->capture_default_str();
  ver_cmd->add_option("--out", cfg.out.path, "Output file");

  // transition
  auto* tr_cmd = app.add_subcommand("transition", "Locate a first-order transition in beta (q < 1)");
  add_spectrum_options(tr_cmd, cfg.src);
  double beta_lo = 0.5, beta_hi = 5.0;
  int scan_points = 0;
  tr_cmd->add_option("--q", cfg.q, "Entropic parameter")->required();
  tr_cmd->add_option("--beta-lo", beta_lo, "Window start")->capture_default_str();
  tr_cmd->add_option("--beta-hi", beta_hi, "Window end")->capture_default_str();
  tr_cmd->add_option("--scan-points", scan_points, "Scan grid size (0: default)");
  tr_cmd->add_option("--out", cfg.out.path, "Output file");

  std::vector<std::string> args = normalize_args(argc, argv);
  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e) == 0 ? kExitOk : kExitUsage;
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e) == 0 ? kExitOk : kExitUsage;
  } catch (const CLI::CallForVersion& e) {
    app.exit(e);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (spec_cmd->parsed()) {
      SpectrumPtr s = load_spectrum(cfg.src);
      CString text;
      if (spec_info) {
        check(tsallis_spectrum_info_json(s.get(), &text.p));
        emit(cfg.out, with_meta(cfg, ordered_json::object(), text.str()));
      } else {
        const std::string header = comment_header(cfg, ordered_json::object());
        check(tsallis_spectrum_format(s.get(), spec_levels, header.c_str(), &text.p));
        emit(cfg.out, text.str());
      }
      return kExitOk;
    }

    if (solve_cmd->parsed()) {
      SpectrumPtr s = load_spectrum(cfg.src);
      const double beta = resolve_beta(cfg);
      CString text;
      check(tsallis_solve_json(s.get(), cfg.q, beta, cfg.k_B, solve_alpha_max, &text.p));
      emit(cfg.out, with_meta(cfg, {{"root_relative", 1e-14}}, text.str()));
      return kExitOk;
    }

    if (sweep_cmd->parsed()) {
      SpectrumPtr s = load_spectrum(cfg.src);
      const std::vector<double> T =
          T_list.empty() ? temperature_grid(T_min, T_max, points, spacing) : T_list;
      tsallis_sweep* raw = nullptr;
      check(tsallis_sweep_run(s.get(), cfg.q, cfg.k_B, T.data(), T.size(), &raw));
      SweepPtr sw(raw);
      tsallis_thermo_check tc{};
      if (sweep_check) check(tsallis_sweep_check(sw.get(), rel_tol, &tc));
      const ordered_json tols = {{"thermo_rel_tol", rel_tol}, {"dUdT_floor", -1e-10}};
      CString text;
      if (cfg.out.format == "json") {
        check(tsallis_sweep_json(sw.get(), sweep_check, &text.p));
        emit(cfg.out, with_meta(cfg, tols, text.str()));
      } else {
        std::string header = comment_header(cfg, tols);
        if (sweep_check) {
          char buf[256];
          std::snprintf(buf, sizeof buf,
                        "\ncheck: max_rel_dFdT_plus_S=%.3e min_dUdT=%.6g checked=%zu excluded=%zu ok=%d",
                        tc.max_rel_dFdT_plus_S, tc.min_dUdT, tc.checked_rows, tc.excluded_rows, tc.ok);
          header += buf;
        }
        check(tsallis_sweep_csv(sw.get(), header.c_str(), &text.p));
        emit(cfg.out, text.str());
      }
      if (sweep_check && !tc.ok) {
        std::cerr << "thermodynamic relation check failed (max relative residual "
                  << tc.max_rel_dFdT_plus_S << ", min dU/dT " << tc.min_dUdT << ")\n";
        return kExitVerification;
      }
      return kExitOk;
    }

    if (land_cmd->parsed()) {
      SpectrumPtr s = load_spectrum(cfg.src);
      const double beta = resolve_beta(cfg);
      CString text;
      const bool want_curve = land_curve || land_format == "csv";
      check(tsallis_landscape_json(s.get(), cfg.q, beta, cfg.k_B, land_alpha_max, land_grid,
                                   want_curve, &text.p));
      const ordered_json tols = {{"degeneracy", 1e-10}};
      if (land_format == "csv") {
        const ordered_json j = ordered_json::parse(text.str());
        std::string out = prefix_comments(comment_header(cfg, tols));
        out += "alpha,F\n";
        const auto& a = j["alpha_grid"];
        const auto& f = j["free_energy"];
        char buf[96];
        for (std::size_t i = 0; i < a.size(); ++i) {
          std::snprintf(buf, sizeof buf, "%.17g,%.17g\n", a[i].get<double>(), f[i].get<double>());
          out += buf;
        }
        emit(cfg.out, out);
      } else {
        emit(cfg.out, with_meta(cfg, tols, text.str()));
      }
      return kExitOk;
    }

    if (ver_cmd->parsed()) {
      sopt.seed = cfg.seed;
      sopt.trials = trials;
      if (dim) {
        sopt.dim_min = *dim;
        sopt.dim_max = *dim;
      }
      if (dim_min) sopt.dim_min = *dim_min;
      if (dim_max) sopt.dim_max = *dim_max;
      sopt.qs = qs.empty() ? nullptr : qs.data();
      sopt.n_qs = qs.size();
      sopt.tol = tol;
      std::vector<std::string> names;
      if (suite == "all") {
        const std::string all = tsallis_suite_names();
        std::size_t start = 0;
        while (start < all.size()) {
          const auto comma = all.find(',', start);
          names.push_back(all.substr(start, comma == std::string::npos ? std::string::npos : comma - start));
          if (comma == std::string::npos) break;
          start = comma + 1;
        }
      } else {
        names.push_back(suite);
      }
      ordered_json reports = ordered_json::array();
      bool all_ok = true;
      for (const std::string& n : names) {
        int passed = 0;
        CString text;
        check(tsallis_verify_json(n.c_str(), &sopt, &passed, &text.p));
        reports.push_back(ordered_json::parse(text.str()));
        all_ok = all_ok && passed;
        std::cerr << n << ": " << (passed ? "pass" : "FAIL") << "\n";
      }
      ordered_json j;
      j["meta"] = meta(cfg, {{"slack", tol}});
      j["result"] = names.size() == 1 ? reports[0] : reports;
      j["ok"] = all_ok;
      emit(cfg.out, j.dump(2));
      return all_ok ? kExitOk : kExitVerification;
    }

    if (tr_cmd->parsed()) {
      SpectrumPtr s = load_spectrum(cfg.src);
      int found = 0;
      CString text;
      check(tsallis_transition_json(s.get(), cfg.q, beta_lo, beta_hi, scan_points, &found, &text.p));
      emit(cfg.out, with_meta(cfg, {{"beta_bisection_relative", 1e-11}}, text.str()));
      return kExitOk;
    }
  } catch (const CliError& e) {
    std::cerr << "error: " << e.message << "\n";
    if (e.exit_code == kExitUsage) std::cerr << "run with --help for usage\n";
    return e.exit_code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitSoftware;
  }
  return kExitUsage;
}
