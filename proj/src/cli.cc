// Copyright 2026 The olsconv Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "olsconv/cli.h"

#include <cstdio>
#include <exception>
#include <optional>
#include <ostream>
#include <string>

#include "CLI11.hpp"
#include "olsconv/config.h"
#include "olsconv/engine.h"
#include "olsconv/errors.h"
#include "olsconv/results_csv.h"
#include "olsconv/selfcheck.h"

namespace olsconv {

namespace {

struct RunFlags {
  std::string config;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> output;
  bool resume = false;
  std::optional<std::string> workers;
  std::optional<double> alpha;
};

int DoRun(const RunFlags& flags, std::ostream& out, std::ostream& err) {
  RunConfig config = ParseConfigFile(flags.config);
  if (flags.seed) config.master_seed = *flags.seed;
  if (flags.output) config.output = *flags.output;
  if (flags.workers) config.workers = ParseWorkers(*flags.workers);
  if (flags.alpha) {
    if (!(*flags.alpha > 0.0 && *flags.alpha < 1.0)) {
      throw ConfigError("--alpha must lie in (0, 1)");
    }
    config.alpha = *flags.alpha;
  }
  config.resume = flags.resume;

  const std::vector<CellSpec> cells = ExpandConfig(config);
  GridOptions options;
  options.alpha = config.alpha;
  options.workers = config.workers;
  options.resume = config.resume;
  options.warn = [&err](const std::string& m) { err << "warning: " << m << '\n'; };
  const GridSummary s = RunGrid(cells, config.master_seed, config.output, options);

  char wall[32];
  std::snprintf(wall, sizeof(wall), "%.3f", s.wall_ms / 1000.0);
  out << "cells: " << s.cells_total << " total, " << s.cells_skipped
      << " already done, " << s.cells_run << " run\n"
      << "wall time: " << wall << " s\n"
      << "redraws: " << s.redraw_total << ", clamped PIT values: "
      << s.clamp_total << '\n'
      << "results: " << config.output << '\n';
  return 0;
}

int DoExpand(const std::string& config_path, const std::string& preset,
             std::ostream& out) {
  std::vector<CellSpec> cells;
  if (!config_path.empty()) {
    cells = ExpandConfig(ParseConfigFile(config_path));
  } else if (preset == "full") {
    cells = FullBivariateGrid();
  } else {
    throw ConfigError("unknown grid preset '" + preset + "'");
  }
  for (const auto& c : cells) {
    out << FormatCellId(c.cell_id) << ',' << c.y_dist.label << ','
        << c.x_dist.label << ',' << (c.z_dist ? c.z_dist->label : "") << ','
        << c.n << ',' << c.R << ',' << c.B << '\n';
  }
  return 0;
}

int DoCheck(std::uint64_t seed, std::ostream& out) {
  bool all_ok = true;
  auto print = [&](const CheckLine& l) {
    all_ok = all_ok && l.ok;
    out << (l.ok ? "OK    " : "FAIL  ") << l.name << ": " << l.detail << '\n';
  };
  out << "moment table\n";
  for (const auto& l : CheckMomentTable()) print(l);
  out << "OLS oracle\n";
  print(CheckOlsOracle(seed, 2000));
  out << "GoF null calibration\n";
  for (const auto& l : CheckGofCalibration(seed, 28, 1000, 500)) print(l);
  out << (all_ok ? "all checks passed\n" : "some checks FAILED\n");
  return all_ok ? 0 : 1;
}

}  // namespace

int RunCli(int argc, const char* const* argv, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"Monte Carlo study of OLS t-statistic convergence"};
  app.require_subcommand(1);

  RunFlags run_flags;
  auto* run = app.add_subcommand("run", "Run a grid of cells and write results CSV");
  run->add_option("--config", run_flags.config, "JSON grid config")
      ->required()
      ->check(CLI::ExistingFile);
  run->add_option("--seed", run_flags.seed, "Master seed (overrides config)");
  run->add_option("--output", run_flags.output, "Results CSV (overrides config)");
  run->add_flag("--resume", run_flags.resume,
                "Keep completed rows of an existing results CSV");
  run->add_option("--workers", run_flags.workers, "Worker threads or 'auto'");
  run->add_option("--alpha", run_flags.alpha, "Rejection level (default 0.05)");

  std::string expand_config;
  std::string expand_preset = "full";
  auto* expand = app.add_subcommand("expand", "Print grid cells without running");
  auto* cfg_opt = expand->add_option("--config", expand_config, "JSON grid config")
                      ->check(CLI::ExistingFile);
  expand->add_option("--preset", expand_preset,
                     "Built-in grid when no config is given (full)")
      ->excludes(cfg_opt);

  std::uint64_t check_seed = 20240501;
  auto* check = app.add_subcommand("check", "Run the statistical self-tests");
  check->add_option("--seed", check_seed, "Seed for the randomized checks");

  auto* version = app.add_subcommand("version", "Print the version");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    if (run->parsed()) return DoRun(run_flags, out, err);
    if (expand->parsed()) return DoExpand(expand_config, expand_preset, out);
    if (check->parsed()) return DoCheck(check_seed, out);
    if (version->parsed()) {
      out << "olsconv " << kVersion << '\n';
      return 0;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}

}  // namespace olsconv
