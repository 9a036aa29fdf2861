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

#ifndef OLSCONV_ENGINE_H_
#define OLSCONV_ENGINE_H_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "olsconv/distributions.h"
#include "olsconv/regression.h"

namespace olsconv {

inline constexpr std::size_t kDefaultInnerRepeats = 1000;  // R
inline constexpr std::size_t kDefaultOuterRepeats = 500;   // B

// One grid point. Build with MakeCell so that cell_id is filled in and the
// invariants are checked.
struct CellSpec {
  DistributionSpec y_dist;
  DistributionSpec x_dist;
  std::optional<DistributionSpec> z_dist;
  std::size_t n = 0;
  std::size_t R = kDefaultInnerRepeats;
  std::size_t B = kDefaultOuterRepeats;
  std::uint64_t cell_id = 0;

  // Number of estimated coefficients including the intercept.
  int Parameters() const { return z_dist ? 3 : 2; }
  int Df() const { return static_cast<int>(n) - Parameters(); }
};

// Stable across runs and machines: FNV-1a over the labels and counts,
// finalized with Mix64.
std::uint64_t ComputeCellId(std::string_view y_label, std::string_view x_label,
                            std::string_view z_label, std::size_t n,
                            std::size_t R, std::size_t B);

// Throws ContractViolation unless n >= 4 (n >= 5 with z), R >= 2, B >= 1.
CellSpec MakeCell(DistributionSpec y, DistributionSpec x,
                  std::optional<DistributionSpec> z, std::size_t n,
                  std::size_t R = kDefaultInnerRepeats,
                  std::size_t B = kDefaultOuterRepeats);

struct CellResult {
  std::uint64_t cell_id = 0;
  std::string y_dist;
  std::string x_dist;
  std::string z_dist;  // empty in bivariate mode
  std::size_t n = 0;
  std::size_t R = 0;
  std::size_t B = 0;
  double ad_reject_rate = 0.0;
  double cvm_reject_rate = 0.0;
  double ks_reject_rate = 0.0;
  double type1_rate_x = 0.0;
  std::optional<double> type1_rate_z;
  std::uint64_t redraw_count = 0;
  std::uint64_t clamp_count = 0;
  std::uint64_t elapsed_ms = 0;
  std::uint64_t master_seed = 0;
};

struct CellOptions {
  double alpha = kDefaultAlpha;
  // Threads used across the outer repeats of this one cell. Results do not
  // depend on it.
  unsigned workers = 1;
};

// Runs B batches of R null regressions. Throws CellError if a batch needs
// more than 100 * R redraws of degenerate samples.
CellResult RunCell(const CellSpec& cell, std::uint64_t master,
                   const CellOptions& options = {});

struct GridOptions {
  double alpha = kDefaultAlpha;
  unsigned workers = 1;  // 0 = hardware concurrency
  bool resume = false;
  // Receives warnings (discarded checkpoint rows). Defaults to stderr.
  std::function<void(const std::string&)> warn;
  // Called after each completed cell, from the writer lock.
  std::function<void(const CellResult&)> on_cell;
};

struct GridSummary {
  std::size_t cells_total = 0;
  std::size_t cells_skipped = 0;  // already present in the checkpoint
  std::size_t cells_run = 0;
  std::uint64_t redraw_total = 0;
  std::uint64_t clamp_total = 0;
  double wall_ms = 0.0;
};

// Runs every cell not already in the results CSV and appends one row per
// completed cell. Without resume, an existing file is replaced.
GridSummary RunGrid(const std::vector<CellSpec>& cells, std::uint64_t master,
                    const std::filesystem::path& results_path,
                    const GridOptions& options = {});

// The 54 sample sizes 4..10000 of the reference design.
std::vector<std::size_t> StandardNGrid();

// Cartesian product y x x x z x n in that nesting order. An empty z list
// means bivariate cells.
std::vector<CellSpec> ExpandGrid(const std::vector<DistributionSpec>& y_dists,
                                 const std::vector<DistributionSpec>& x_dists,
                                 const std::vector<DistributionSpec>& z_dists,
                                 const std::vector<std::size_t>& n_values,
                                 std::size_t R = kDefaultInnerRepeats,
                                 std::size_t B = kDefaultOuterRepeats);

// All catalog distributions for y and x over StandardNGrid().
std::vector<CellSpec> FullBivariateGrid(std::size_t R = kDefaultInnerRepeats,
                                         std::size_t B = kDefaultOuterRepeats);

}  // namespace olsconv

#endif  // OLSCONV_ENGINE_H_
