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

#include <algorithm>
#include <string>

#include "olsconv/engine.h"
#include "olsconv/errors.h"
#include "olsconv/random.h"

namespace olsconv {

std::uint64_t ComputeCellId(std::string_view y_label, std::string_view x_label,
                            std::string_view z_label, std::size_t n,
                            std::size_t R, std::size_t B) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  auto absorb = [&h](std::string_view s) {
    for (unsigned char c : s) {
      h ^= c;
      h *= 0x100000001b3ULL;
    }
    // Field separator that cannot occur in a label.
    h ^= 0x1f;
    h *= 0x100000001b3ULL;
  };
  absorb(y_label);
  absorb(x_label);
  absorb(z_label);
  absorb(std::to_string(n));
  absorb(std::to_string(R));
  absorb(std::to_string(B));
  return Mix64(h);
}

CellSpec MakeCell(DistributionSpec y, DistributionSpec x,
                  std::optional<DistributionSpec> z, std::size_t n,
                  std::size_t R, std::size_t B) {
  ValidateSpec(y);
  ValidateSpec(x);
  if (z) ValidateSpec(*z);
  const std::size_t min_n = z ? 5 : 4;
  if (n < min_n) {
    throw ContractViolation("cell needs n >= " + std::to_string(min_n) +
                            ", got " + std::to_string(n));
  }
  if (R < 2) throw ContractViolation("cell needs R >= 2");
  if (B < 1) throw ContractViolation("cell needs B >= 1");
  CellSpec c{std::move(y), std::move(x), std::move(z), n, R, B, 0};
  c.cell_id = ComputeCellId(c.y_dist.label, c.x_dist.label,
                            c.z_dist ? std::string_view(c.z_dist->label) : "",
                            n, R, B);
  return c;
}

std::vector<std::size_t> StandardNGrid() {
  struct Range {
    std::size_t from, to, by;
  };
  static constexpr Range kRanges[] = {
      {4, 28, 2},       {30, 50, 5},      {60, 100, 10},
      {120, 200, 20},   {250, 500, 50},   {600, 1000, 100},
      {1250, 2000, 250}, {2500, 5000, 500}, {6000, 10000, 1000},
  };
  std::vector<std::size_t> out;
  for (const Range& r : kRanges) {
    for (std::size_t n = r.from; n <= r.to; n += r.by) out.push_back(n);
  }
  return out;
}

std::vector<CellSpec> ExpandGrid(const std::vector<DistributionSpec>& y_dists,
                                 const std::vector<DistributionSpec>& x_dists,
                                 const std::vector<DistributionSpec>& z_dists,
                                 const std::vector<std::size_t>& n_values,
                                 std::size_t R, std::size_t B) {
  std::vector<CellSpec> cells;
  cells.reserve(y_dists.size() * x_dists.size() *
                std::max<std::size_t>(1, z_dists.size()) * n_values.size());
  for (const auto& y : y_dists) {
    for (const auto& x : x_dists) {
      if (z_dists.empty()) {
        for (std::size_t n : n_values) {
          cells.push_back(MakeCell(y, x, std::nullopt, n, R, B));
        }
        continue;
      }
      for (const auto& z : z_dists) {
        for (std::size_t n : n_values) {
          cells.push_back(MakeCell(y, x, z, n, R, B));
        }
      }
    }
  }
  return cells;
}

std::vector<CellSpec> FullBivariateGrid(std::size_t R, std::size_t B) {
  return ExpandGrid(Catalog(), Catalog(), {}, StandardNGrid(), R, B);
}

}  // namespace olsconv
