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

#ifndef OLSCONV_CONFIG_H_
#define OLSCONV_CONFIG_H_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "olsconv/engine.h"

namespace olsconv {

inline constexpr std::string_view kStandardNPreset = "paper54";

// A grid run as read from a JSON config file. Schema keys: master_seed,
// y_dists, x_dists, z_dists, n_values | n_preset, R, B, alpha, output,
// workers. Unknown keys are rejected.
struct RunConfig {
  std::uint64_t master_seed = 1;
  std::vector<std::string> y_dists;
  std::vector<std::string> x_dists;
  std::vector<std::string> z_dists;
  std::vector<std::size_t> n_values;
  std::size_t R = kDefaultInnerRepeats;
  std::size_t B = kDefaultOuterRepeats;
  double alpha = kDefaultAlpha;
  std::string output = "results.csv";
  bool resume = false;
  unsigned workers = 0;  // 0 = auto
};

// Throws ConfigError with a message naming the offending key or label.
RunConfig ParseConfigText(std::string_view json_text);
RunConfig ParseConfigFile(const std::filesystem::path& path);

// Throws ConfigError for an unknown preset name.
std::vector<std::size_t> ResolveNPreset(std::string_view name);

// Accepts a count or "auto".
unsigned ParseWorkers(std::string_view text);

std::vector<CellSpec> ExpandConfig(const RunConfig& config);

}  // namespace olsconv

#endif  // OLSCONV_CONFIG_H_
