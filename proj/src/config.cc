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

#include "olsconv/config.h"

#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"
#include "olsconv/distributions.h"
#include "olsconv/errors.h"

namespace olsconv {

namespace {

using nlohmann::json;

std::vector<std::string> LabelList(const json& j, const char* key) {
  if (!j.is_array()) throw ConfigError(std::string(key) + " must be an array");
  std::vector<std::string> out;
  std::set<std::string> seen;
  for (const auto& e : j) {
    if (!e.is_string()) {
      throw ConfigError(std::string(key) + " entries must be strings");
    }
    const std::string label = e.get<std::string>();
    try {
      LookupDistribution(label);
    } catch (const ParameterDomainError&) {
      throw ConfigError(std::string(key) + ": unknown distribution label '" +
                        label + "'");
    }
    if (!seen.insert(label).second) {
      throw ConfigError(std::string(key) + ": duplicate label '" + label + "'");
    }
    out.push_back(label);
  }
  return out;
}

std::size_t Count(const json& j, const char* key) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0)) {
    throw ConfigError(std::string(key) + " must be a non-negative integer");
  }
  return j.get<std::size_t>();
}

}  // namespace

std::vector<std::size_t> ResolveNPreset(std::string_view name) {
  if (name == kStandardNPreset) return StandardNGrid();
  throw ConfigError("unknown n preset '" + std::string(name) + "'");
}

unsigned ParseWorkers(std::string_view text) {
  if (text == "auto") return 0;
  unsigned v = 0;
  auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || end != text.data() + text.size() || v == 0) {
    throw ConfigError("workers must be a positive integer or \"auto\"");
  }
  return v;
}

RunConfig ParseConfigText(std::string_view json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("malformed JSON: ") + e.what());
  }
  if (!j.is_object()) throw ConfigError("config must be a JSON object");

  static const std::set<std::string> kKeys = {
      "master_seed", "y_dists", "x_dists", "z_dists", "n_values", "n_preset",
      "R",           "B",       "alpha",   "output",  "workers"};
  for (const auto& [key, value] : j.items()) {
    if (kKeys.count(key) == 0) throw ConfigError("unknown config key '" + key + "'");
  }

  RunConfig c;
  if (j.contains("master_seed")) {
    const json& s = j["master_seed"];
    if (!s.is_number_unsigned() && !(s.is_number_integer() && s.get<long long>() >= 0)) {
      throw ConfigError("master_seed must be an unsigned 64-bit integer");
    }
    c.master_seed = s.get<std::uint64_t>();
  }
  if (!j.contains("y_dists") || !j.contains("x_dists")) {
    throw ConfigError("config needs y_dists and x_dists");
  }
  c.y_dists = LabelList(j["y_dists"], "y_dists");
  c.x_dists = LabelList(j["x_dists"], "x_dists");
  if (c.y_dists.empty() || c.x_dists.empty()) {
    throw ConfigError("y_dists and x_dists must not be empty");
  }
  if (j.contains("z_dists")) c.z_dists = LabelList(j["z_dists"], "z_dists");

  const bool has_values = j.contains("n_values");
  const bool has_preset = j.contains("n_preset");
  if (has_values == has_preset) {
    throw ConfigError("exactly one of n_values and n_preset is required");
  }
  if (has_values) {
    if (!j["n_values"].is_array() || j["n_values"].empty()) {
      throw ConfigError("n_values must be a non-empty array");
    }
    std::set<std::size_t> seen;
    for (const auto& e : j["n_values"]) {
      const std::size_t n = Count(e, "n_values");
      if (!seen.insert(n).second) {
        throw ConfigError("n_values: duplicate value " + std::to_string(n));
      }
      c.n_values.push_back(n);
    }
  } else {
    if (!j["n_preset"].is_string()) throw ConfigError("n_preset must be a string");
    c.n_values = ResolveNPreset(j["n_preset"].get<std::string>());
  }
  const std::size_t min_n = c.z_dists.empty() ? 4 : 5;
  for (std::size_t n : c.n_values) {
    if (n < min_n) {
      throw ConfigError("n_values: " + std::to_string(n) + " is below the minimum " +
                        std::to_string(min_n));
    }
  }

  if (j.contains("R")) c.R = Count(j["R"], "R");
  if (j.contains("B")) c.B = Count(j["B"], "B");
  if (c.R < 2) throw ConfigError("R must be at least 2");
  if (c.B < 1) throw ConfigError("B must be at least 1");
  if (j.contains("alpha")) {
    if (!j["alpha"].is_number()) throw ConfigError("alpha must be a number");
    c.alpha = j["alpha"].get<double>();
  }
  if (!(c.alpha > 0.0 && c.alpha < 1.0)) {
    throw ConfigError("alpha must lie in (0, 1)");
  }
  if (j.contains("output")) {
    if (!j["output"].is_string()) throw ConfigError("output must be a string");
    c.output = j["output"].get<std::string>();
  }
  if (j.contains("workers")) {
    const json& w = j["workers"];
    if (w.is_string()) {
      c.workers = ParseWorkers(w.get<std::string>());
    } else if (w.is_number_integer() && w.get<long long>() > 0) {
      c.workers = w.get<unsigned>();
    } else {
      throw ConfigError("workers must be a positive integer or \"auto\"");
    }
  }
  return c;
}

RunConfig ParseConfigFile(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return ParseConfigText(buf.str());
  } catch (const ConfigError& e) {
    throw ConfigError(path.string() + ": " + e.what());
  }
}

std::vector<CellSpec> ExpandConfig(const RunConfig& config) {
  auto resolve = [](const std::vector<std::string>& labels) {
    std::vector<DistributionSpec> out;
    for (const auto& l : labels) out.push_back(LookupDistribution(l));
    return out;
  };
  return ExpandGrid(resolve(config.y_dists), resolve(config.x_dists),
                    resolve(config.z_dists), config.n_values, config.R,
                    config.B);
}

}  // namespace olsconv
