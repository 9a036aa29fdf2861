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

#include "olsconv/results_csv.h"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <sstream>
#include <vector>

namespace olsconv {

namespace {

constexpr std::size_t kColumns = 16;

std::vector<std::string_view> SplitCsv(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    const std::size_t comma = line.find(',', start);
    if (comma == std::string_view::npos) {
      out.push_back(line.substr(start));
      return out;
    }
    out.push_back(line.substr(start, comma - start));
    start = comma + 1;
  }
}

void AppendDouble(std::string& out, double v) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  out.append(buf, end);
}

template <typename T>
bool ParseNumber(std::string_view s, T& out) {
  if (s.empty()) return false;
  auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && end == s.data() + s.size();
}

bool ParseRate(std::string_view s, double& out) {
  return ParseNumber(s, out) && out >= 0.0 && out <= 1.0;
}

}  // namespace

std::string FormatCellId(std::uint64_t id) {
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx",
                static_cast<unsigned long long>(id));
  return buf;
}

std::optional<std::uint64_t> ParseCellId(std::string_view text) {
  if (text.size() != 16) return std::nullopt;
  std::uint64_t v = 0;
  auto [end, ec] =
      std::from_chars(text.data(), text.data() + text.size(), v, 16);
  if (ec != std::errc() || end != text.data() + text.size()) {
    return std::nullopt;
  }
  return v;
}

std::string FormatRow(const CellResult& r) {
  std::string s = FormatCellId(r.cell_id);
  s += ',';
  s += r.y_dist;
  s += ',';
  s += r.x_dist;
  s += ',';
  s += r.z_dist;
  s += ',';
  s += std::to_string(r.n);
  s += ',';
  s += std::to_string(r.R);
  s += ',';
  s += std::to_string(r.B);
  s += ',';
  AppendDouble(s, r.ad_reject_rate);
  s += ',';
  AppendDouble(s, r.cvm_reject_rate);
  s += ',';
  AppendDouble(s, r.ks_reject_rate);
  s += ',';
  AppendDouble(s, r.type1_rate_x);
  s += ',';
  if (r.type1_rate_z) AppendDouble(s, *r.type1_rate_z);
  s += ',';
  s += std::to_string(r.redraw_count);
  s += ',';
  s += std::to_string(r.clamp_count);
  s += ',';
  s += std::to_string(r.elapsed_ms);
  s += ',';
  s += std::to_string(r.master_seed);
  return s;
}

std::optional<CellResult> ParseRow(std::string_view line) {
  if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
  const auto f = SplitCsv(line);
  if (f.size() != kColumns) return std::nullopt;
  CellResult r;
  const auto id = ParseCellId(f[0]);
  if (!id) return std::nullopt;
  r.cell_id = *id;
  if (f[1].empty() || f[2].empty()) return std::nullopt;
  r.y_dist = f[1];
  r.x_dist = f[2];
  r.z_dist = f[3];
  if (!ParseNumber(f[4], r.n) || !ParseNumber(f[5], r.R) ||
      !ParseNumber(f[6], r.B)) {
    return std::nullopt;
  }
  if (!ParseRate(f[7], r.ad_reject_rate) ||
      !ParseRate(f[8], r.cvm_reject_rate) ||
      !ParseRate(f[9], r.ks_reject_rate) || !ParseRate(f[10], r.type1_rate_x)) {
    return std::nullopt;
  }
  // type1_rate_z is present exactly when the cell has a z distribution.
  if (r.z_dist.empty() != f[11].empty()) return std::nullopt;
  if (!f[11].empty()) {
    double z = 0.0;
    if (!ParseRate(f[11], z)) return std::nullopt;
    r.type1_rate_z = z;
  }
  if (!ParseNumber(f[12], r.redraw_count) ||
      !ParseNumber(f[13], r.clamp_count) || !ParseNumber(f[14], r.elapsed_ms) ||
      !ParseNumber(f[15], r.master_seed)) {
    return std::nullopt;
  }
  if (ComputeCellId(r.y_dist, r.x_dist, r.z_dist, r.n, r.R, r.B) != r.cell_id) {
    return std::nullopt;
  }
  return r;
}

std::string CanonicalizeResults(std::string_view csv_text) {
  std::vector<std::string> rows;
  std::istringstream in{std::string(csv_text)};
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    if (first) {
      first = false;
      continue;
    }
    if (line.empty()) continue;
    auto fields = SplitCsv(line);
    if (fields.size() == kColumns) {
      std::string rebuilt;
      for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i > 0) rebuilt += ',';
        rebuilt += (i == 14) ? std::string_view("0") : fields[i];
      }
      line = std::move(rebuilt);
    }
    rows.push_back(std::move(line));
  }
  std::sort(rows.begin(), rows.end());
  std::string out(kResultsHeader);
  out += '\n';
  for (const auto& r : rows) {
    out += r;
    out += '\n';
  }
  return out;
}

}  // namespace olsconv
