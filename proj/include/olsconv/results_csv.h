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

#ifndef OLSCONV_RESULTS_CSV_H_
#define OLSCONV_RESULTS_CSV_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "olsconv/engine.h"

namespace olsconv {

inline constexpr std::string_view kResultsHeader =
    "cell_id,y_dist,x_dist,z_dist,n,R,B,ad_reject_rate,cvm_reject_rate,"
    "ks_reject_rate,type1_rate_x,type1_rate_z,redraw_count,clamp_count,"
    "elapsed_ms,master_seed";

// cell_id as 16 lowercase hex digits, so byte order equals numeric order.
std::string FormatCellId(std::uint64_t id);
std::optional<std::uint64_t> ParseCellId(std::string_view text);

// One CSV line without the trailing newline. Reals use the shortest
// round-trip representation.
std::string FormatRow(const CellResult& r);

// Returns nullopt for a malformed row, including one whose cell_id does
// not match its own identity columns.
std::optional<CellResult> ParseRow(std::string_view line);

// Header plus data rows sorted by cell_id with elapsed_ms zeroed: the form
// in which runs of the same grid and seed compare byte-equal.
std::string CanonicalizeResults(std::string_view csv_text);

}  // namespace olsconv

#endif  // OLSCONV_RESULTS_CSV_H_
