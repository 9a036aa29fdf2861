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

#ifndef OLSCONV_SELFCHECK_H_
#define OLSCONV_SELFCHECK_H_

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace olsconv {

// Built-in statistical self-tests behind the `check` subcommand.

struct CheckLine {
  std::string name;
  bool ok = false;
  std::string detail;
};

struct ReferenceMoments {
  const char* label;
  double skewness;  // as published: unsigned for the Beta rows
  double kurtosis;
};

// Published two-decimal skewness and kurtosis of the catalog.
const std::vector<ReferenceMoments>& ReferenceMomentTable();

// Closed-form moments against the reference table, one line per
// distribution.
std::vector<CheckLine> CheckMomentTable();

// Random OLS instances against a long-double normal-equations solve.
CheckLine CheckOlsOracle(std::uint64_t seed, std::size_t instances);

// Rejection rates of AD, CvM and KS on exact t(df) batches; one line per
// test, OK when within 0.05 +/- 0.03.
std::vector<CheckLine> CheckGofCalibration(std::uint64_t seed, int df,
                                           std::size_t m, std::size_t batches);

}  // namespace olsconv

#endif  // OLSCONV_SELFCHECK_H_
