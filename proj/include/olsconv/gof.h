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

#ifndef OLSCONV_GOF_H_
#define OLSCONV_GOF_H_

#include <cstddef>
#include <span>
#include <vector>

namespace olsconv {

// PIT values are kept this far from 0 and 1 so that log(u) and log(1 - u)
// stay finite.
inline constexpr double kPitClamp = 1e-15;

// Statistics and p-values of the EDF tests of one batch against a fully
// specified t(df) reference (simple hypothesis, no estimated parameters).
struct GofReport {
  double a2 = 0.0;  // Anderson-Darling
  double w2 = 0.0;  // Cramer-von Mises
  double d = 0.0;   // Kolmogorov-Smirnov
  double p_ad = 1.0;
  double p_cvm = 1.0;
  double p_ks = 1.0;
  std::size_t m = 0;
  int df = 0;
  std::size_t clamped = 0;  // PIT values moved onto the clamp bounds
};

struct EdfStatistics {
  double a2 = 0.0;
  double w2 = 0.0;
  double d = 0.0;
};

// u_i = TCdf(t_i, df), sorted ascending and clamped to
// [kPitClamp, 1 - kPitClamp]. If clamp_count is non-null, it receives the
// number of clamped values.
std::vector<double> Pit(std::span<const double> tvalues, int df,
                        std::size_t* clamp_count = nullptr);

// Throws ContractViolation if u_sorted is empty, unsorted, or leaves (0, 1).
EdfStatistics ComputeEdfStatistics(std::span<const double> u_sorted);

// Upper-tail p-values from the asymptotic null distributions.
double AdPValue(double a2);
double CvmPValue(double w2);
// Kolmogorov's Q(sqrt(m) d).
double KsPValue(double d, std::size_t m);
double KolmogorovQ(double lambda);

GofReport TestAgainstT(std::span<const double> tvalues, int df);

}  // namespace olsconv

#endif  // OLSCONV_GOF_H_
