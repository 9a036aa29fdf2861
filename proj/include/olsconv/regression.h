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

#ifndef OLSCONV_REGRESSION_H_
#define OLSCONV_REGRESSION_H_

#include <optional>
#include <span>

namespace olsconv {

inline constexpr double kDefaultAlpha = 0.05;

// Slope t-values of one OLS fit with intercept. Intercept t-values are not
// reported.
struct FitResult {
  double t_x = 0.0;
  std::optional<double> t_z;
  int df = 0;
  // Two-sided test of a zero slope: 2 * (1 - TCdf(|t|, df)) <= alpha.
  bool reject_x = false;
  std::optional<bool> reject_z;
};

// y = b0 + b1 x. Requires equal lengths n >= 3 so that df >= 1
// (ContractViolation otherwise).
// Throws DegenerateFit when x is constant or the residuals vanish, both
// judged relative to the data scale at 1e-12.
FitResult FitSimple(std::span<const double> y, std::span<const double> x,
                    double alpha = kDefaultAlpha);

// y = b0 + bx x + bz z. Requires n >= 4. Throws DegenerateFit when the
// centered cross-product matrix of (x, z) is singular to a relative
// tolerance of 1e-10, or when the residuals vanish.
FitResult FitTwo(std::span<const double> y, std::span<const double> x,
                 std::span<const double> z, double alpha = kDefaultAlpha);

// CDF of Student's t with df >= 1 degrees of freedom.
double TCdf(double t, int df);

// 2 * P(T > |t|), computed from the lower tail so small p-values keep their
// relative precision.
double TwoSidedPValue(double t, int df);

// Regularized incomplete beta I_x(a, b) for a, b > 0. The complement
// y = 1 - x is passed separately so callers can supply it without
// cancellation.
double RegularizedIncompleteBeta(double a, double b, double x, double y);

}  // namespace olsconv

#endif  // OLSCONV_REGRESSION_H_
