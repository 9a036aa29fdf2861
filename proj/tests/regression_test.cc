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

#include "olsconv/regression.h"

#include <cmath>
#include <numbers>
#include <vector>

#include <boost/math/distributions/students_t.hpp>

#include "gtest/gtest.h"
#include "olsconv/distributions.h"
#include "olsconv/errors.h"
#include "olsconv/random.h"
#include "oracles.h"

namespace olsconv {
namespace {

TEST(TCdfTest, Symmetry) {
  for (int df : {1, 2, 7, 100, 100000}) EXPECT_EQ(TCdf(0.0, df), 0.5);
  for (int df : {1, 3, 28, 998, 9998}) {
    for (double t : {0.01, 0.5, 1.7, 4.0, 30.0}) {
      EXPECT_NEAR(TCdf(-t, df), 1.0 - TCdf(t, df), 1e-14) << df << " " << t;
    }
  }
}

TEST(TCdfTest, CauchyAndNormalLimits) {
  EXPECT_NEAR(TCdf(1.0, 1), 0.75, 1e-15);
  for (double t : {-20.0, -2.0, 0.3, 5.0}) {
    EXPECT_NEAR(TCdf(t, 1), 0.5 + std::atan(t) / std::numbers::pi, 1e-14);
  }
  EXPECT_NEAR(TCdf(1.96, 10000), 0.9750021, 0.0002);
}

TEST(TCdfTest, MatchesBoostStudentT) {
  double worst = 0.0;
  for (int df : {1, 2, 3, 4, 5, 8, 13, 28, 50, 98, 998, 5000, 9998, 31623, 100000}) {
    const boost::math::students_t ref(df);
    for (double t = -40.0; t <= 40.0; t += 0.173) {
      const double diff = std::fabs(TCdf(t, df) - boost::math::cdf(ref, t));
      worst = std::max(worst, diff);
      ASSERT_LE(diff, 1e-12) << "df=" << df << " t=" << t;
    }
  }
  RecordProperty("worst_abs_error", std::to_string(worst));
}

TEST(TCdfTest, Monotone) {
  for (int df : {1, 4, 60, 9998}) {
    double prev = 0.0;
    for (double t = -60.0; t <= 60.0; t += 0.01) {
      const double c = TCdf(t, df);
      ASSERT_GE(c, prev) << df << " " << t;
      prev = c;
    }
  }
}

TEST(TCdfTest, TwoSidedPValueKeepsSmallTails) {
  const boost::math::students_t ref(28);
  const double p = TwoSidedPValue(12.0, 28);
  EXPECT_NEAR(p / (2 * boost::math::cdf(complement(ref, 12.0))), 1.0, 1e-10);
  EXPECT_EQ(TwoSidedPValue(0.0, 5), 1.0);
}

TEST(TCdfTest, RejectsZeroDf) { EXPECT_THROW(TCdf(1.0, 0), ContractViolation); }

TEST(FitSimpleTest, HandComputedInstance) {
  const std::vector<double> x = {0, 1, 2};
  const std::vector<double> y = {0, 1, 1};
  const FitResult r = FitSimple(y, x);
  EXPECT_NEAR(r.t_x, std::sqrt(3.0), 1e-12);
  EXPECT_EQ(r.df, 1);
  EXPECT_FALSE(r.t_z.has_value());
}

TEST(FitSimpleTest, FlatResponseIsDegenerate) {
  const std::vector<double> x = {0, 1, 2};
  for (double c : {0.0, 3.5, -1e6}) {
    const std::vector<double> y = {c, c, c};
    EXPECT_THROW(FitSimple(y, x), DegenerateFit);
  }
}

TEST(FitSimpleTest, ConstantRegressorIsDegenerate) {
  const std::vector<double> x = {2, 2, 2, 2};
  const std::vector<double> y = {0.1, 0.4, -1, 3};
  EXPECT_THROW(FitSimple(y, x), DegenerateFit);
}

TEST(FitSimpleTest, LengthMismatch) {
  const std::vector<double> x = {0, 1, 2, 3};
  const std::vector<double> y = {0, 1, 2};
  EXPECT_THROW(FitSimple(y, x), ContractViolation);
  EXPECT_THROW(FitSimple(std::vector<double>{1, 2}, std::vector<double>{1, 3}),
               ContractViolation);
}

TEST(FitSimpleTest, AffineInvarianceInXAndScaleInvarianceInY) {
  RandomStream stream(5);
  for (int rep = 0; rep < 200; ++rep) {
    const std::size_t n = 4 + rep % 60;
    const auto x = DrawSample(LookupDistribution("lognormal_1"), n, stream).values;
    const auto y = DrawSample(LaplaceSpec(), n, stream).values;
    const double t = FitSimple(y, x).t_x;
    for (auto [a, b] : {std::pair{3.0, -7.0}, {-0.25, 100.0}, {1e5, 1e-3}}) {
      std::vector<double> x2(x), y2(y);
      for (double& v : x2) v = a * v + b;
      const double ta = FitSimple(y, x2).t_x;
      EXPECT_NEAR(ta, a > 0 ? t : -t, 1e-9 * std::max(1.0, std::fabs(t)));
      for (double& v : y2) v *= a;
      const double ty = FitSimple(y2, x).t_x;
      EXPECT_NEAR(ty, a > 0 ? t : -t, 1e-9 * std::max(1.0, std::fabs(t)));
    }
  }
}

TEST(FitSimpleTest, RejectionFlagMatchesPValue) {
  RandomStream stream(6);
  int rejected = 0;
  for (int rep = 0; rep < 2000; ++rep) {
    const auto x = DrawSample(NormalSpec(), 12, stream).values;
    const auto y = DrawSample(NormalSpec(), 12, stream).values;
    const FitResult r = FitSimple(y, x);
    const bool expected = 2.0 * (1.0 - TCdf(std::fabs(r.t_x), r.df)) <= 0.05;
    EXPECT_EQ(r.reject_x, expected);
    rejected += r.reject_x;
    EXPECT_EQ(FitSimple(y, x, 0.5).reject_x,
              2.0 * (1.0 - TCdf(std::fabs(r.t_x), r.df)) <= 0.5);
  }
  EXPECT_GT(rejected, 0);
}

TEST(FitTwoTest, CollinearIsDegenerate) {
  const std::vector<double> x = {0.3, 1.2, 2.5, -1, 4};
  const std::vector<double> y = {1, 0, 2, 1, 3};
  EXPECT_THROW(FitTwo(y, x, x), DegenerateFit);
  std::vector<double> z(x);
  for (double& v : z) v = 2 * v - 1;
  EXPECT_THROW(FitTwo(y, x, z), DegenerateFit);
}

// A z orthogonal to 1, x and y in-sample leaves the x coefficient and the
// residuals unchanged, so t_x only picks up the df change.
TEST(FitTwoTest, OrthogonalRegressorOnlyChangesDf) {
  RandomStream stream(7);
  for (int rep = 0; rep < 100; ++rep) {
    const std::size_t n = 6 + rep;
    const auto x = DrawSample(UniformSpec(), n, stream).values;
    const auto y = DrawSample(NormalSpec(), n, stream).values;
    std::vector<double> z = DrawSample(NormalSpec(), n, stream).values;
    // Gram-Schmidt of z against (1, x, y), twice for accuracy.
    for (int pass = 0; pass < 2; ++pass) {
      std::vector<std::vector<double>> basis = {std::vector<double>(n, 1.0), x, y};
      for (std::size_t i = 0; i < basis.size(); ++i) {
        for (std::size_t j = 0; j < i; ++j) {
          double num = 0, den = 0;
          for (std::size_t k = 0; k < n; ++k) {
            num += basis[i][k] * basis[j][k];
            den += basis[j][k] * basis[j][k];
          }
          for (std::size_t k = 0; k < n; ++k) basis[i][k] -= num / den * basis[j][k];
        }
      }
      for (const auto& b : basis) {
        double num = 0, den = 0;
        for (std::size_t k = 0; k < n; ++k) {
          num += z[k] * b[k];
          den += b[k] * b[k];
        }
        for (std::size_t k = 0; k < n; ++k) z[k] -= num / den * b[k];
      }
    }
    const FitResult simple = FitSimple(y, x);
    const FitResult two = FitTwo(y, x, z);
    EXPECT_EQ(two.df, simple.df - 1);
    const double expected =
        simple.t_x * std::sqrt(static_cast<double>(two.df) / simple.df);
    EXPECT_NEAR(two.t_x, expected, 1e-10 * std::max(1.0, std::fabs(expected)));
    ASSERT_TRUE(two.t_z.has_value());
    EXPECT_NEAR(*two.t_z, 0.0, 1e-6);
  }
}

TEST(FitTwoTest, MatchesHighPrecisionOracleAtN50) {
  RandomStream stream(8);
  for (int rep = 0; rep < 50; ++rep) {
    const auto y = DrawSample(NormalSpec(), 50, stream).values;
    const auto x = DrawSample(LookupDistribution("beta_5_1"), 50, stream).values;
    const auto z = DrawSample(LookupDistribution("lognormal_1"), 50, stream).values;
    const FitResult r = FitTwo(y, x, z);
    const auto ref = testing::HighPrecisionSlopeT(y, {x, z});
    EXPECT_NEAR(r.t_x / ref[0].convert_to<double>(), 1.0, 1e-10);
    EXPECT_NEAR(*r.t_z / ref[1].convert_to<double>(), 1.0, 1e-10);
    EXPECT_EQ(r.reject_z.value(), TwoSidedPValue(*r.t_z, r.df) <= 0.05);
  }
}

// Heavy-tailed regressors spanning many orders of magnitude are where naive
// accumulation fails.
TEST(FitSimpleTest, HeavyTailsMatchHighPrecisionOracle) {
  RandomStream stream(9);
  const DistributionSpec ln2 = LookupDistribution("lognormal_2");
  double worst = 0.0;
  for (int rep = 0; rep < 300; ++rep) {
    const std::size_t n = 4 + (rep * 37) % 997;
    const auto x = DrawSample(ln2, n, stream).values;
    const auto y = Center(DrawSample(ln2, n, stream)).values;
    const double t = FitSimple(y, x).t_x;
    const double ref = testing::HighPrecisionSlopeT(y, {x})[0].convert_to<double>();
    worst = std::max(worst, std::fabs(t / ref - 1.0));
  }
  EXPECT_LT(worst, 1e-10);
}

}  // namespace
}  // namespace olsconv
