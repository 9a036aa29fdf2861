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

#include "olsconv/selfcheck.h"

#include <cmath>
#include <cstdio>
#include <utility>

#include "olsconv/distributions.h"
#include "olsconv/errors.h"
#include "olsconv/gof.h"
#include "olsconv/random.h"
#include "olsconv/regression.h"

namespace olsconv {

namespace {

std::string Format(const char* fmt, auto... args) {
  char buf[256];
  std::snprintf(buf, sizeof(buf), fmt, args...);
  return buf;
}

// Two-decimal agreement; ties such as 1.125 may be printed either way.
bool AgreesTo2dp(double value, double reference) {
  return std::fabs(value - reference) <= 0.005 + 1e-12 * std::fabs(reference);
}

// t-value of the first slope via raw normal equations in long double.
long double OracleSlopeT(const std::vector<std::vector<double>>& cols,
                         std::span<const double> y) {
  const std::size_t k = cols.size() + 1;
  const std::size_t n = y.size();
  auto col = [&](std::size_t j, std::size_t i) -> long double {
    return j == 0 ? 1.0L : static_cast<long double>(cols[j - 1][i]);
  };
  std::vector<std::vector<long double>> a(k, std::vector<long double>(2 * k, 0.0L));
  std::vector<long double> xty(k, 0.0L);
  for (std::size_t r = 0; r < k; ++r) {
    for (std::size_t c = 0; c < k; ++c) {
      for (std::size_t i = 0; i < n; ++i) a[r][c] += col(r, i) * col(c, i);
    }
    a[r][k + r] = 1.0L;
    for (std::size_t i = 0; i < n; ++i) xty[r] += col(r, i) * y[i];
  }
  // Gauss-Jordan inverse with partial pivoting.
  for (std::size_t p = 0; p < k; ++p) {
    std::size_t best = p;
    for (std::size_t r = p + 1; r < k; ++r) {
      if (std::fabs(a[r][p]) > std::fabs(a[best][p])) best = r;
    }
    std::swap(a[p], a[best]);
    const long double piv = a[p][p];
    for (auto& v : a[p]) v /= piv;
    for (std::size_t r = 0; r < k; ++r) {
      if (r == p) continue;
      const long double f = a[r][p];
      for (std::size_t c = 0; c < 2 * k; ++c) a[r][c] -= f * a[p][c];
    }
  }
  std::vector<long double> beta(k, 0.0L);
  for (std::size_t r = 0; r < k; ++r) {
    for (std::size_t c = 0; c < k; ++c) beta[r] += a[r][k + c] * xty[c];
  }
  long double sse = 0.0L;
  for (std::size_t i = 0; i < n; ++i) {
    long double e = y[i];
    for (std::size_t j = 0; j < k; ++j) e -= beta[j] * col(j, i);
    sse += e * e;
  }
  const long double s2 = sse / static_cast<long double>(n - k);
  return beta[1] / std::sqrt(s2 * a[1][k + 1]);
}

}  // namespace

const std::vector<ReferenceMoments>& ReferenceMomentTable() {
  static const std::vector<ReferenceMoments> table = {
      {"normal", 0.00, 3.00},
      {"uniform", 0.00, 1.80},
      {"laplace", 0.00, 6.00},
      {"beta_0.1_0.1", 0.00, 1.12},
      {"beta_5_2", 0.60, 2.88},
      {"beta_5_1", 1.18, 4.20},
      {"beta_5_0.5", 1.93, 7.25},
      {"lognormal_0.5", 1.75, 8.90},
      {"lognormal_1", 6.18, 113.94},
      {"lognormal_1.5", 33.47, 10078.25},
      {"lognormal_2", 414.36, 9220559.98},
  };
  return table;
}

std::vector<CheckLine> CheckMomentTable() {
  std::vector<CheckLine> lines;
  for (const auto& ref : ReferenceMomentTable()) {
    const DistributionSpec& spec = LookupDistribution(ref.label);
    const Moments m = TheoreticalMoments(spec);
    // The reference lists Beta(5, b) skewness without its (negative) sign.
    const double skew =
        spec.family == Family::kBeta ? std::fabs(m.skewness) : m.skewness;
    const bool ok =
        AgreesTo2dp(skew, ref.skewness) && AgreesTo2dp(m.kurtosis, ref.kurtosis);
    lines.push_back({ref.label, ok,
                     Format("skew %.2f (ref %.2f, signed %.4f)  kurt %.2f (ref %.2f)",
                            skew, ref.skewness, m.skewness, m.kurtosis,
                            ref.kurtosis)});
  }
  return lines;
}

CheckLine CheckOlsOracle(std::uint64_t seed, std::size_t instances) {
  const DistributionSpec dists[] = {NormalSpec(), UniformSpec(), LaplaceSpec(),
                                    LookupDistribution("beta_5_2"),
                                    LookupDistribution("lognormal_0.5")};
  RandomStream stream(seed);
  double worst = 0.0;
  std::size_t done = 0;
  for (std::size_t i = 0; i < instances; ++i) {
    const bool two = (stream.NextU64() & 1) != 0;
    const std::size_t n = (two ? 5 : 4) + stream.NextU64() % (two ? 96 : 97);
    auto pick = [&]() -> const DistributionSpec& {
      return dists[stream.NextU64() % std::size(dists)];
    };
    const Sample y = DrawSample(pick(), n, stream);
    std::vector<std::vector<double>> cols;
    cols.push_back(DrawSample(pick(), n, stream).values);
    if (two) cols.push_back(DrawSample(pick(), n, stream).values);
    double t;
    try {
      t = two ? FitTwo(y.values, cols[0], cols[1]).t_x
              : FitSimple(y.values, cols[0]).t_x;
    } catch (const DegenerateFit&) {
      continue;
    }
    const long double ref = OracleSlopeT(cols, y.values);
    const double rel = static_cast<double>(std::fabs((t - ref) / ref));
    worst = std::max(worst, rel);
    ++done;
  }
  return {"ols-oracle", worst <= 1e-10,
          Format("%zu instances, worst relative t error %.3g (limit 1e-10)",
                 done, worst)};
}

std::vector<CheckLine> CheckGofCalibration(std::uint64_t seed, int df,
                                           std::size_t m, std::size_t batches) {
  std::size_t ad = 0, cvm = 0, ks = 0;
  std::vector<double> t(m);
  for (std::size_t b = 0; b < batches; ++b) {
    RandomStream stream(DeriveSeed(seed, static_cast<std::uint64_t>(df), b));
    for (double& v : t) v = DrawStudentT(df, stream);
    const GofReport g = TestAgainstT(t, df);
    ad += g.p_ad <= kDefaultAlpha;
    cvm += g.p_cvm <= kDefaultAlpha;
    ks += g.p_ks <= kDefaultAlpha;
  }
  std::vector<CheckLine> lines;
  const std::pair<const char*, std::size_t> rows[] = {
      {"anderson-darling", ad}, {"cramer-von-mises", cvm}, {"kolmogorov-smirnov", ks}};
  for (const auto& [name, count] : rows) {
    const double rate = static_cast<double>(count) / batches;
    lines.push_back({std::string("gof-calibration ") + name,
                     std::fabs(rate - 0.05) <= 0.03,
                     Format("t(%d), m=%zu, B=%zu: rejection rate %.3f (target "
                            "0.05 +/- 0.03)",
                            df, m, batches, rate)});
  }
  return lines;
}

}  // namespace olsconv
