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

#include "olsconv/gof.h"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "olsconv/errors.h"
#include "olsconv/regression.h"

namespace olsconv {

std::vector<double> Pit(std::span<const double> tvalues, int df,
                        std::size_t* clamp_count) {
  std::vector<double> u(tvalues.size());
  std::size_t clamped = 0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    double v = TCdf(tvalues[i], df);
    if (v < kPitClamp) {
      v = kPitClamp;
      ++clamped;
    } else if (v > 1.0 - kPitClamp) {
      v = 1.0 - kPitClamp;
      ++clamped;
    }
    u[i] = v;
  }
  std::sort(u.begin(), u.end());
  if (clamp_count != nullptr) *clamp_count = clamped;
  return u;
}

EdfStatistics ComputeEdfStatistics(std::span<const double> u) {
  const std::size_t m = u.size();
  if (m == 0) throw ContractViolation("EDF statistics need at least one value");
  for (std::size_t i = 0; i < m; ++i) {
    if (!(u[i] > 0.0 && u[i] < 1.0)) {
      throw ContractViolation("PIT value outside (0, 1)");
    }
    if (i > 0 && u[i] < u[i - 1]) {
      throw ContractViolation("PIT values must be sorted ascending");
    }
  }
  const double md = static_cast<double>(m);
  double ad_sum = 0.0;
  double w2 = 1.0 / (12.0 * md);
  double d = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    const double k = static_cast<double>(i + 1);
    ad_sum += (2.0 * k - 1.0) * (std::log(u[i]) + std::log1p(-u[m - 1 - i]));
    const double dev = u[i] - (2.0 * k - 1.0) / (2.0 * md);
    w2 += dev * dev;
    d = std::max({d, k / md - u[i], u[i] - (k - 1.0) / md});
  }
  return {-md - ad_sum / md, w2, d};
}

namespace {

// Gauss-Legendre nodes and weights on [-1, 1].
struct GaussLegendre {
  static constexpr int kOrder = 24;
  double node[kOrder];
  double weight[kOrder];

  GaussLegendre() {
    for (int i = 0; i < kOrder; ++i) {
      double x = std::cos(std::numbers::pi * (i + 0.75) / (kOrder + 0.5));
      double dp = 0.0;
      for (int it = 0; it < 100; ++it) {
        double p0 = 1.0, p1 = x;
        for (int k = 2; k <= kOrder; ++k) {
          const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
          p0 = p1;
          p1 = p2;
        }
        dp = kOrder * (x * p1 - p0) / (x * x - 1.0);
        const double dx = p1 / dp;
        x -= dx;
        if (std::fabs(dx) < 1e-16) break;
      }
      node[i] = x;
      weight[i] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
  }
};

// Asymptotic CDF of A^2 under a fully specified null (Anderson & Darling
// 1954):
//   F(z) = sqrt(2 pi) / z * sum_j a_j (4j+1) exp(-(4j+1)^2 pi^2 / (8z))
//          * int_0^inf exp(z / (8(w^2+1)) - (4j+1)^2 pi^2 w^2 / (8z)) dw
// with a_j = (-1)^j Gamma(j + 1/2) / (Gamma(1/2) j!).
double AdAsymptoticCdf(double z) {
  static const GaussLegendre gl;
  constexpr double kPi2 = std::numbers::pi * std::numbers::pi;
  constexpr int kPanels = 16;
  double sum = 0.0;
  double coef = 1.0;
  for (int j = 0; j < 200; ++j) {
    if (j > 0) coef *= -(j - 0.5) / j;
    const double k = 4.0 * j + 1.0;
    const double c = k * k * kPi2 / (8.0 * z);
    if (c - z / 8.0 > 745.0) break;
    // The Gaussian factor is below e^-45 beyond w_max.
    const double w_max = std::sqrt(45.0 / c);
    const double h = w_max / kPanels;
    double integral = 0.0;
    for (int p = 0; p < kPanels; ++p) {
      const double mid = (p + 0.5) * h;
      for (int i = 0; i < GaussLegendre::kOrder; ++i) {
        const double w = mid + 0.5 * h * gl.node[i];
        integral += gl.weight[i] *
                    std::exp(z / (8.0 * (w * w + 1.0)) - c * w * w - c);
      }
    }
    const double term = coef * k * 0.5 * h * integral;
    sum += term;
    if (std::fabs(term) < 1e-17 * std::fabs(sum)) break;
  }
  return std::sqrt(2.0 * std::numbers::pi) / z * sum;
}

}  // namespace

double AdPValue(double a2) {
  if (!(a2 > 0.0)) return 1.0;
  if (std::isinf(a2)) return 0.0;
  if (a2 > 12.0) {
    // Upper tail, p < 2e-6: the largest weight (1/2) of the chi-square
    // representation dominates, P(A^2 > z) ~ sqrt(3) erfc(sqrt(z)), with a
    // first-order correction fitted to the exact series at z = 8 and 12.
    return std::sqrt(3.0) * std::erfc(std::sqrt(a2)) * (1.0 + 0.3 / a2);
  }
  return std::clamp(1.0 - AdAsymptoticCdf(a2), 0.0, 1.0);
}

double CvmPValue(double w2) {
  // Asymptotic CDF of W^2 as a Bessel-K series (Csorgo & Faraway 1996).
  if (!(w2 > 0.0)) return 1.0;
  if (w2 > 2.5) {
    // Upper tail, p < 1e-6, where 1 - CDF is mostly rounding: the largest
    // weight 1/pi^2 dominates, P(W^2 > x) ~ sqrt(2) erfc(pi sqrt(x / 2)),
    // with a first-order correction fitted to the series at x = 2..3.
    return std::sqrt(2.0) * std::erfc(std::numbers::pi * std::sqrt(0.5 * w2)) *
           (1.0 + 0.0366 / w2);
  }
  double sum = 0.0;
  double coef = 1.0;  // Gamma(j + 1/2) / (Gamma(1/2) j!)
  for (int j = 0; j < 1000; ++j) {
    if (j > 0) coef *= (j - 0.5) / j;
    const double k = 4.0 * j + 1.0;
    const double arg = k * k / (16.0 * w2);
    if (arg > 700.0) break;
    const double term =
        coef * std::sqrt(k) * std::exp(-arg) * std::cyl_bessel_k(0.25, arg);
    sum += term;
    if (term < 1e-17 * sum) break;
  }
  const double cdf = sum / (std::numbers::pi * std::sqrt(w2));
  return std::clamp(1.0 - cdf, 0.0, 1.0);
}

double KolmogorovQ(double lambda) {
  if (!(lambda > 0.0)) return 1.0;
  if (lambda < 1.0) {
    // Jacobi theta form, fast for small lambda:
    // P(K <= l) = sqrt(2 pi) / l * sum_j exp(-(2j - 1)^2 pi^2 / (8 l^2)).
    const double c = std::numbers::pi * std::numbers::pi / (8.0 * lambda * lambda);
    double s = 0.0;
    for (int j = 1; j < 100; ++j) {
      const double k = 2.0 * j - 1.0;
      const double term = std::exp(-k * k * c);
      s += term;
      if (term < 1e-16 * s) break;
    }
    return std::clamp(1.0 - std::sqrt(2.0 * std::numbers::pi) / lambda * s, 0.0,
                      1.0);
  }
  double q = 0.0;
  for (int j = 1; j < 100; ++j) {
    const double term = std::exp(-2.0 * j * j * lambda * lambda);
    q += (j % 2 == 1) ? term : -term;
    if (term < 1e-12) break;
  }
  return std::clamp(2.0 * q, 0.0, 1.0);
}

double KsPValue(double d, std::size_t m) {
  return KolmogorovQ(std::sqrt(static_cast<double>(m)) * d);
}

GofReport TestAgainstT(std::span<const double> tvalues, int df) {
  GofReport r;
  r.m = tvalues.size();
  r.df = df;
  const std::vector<double> u = Pit(tvalues, df, &r.clamped);
  const EdfStatistics s = ComputeEdfStatistics(u);
  r.a2 = s.a2;
  r.w2 = s.w2;
  r.d = s.d;
  r.p_ad = AdPValue(s.a2);
  r.p_cvm = CvmPValue(s.w2);
  r.p_ks = KsPValue(s.d, r.m);
  return r;
}

}  // namespace olsconv
