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
#include <limits>
#include <numbers>
#include <string>

#include "olsconv/errors.h"
#include "olsconv/numerics.h"

namespace olsconv {

namespace {

constexpr double kDegenerateTol = 1e-12;
constexpr double kRankTol = 1e-10;

void CheckLengths(std::size_t a, std::size_t b, std::size_t min_n) {
  if (a != b) {
    throw ContractViolation("length mismatch: " + std::to_string(a) + " vs " +
                            std::to_string(b));
  }
  if (a < min_n) {
    throw ContractViolation("need at least " + std::to_string(min_n) +
                            " observations, got " + std::to_string(a));
  }
}

// Centered sums of squares and cross-products, two-pass with compensated
// accumulation.
struct Centered {
  double mean = 0.0;
  double ss = 0.0;   // sum (v - mean)^2
  double raw = 0.0;  // sum v^2, for scale
};

Centered CenterStats(std::span<const double> v) {
  Centered c;
  c.mean = CompensatedMean(v);
  CompensatedSum ss, raw;
  for (double e : v) {
    const double d = e - c.mean;
    ss.Add(d * d);
    raw.Add(e * e);
  }
  c.ss = ss.Value();
  c.raw = raw.Value();
  return c;
}

double CrossProduct(std::span<const double> a, double ma,
                    std::span<const double> b, double mb) {
  CompensatedSum s;
  for (std::size_t i = 0; i < a.size(); ++i) s.Add((a[i] - ma) * (b[i] - mb));
  return s.Value();
}

bool Rejects(double t, int df, double alpha) {
  return TwoSidedPValue(t, df) <= alpha;
}

// log(Gamma(a + 1/2) / Gamma(a)), accurate to a few ulps of the result even
// for very large a where lgamma differences cancel.
double LogGammaHalfRatio(double a) {
  if (a < 10.0) return std::log(std::tgamma(a + 0.5) / std::tgamma(a));
  // Stirling series for log Gamma(z) - [(z - 1/2) log z - z + log(2 pi)/2].
  auto tail = [](double z) {
    const double r = 1.0 / z;
    const double r2 = r * r;
    return r * (1.0 / 12.0 -
                r2 * (1.0 / 360.0 -
                      r2 * (1.0 / 1260.0 -
                            r2 * (1.0 / 1680.0 - r2 * (1.0 / 1188.0)))));
  };
  // (a)log(a + 1/2) - (a - 1/2)log(a) - 1/2, rearranged without cancellation.
  const double lead =
      0.5 * std::log(a) + a * std::log1p(0.5 / a) - 0.5;
  return lead + tail(a + 0.5) - tail(a);
}

// Continued fraction for I_x(a, b) (modified Lentz).
double BetaContinuedFraction(double a, double b, double x) {
  constexpr double kTiny = 1e-300;
  constexpr double kEps = 1e-16;
  const double qab = a + b;
  const double qap = a + 1.0;
  const double qam = a - 1.0;
  double c = 1.0;
  double d = 1.0 - qab * x / qap;
  if (std::fabs(d) < kTiny) d = kTiny;
  d = 1.0 / d;
  double h = d;
  for (int m = 1; m <= 100000; ++m) {
    const double m2 = 2.0 * m;
    double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::fabs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    h *= d * c;
    aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::fabs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    const double del = d * c;
    h *= del;
    if (std::fabs(del - 1.0) < kEps) break;
  }
  return h;
}

double LogBeta(double a, double b) {
  if (b == 0.5) {
    return 0.5 * std::log(std::numbers::pi) - LogGammaHalfRatio(a);
  }
  if (a == 0.5) return LogBeta(b, a);
  return std::lgamma(a) + std::lgamma(b) - std::lgamma(a + b);
}

// I_x(a, b) with log(x) and log(y) supplied by the caller; for large a the
// prefactor x^a amplifies any rounding in x itself.
double IncompleteBetaWithLogs(double a, double b, double x, double y,
                              double log_x, double log_y) {
  if (x <= 0.0) return 0.0;
  if (y <= 0.0) return 1.0;
  const double front = std::exp(a * log_x + b * log_y - LogBeta(a, b));
  if (x < (a + 1.0) / (a + b + 2.0)) {
    return front * BetaContinuedFraction(a, b, x) / a;
  }
  return 1.0 - front * BetaContinuedFraction(b, a, y) / b;
}

}  // namespace

double RegularizedIncompleteBeta(double a, double b, double x, double y) {
  if (x <= 0.0) return 0.0;
  if (y <= 0.0) return 1.0;
  return IncompleteBetaWithLogs(a, b, x, y, std::log(x), std::log(y));
}

double TCdf(double t, int df) {
  if (df < 1) throw ContractViolation("t distribution needs df >= 1");
  if (std::isnan(t)) return t;
  if (t == 0.0) return 0.5;
  if (std::isinf(t)) return t > 0 ? 1.0 : 0.0;
  const double nu = static_cast<double>(df);
  const double t2 = t * t;
  // x = nu / (nu + t^2), y = t^2 / (nu + t^2), and their logs, each formed
  // without subtraction.
  double x, y, log_x, log_y;
  if (t2 < nu) {
    const double r = t2 / nu;
    x = 1.0 / (1.0 + r);
    y = r / (1.0 + r);
    log_x = -std::log1p(r);
    log_y = std::log(r) + log_x;
  } else {
    const double r = nu / t2;
    x = r / (1.0 + r);
    y = 1.0 / (1.0 + r);
    log_y = -std::log1p(r);
    log_x = std::log(r) + log_y;
  }
  const double tail =
      0.5 * IncompleteBetaWithLogs(0.5 * nu, 0.5, x, y, log_x, log_y);
  return t > 0 ? 1.0 - tail : tail;
}

double TwoSidedPValue(double t, int df) {
  const double p = 2.0 * TCdf(-std::fabs(t), df);
  return p > 1.0 ? 1.0 : p;
}

FitResult FitSimple(std::span<const double> y, std::span<const double> x,
                    double alpha) {
  CheckLengths(y.size(), x.size(), 3);
  const std::size_t n = y.size();
  const Centered cx = CenterStats(x);
  const Centered cy = CenterStats(y);
  if (!(cx.ss > kDegenerateTol * cx.raw) || cx.raw == 0.0) {
    throw DegenerateFit("x is constant");
  }
  const double sxy = CrossProduct(x, cx.mean, y, cy.mean);
  const double slope = sxy / cx.ss;
  CompensatedSum sse;
  for (std::size_t i = 0; i < n; ++i) {
    const double e = (y[i] - cy.mean) - slope * (x[i] - cx.mean);
    sse.Add(e * e);
  }
  const double sse_v = sse.Value();
  if (!(sse_v > kDegenerateTol * cy.ss)) {
    throw DegenerateFit("residual sum of squares vanishes");
  }
  FitResult r;
  r.df = static_cast<int>(n) - 2;
  const double se = std::sqrt(sse_v / r.df / cx.ss);
  r.t_x = slope / se;
  if (!std::isfinite(r.t_x)) throw DegenerateFit("non-finite t-value");
  r.reject_x = Rejects(r.t_x, r.df, alpha);
  return r;
}

FitResult FitTwo(std::span<const double> y, std::span<const double> x,
                 std::span<const double> z, double alpha) {
  CheckLengths(y.size(), x.size(), 4);
  CheckLengths(y.size(), z.size(), 4);
  const std::size_t n = y.size();
  const Centered cx = CenterStats(x);
  const Centered cz = CenterStats(z);
  const Centered cy = CenterStats(y);
  if (!(cx.ss > kDegenerateTol * cx.raw) || !(cz.ss > kDegenerateTol * cz.raw)) {
    throw DegenerateFit("constant regressor");
  }
  const double sxz = CrossProduct(x, cx.mean, z, cz.mean);
  const double sxy = CrossProduct(x, cx.mean, y, cy.mean);
  const double szy = CrossProduct(z, cz.mean, y, cy.mean);
  // det / (sxx szz) = 1 - corr(x, z)^2
  const double det = cx.ss * cz.ss - sxz * sxz;
  if (!(det > kRankTol * cx.ss * cz.ss)) {
    throw DegenerateFit("regressors are collinear");
  }
  const double bx = (cz.ss * sxy - sxz * szy) / det;
  const double bz = (cx.ss * szy - sxz * sxy) / det;
  CompensatedSum sse;
  for (std::size_t i = 0; i < n; ++i) {
    const double e = (y[i] - cy.mean) - bx * (x[i] - cx.mean) -
                     bz * (z[i] - cz.mean);
    sse.Add(e * e);
  }
  const double sse_v = sse.Value();
  if (!(sse_v > kDegenerateTol * cy.ss)) {
    throw DegenerateFit("residual sum of squares vanishes");
  }
  FitResult r;
  r.df = static_cast<int>(n) - 3;
  const double s2 = sse_v / r.df;
  r.t_x = bx / std::sqrt(s2 * cz.ss / det);
  r.t_z = bz / std::sqrt(s2 * cx.ss / det);
  if (!std::isfinite(r.t_x) || !std::isfinite(*r.t_z)) {
    throw DegenerateFit("non-finite t-value");
  }
  r.reject_x = Rejects(r.t_x, r.df, alpha);
  r.reject_z = Rejects(*r.t_z, r.df, alpha);
  return r;
}

}  // namespace olsconv
