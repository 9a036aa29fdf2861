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

#include "olsconv/distributions.h"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <utility>

#include "olsconv/errors.h"

namespace olsconv {

namespace {

// Marsaglia & Tsang (2000), shape >= 1.
double DrawGammaAtLeastOne(double shape, RandomStream& stream) {
  const double d = shape - 1.0 / 3.0;
  const double c = 1.0 / std::sqrt(9.0 * d);
  for (;;) {
    double x, v;
    do {
      x = stream.StandardNormal();
      v = 1.0 + c * x;
    } while (v <= 0.0);
    v = v * v * v;
    const double u = stream.Uniform01();
    if (u < 1.0 - 0.0331 * (x * x) * (x * x)) return d * v;
    if (std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) return d * v;
  }
}

double DrawBeta(double alpha, double beta, RandomStream& stream) {
  const double la = DrawLogGamma(alpha, stream);
  const double lb = DrawLogGamma(beta, stream);
  double v = 1.0 / (1.0 + std::exp(lb - la));
  // The exact variate lies in (0,1); keep it there after rounding.
  constexpr double kBelowOne = 1.0 - 0x1.0p-53;
  if (v >= 1.0) v = kBelowOne;
  if (v <= 0.0) v = std::numeric_limits<double>::min();
  return v;
}

double DrawLaplace(RandomStream& stream) {
  const double e = stream.StandardExponential();
  return (stream.NextU64() >> 63) ? e : -e;
}

}  // namespace

DistributionSpec NormalSpec() { return {Family::kNormal, 0.0, 0.0, "normal"}; }
DistributionSpec UniformSpec() {
  return {Family::kUniform, 0.0, 0.0, "uniform"};
}
DistributionSpec LaplaceSpec() {
  return {Family::kLaplace, 0.0, 0.0, "laplace"};
}
DistributionSpec BetaSpec(double alpha, double beta, std::string label) {
  DistributionSpec s{Family::kBeta, alpha, beta, std::move(label)};
  ValidateSpec(s);
  return s;
}
DistributionSpec LogNormalSpec(double sigma, std::string label) {
  DistributionSpec s{Family::kLogNormal, sigma, 0.0, std::move(label)};
  ValidateSpec(s);
  return s;
}

const std::vector<DistributionSpec>& Catalog() {
  static const std::vector<DistributionSpec> catalog = {
      NormalSpec(),
      UniformSpec(),
      LaplaceSpec(),
      BetaSpec(0.1, 0.1, "beta_0.1_0.1"),
      BetaSpec(5.0, 2.0, "beta_5_2"),
      BetaSpec(5.0, 1.0, "beta_5_1"),
      BetaSpec(5.0, 0.5, "beta_5_0.5"),
      LogNormalSpec(0.5, "lognormal_0.5"),
      LogNormalSpec(1.0, "lognormal_1"),
      LogNormalSpec(1.5, "lognormal_1.5"),
      LogNormalSpec(2.0, "lognormal_2"),
  };
  return catalog;
}

const DistributionSpec& LookupDistribution(std::string_view label) {
  for (const auto& spec : Catalog()) {
    if (spec.label == label) return spec;
  }
  throw ParameterDomainError("unknown distribution label '" +
                             std::string(label) + "'");
}

void ValidateSpec(const DistributionSpec& spec) {
  switch (spec.family) {
    case Family::kNormal:
    case Family::kUniform:
    case Family::kLaplace:
      return;
    case Family::kBeta:
      if (!(std::isfinite(spec.param1) && std::isfinite(spec.param2) &&
            spec.param1 > 0.0 && spec.param2 > 0.0)) {
        throw ParameterDomainError("beta requires alpha > 0 and beta > 0 (" +
                                   spec.label + ")");
      }
      return;
    case Family::kLogNormal:
      if (!(std::isfinite(spec.param1) && spec.param1 > 0.0)) {
        throw ParameterDomainError("lognormal requires sigma > 0 (" +
                                   spec.label + ")");
      }
      return;
  }
  throw ParameterDomainError("unknown distribution family");
}

Moments TheoreticalMoments(const DistributionSpec& spec) {
  ValidateSpec(spec);
  switch (spec.family) {
    case Family::kNormal:
      return {0.0, 1.0, 0.0, 3.0};
    case Family::kUniform:
      return {0.5, std::sqrt(1.0 / 12.0), 0.0, 1.8};
    case Family::kLaplace:
      return {0.0, std::numbers::sqrt2, 0.0, 6.0};
    case Family::kBeta: {
      const double a = spec.param1;
      const double b = spec.param2;
      const double s = a + b;
      const double var = a * b / (s * s * (s + 1.0));
      const double skew =
          2.0 * (b - a) * std::sqrt(s + 1.0) / ((s + 2.0) * std::sqrt(a * b));
      const double excess =
          6.0 * ((a - b) * (a - b) * (s + 1.0) - a * b * (s + 2.0)) /
          (a * b * (s + 2.0) * (s + 3.0));
      return {a / s, std::sqrt(var), skew, 3.0 + excess};
    }
    case Family::kLogNormal: {
      const double s2 = spec.param1 * spec.param1;
      const double w = std::exp(s2);
      const double wm1 = std::expm1(s2);
      return {std::exp(0.5 * s2), std::sqrt(wm1 * w), (w + 2.0) * std::sqrt(wm1),
              std::exp(4.0 * s2) + 2.0 * std::exp(3.0 * s2) +
                  3.0 * std::exp(2.0 * s2) - 3.0};
    }
  }
  throw ParameterDomainError("unknown distribution family");
}

void FillDraws(const DistributionSpec& spec, std::span<double> out,
               RandomStream& stream) {
  switch (spec.family) {
    case Family::kNormal:
      for (double& v : out) v = stream.StandardNormal();
      return;
    case Family::kUniform:
      for (double& v : out) v = stream.Uniform01();
      return;
    case Family::kLaplace:
      for (double& v : out) v = DrawLaplace(stream);
      return;
    case Family::kBeta:
      for (double& v : out) v = DrawBeta(spec.param1, spec.param2, stream);
      return;
    case Family::kLogNormal:
      for (double& v : out) v = std::exp(spec.param1 * stream.StandardNormal());
      return;
  }
}

Sample DrawSample(const DistributionSpec& spec, std::size_t n,
                  RandomStream& stream) {
  ValidateSpec(spec);
  if (n == 0) throw ContractViolation("sample size must be at least 1");
  Sample s{std::vector<double>(n), spec, false};
  FillDraws(spec, s.values, stream);
  return s;
}

Sample Center(Sample sample) {
  if (sample.centered) {
    throw ContractViolation("sample of '" + sample.spec.label +
                            "' is already centered");
  }
  const double mean = TheoreticalMoments(sample.spec).mean;
  for (double& v : sample.values) v -= mean;
  sample.centered = true;
  return sample;
}

double DrawLogGamma(double shape, RandomStream& stream) {
  if (shape >= 1.0) return std::log(DrawGammaAtLeastOne(shape, stream));
  // G(a) = G(a + 1) * U^(1/a)
  const double g = DrawGammaAtLeastOne(shape + 1.0, stream);
  return std::log(g) + std::log(stream.Uniform01()) / shape;
}

double DrawStudentT(double df, RandomStream& stream) {
  const double z = stream.StandardNormal();
  const double chi2 = 2.0 * std::exp(DrawLogGamma(0.5 * df, stream));
  return z / std::sqrt(chi2 / df);
}

}  // namespace olsconv
