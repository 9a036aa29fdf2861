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

#ifndef OLSCONV_DISTRIBUTIONS_H_
#define OLSCONV_DISTRIBUTIONS_H_

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "olsconv/random.h"

namespace olsconv {

enum class Family { kNormal, kUniform, kLaplace, kBeta, kLogNormal };

// One source distribution. Normal is N(0,1), Uniform is U(0,1), Laplace has
// location 0 and scale 1; these ignore both parameters. Beta uses
// (param1, param2) = (alpha, beta). LogNormal has log-location 0 and
// log-scale param1.
struct DistributionSpec {
  Family family = Family::kNormal;
  double param1 = 0.0;
  double param2 = 0.0;
  std::string label;

  friend bool operator==(const DistributionSpec&,
                         const DistributionSpec&) = default;
};

// Non-excess kurtosis: 3 for the normal.
struct Moments {
  double mean = 0.0;
  double sd = 0.0;
  double skewness = 0.0;
  double kurtosis = 0.0;
};

struct Sample {
  std::vector<double> values;
  DistributionSpec spec;
  bool centered = false;
};

DistributionSpec NormalSpec();
DistributionSpec UniformSpec();
DistributionSpec LaplaceSpec();
DistributionSpec BetaSpec(double alpha, double beta, std::string label);
DistributionSpec LogNormalSpec(double sigma, std::string label);

// The eleven built-in distributions, in the canonical order:
// normal, uniform, laplace, beta_0.1_0.1, beta_5_2, beta_5_1, beta_5_0.5,
// lognormal_0.5, lognormal_1, lognormal_1.5, lognormal_2.
const std::vector<DistributionSpec>& Catalog();

// Throws ParameterDomainError naming the label if it is not in the catalog.
const DistributionSpec& LookupDistribution(std::string_view label);

// Throws ParameterDomainError on invalid parameters.
void ValidateSpec(const DistributionSpec& spec);

Moments TheoreticalMoments(const DistributionSpec& spec);

// Writes out.size() i.i.d. raw (uncentered) draws.
void FillDraws(const DistributionSpec& spec, std::span<double> out,
               RandomStream& stream);

Sample DrawSample(const DistributionSpec& spec, std::size_t n,
                  RandomStream& stream);

// Subtracts the theoretical mean. Throws ContractViolation if the sample is
// already centered.
Sample Center(Sample sample);

// log of a Gamma(shape, 1) variate. Working in log space keeps tiny-shape
// variates (shape 0.1 underflows double routinely) usable for Beta draws.
double DrawLogGamma(double shape, RandomStream& stream);

// Student's t with df degrees of freedom, df > 0.
double DrawStudentT(double df, RandomStream& stream);

}  // namespace olsconv

#endif  // OLSCONV_DISTRIBUTIONS_H_
