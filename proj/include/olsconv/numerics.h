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

#ifndef OLSCONV_NUMERICS_H_
#define OLSCONV_NUMERICS_H_

#include <cmath>
#include <span>

namespace olsconv {

// Neumaier's variant of Kahan summation. Unlike plain Kahan it stays exact
// when an added term is larger in magnitude than the running sum, which is
// the common case for heavy-tailed draws.
class CompensatedSum {
 public:
  void Add(double v) {
    const double t = sum_ + v;
    if (std::fabs(sum_) >= std::fabs(v)) {
      comp_ += (sum_ - t) + v;
    } else {
      comp_ += (v - t) + sum_;
    }
    sum_ = t;
  }
  double Value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

inline double CompensatedMean(std::span<const double> v) {
  CompensatedSum s;
  for (double x : v) s.Add(x);
  return s.Value() / static_cast<double>(v.size());
}

}  // namespace olsconv

#endif  // OLSCONV_NUMERICS_H_
