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

#ifndef OLSCONV_RANDOM_H_
#define OLSCONV_RANDOM_H_

#include <cstdint>
#include <random>

namespace olsconv {

// Deterministic source of variates. The engine is std::mt19937_64, whose
// output sequence is fixed by the standard; every transformation on top of
// it is implemented here so that draws do not depend on the standard
// library's (unspecified) distribution algorithms.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t NextU64() { return engine_(); }

  // Uniform on the open interval (0, 1), 53 random bits.
  double Uniform01() {
    return (static_cast<double>(engine_() >> 11) + 0.5) * 0x1.0p-53;
  }

  // Marsaglia polar method; the second variate of each pair is cached.
  double StandardNormal();

  // -log(U), U uniform on (0,1).
  double StandardExponential();

 private:
  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

// Stateless 64-bit finalizer (splitmix64). Bijective.
constexpr std::uint64_t Mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Seed for the stream of one (cell, outer repeat). Each step is a bijection
// in the argument it absorbs, so changing any single input always changes
// the output.
constexpr std::uint64_t DeriveSeed(std::uint64_t master, std::uint64_t cell_id,
                                   std::uint64_t repeat) {
  constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;
  std::uint64_t s = Mix64(master + kGolden);
  s = Mix64(s ^ cell_id);
  s = Mix64(s + kGolden * (repeat + 1));
  return s;
}

}  // namespace olsconv

#endif  // OLSCONV_RANDOM_H_
