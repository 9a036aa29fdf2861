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

#ifndef OLSCONV_ERRORS_H_
#define OLSCONV_ERRORS_H_

#include <stdexcept>
#include <string>

namespace olsconv {

// Invalid distribution parameters or an unknown catalog label.
class ParameterDomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A caller broke a documented precondition (length mismatch, unsorted input,
// double centering, ...).
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// The OLS design is (numerically) singular or the fit is exact.
class DegenerateFit : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A grid cell could not be completed; the message carries the cell context.
class CellError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace olsconv

#endif  // OLSCONV_ERRORS_H_
