// Copyright 2026 The subuniform Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SUBUNIFORM_ERRORS_H_
#define SUBUNIFORM_ERRORS_H_

#include <stdexcept>
#include <string>

namespace subuniform {

// Malformed or incompatible input: mixed ambient spaces, bad digits,
// unparseable rationals, ambient caps exceeded.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An exhaustive computation would exceed its work budget.
class BudgetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace subuniform

#endif  // SUBUNIFORM_ERRORS_H_
