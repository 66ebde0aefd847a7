// Copyright 2026 The dpcomp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef DPCOMP_ERRORS_HPP_
#define DPCOMP_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace dpcomp {

// Raised when an input violates a documented precondition. The message names
// the check that failed, including the offending values where helpful.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace dpcomp

#endif  // DPCOMP_ERRORS_HPP_
