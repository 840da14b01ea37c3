//
// Copyright 2026 The sdshuffle Authors
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
//

#ifndef SDSHUFFLE_ERROR_HPP_
#define SDSHUFFLE_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <vector>

namespace sdshuffle {

// Shape or content of an input dataset is not acceptable.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A tuning parameter or option is outside its admissible range.
class InvalidParameter : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Malformed text input (CSV cells, grid specs). Carries row/column when known.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Non-fatal conditions raised while computing a result (fallbacks taken,
// solver not converged). Callers that care pass one in; others ignore.
struct Diagnostics {
  std::vector<std::string> warnings;

  void warn(std::string message) { warnings.push_back(std::move(message)); }
  bool empty() const { return warnings.empty(); }
};

}  // namespace sdshuffle

#endif  // SDSHUFFLE_ERROR_HPP_
