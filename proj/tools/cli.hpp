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

// Command-line front end: mask, evaluate, tune, simulate and bench.
//
// Options may also come from a flat key = value file given with --config;
// keys are the long flag names without dashes. A flag on the command line
// wins over the same key in the file. The seed is taken from --seed, then
// the config file, then SDSHUFFLE_SEED, and is drawn at random only when
// none is set. The seed in use is always printed and recorded.

#ifndef SDSHUFFLE_TOOLS_CLI_HPP_
#define SDSHUFFLE_TOOLS_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace sdshuffle::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitInternal = 1,
  kExitParse = 2,       // bad command line, config file or CSV content
  kExitValidation = 3,  // well-formed but inadmissible input or parameter
  kExitInfeasible = 4,  // no tuning grid point met the DBRL threshold
  kExitIo = 5,
};

// `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// "start:step:end" (inclusive), or a single number.
std::vector<double> parse_grid(const std::string& text);

}  // namespace sdshuffle::cli

#endif  // SDSHUFFLE_TOOLS_CLI_HPP_
