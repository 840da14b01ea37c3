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

// Scaling benchmark: CPU time of each masker over sweeps of n, p and n_c,
// with log-log slopes fitted per round.
//
// Rounds are interleaved (each round visits every sweep point once), so slow
// drift of the machine affects all points of a round alike. The reported
// slope is the median of the per-round least-squares slopes.

#ifndef SDSHUFFLE_TOOLS_BENCH_HPP_
#define SDSHUFFLE_TOOLS_BENCH_HPP_

#include <iosfwd>
#include <string>
#include <vector>

#include "sdshuffle/baselines.hpp"

namespace sdshuffle::cli {

enum class SweepAxis { Rows, Columns, Classes };

std::string_view to_string(SweepAxis axis);

struct BenchOptions {
  std::vector<MaskMethod> methods{MaskMethod::SjppdsSimplified, MaskMethod::SjppdsFull};
  std::vector<SweepAxis> axes{SweepAxis::Rows, SweepAxis::Columns, SweepAxis::Classes};
  std::vector<double> n_values;   // default 10,000..100,000 step 10,000
  std::vector<double> p_values;   // default 5..50 step 5
  std::vector<double> nc_values;  // default 100..1,000 step 100
  std::size_t base_n = 10000;
  std::size_t base_p = 10;
  int base_nc = 100;
  int rounds = 5;
  double min_seconds = 0.05;  // each measurement repeats the call at least this long
  Seed seed{};
};

// Fills empty sweeps with their defaults.
BenchOptions with_default_sweeps(BenchOptions options);

struct BenchPoint {
  MaskMethod method;
  SweepAxis axis;
  std::size_t n;
  std::size_t p;
  int n_c;                       // 0 for maskers without classes
  std::vector<double> seconds;   // one per round
  double median_seconds = 0.0;
};

struct BenchSlope {
  MaskMethod method;
  SweepAxis axis;
  std::vector<double> round_slopes;
  double slope = 0.0;  // median of round_slopes
};

struct BenchResult {
  std::vector<BenchPoint> points;
  std::vector<BenchSlope> slopes;
};

// Progress lines go to `log` when non-null.
BenchResult run_bench(const BenchOptions& options, std::ostream* log = nullptr);

// Least-squares slope of log(y) against log(x).
double log_log_slope(const std::vector<double>& x, const std::vector<double>& y);

// CPU seconds consumed by this process.
double process_cpu_seconds();

}  // namespace sdshuffle::cli

#endif  // SDSHUFFLE_TOOLS_BENCH_HPP_
