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

#include "bench.hpp"

#include <ctime>
#include <cmath>
#include <ostream>

#include "sdshuffle/csv.hpp"
#include "sdshuffle/simulate.hpp"
#include "sdshuffle/stats.hpp"

namespace sdshuffle::cli {
namespace {

// Parameters for maskers that have no class count.
double fixed_param(MaskMethod method) {
  switch (method) {
    case MaskMethod::Mdav: return 3;
    case MaskMethod::NoiseIndependent:
    case MaskMethod::NoiseCorrelated: return 10;
    case MaskMethod::RankSwap: return 10;
    default: return 0;
  }
}

bool has_classes(MaskMethod method) { return is_mapping_free(method); }

std::vector<double> steps(double start, double step, double end) {
  std::vector<double> out;
  for (double v = start; v <= end; v += step) out.push_back(v);
  return out;
}

double measure(const DataMatrix& data, const MaskSpec& spec, double min_seconds) {
  int calls = 0;
  const double start = process_cpu_seconds();
  double elapsed = 0.0;
  do {
    const DataMatrix masked = apply_mask(data, spec);
    ++calls;
    elapsed = process_cpu_seconds() - start;
  } while (elapsed < min_seconds);
  return elapsed / calls;
}

}  // namespace

std::string_view to_string(SweepAxis axis) {
  switch (axis) {
    case SweepAxis::Rows: return "n";
    case SweepAxis::Columns: return "p";
    case SweepAxis::Classes: return "n_c";
  }
  return "unknown";
}

double process_cpu_seconds() {
  timespec ts{};
  clock_gettime(CLOCK_PROCESS_CPUTIME_ID, &ts);
  return static_cast<double>(ts.tv_sec) + 1e-9 * static_cast<double>(ts.tv_nsec);
}

double log_log_slope(const std::vector<double>& x, const std::vector<double>& y) {
  const auto k = static_cast<double>(x.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double lx = std::log(x[i]);
    const double ly = std::log(y[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  return (k * sxy - sx * sy) / (k * sxx - sx * sx);
}

BenchOptions with_default_sweeps(BenchOptions options) {
  if (options.n_values.empty()) options.n_values = steps(10000, 10000, 100000);
  if (options.p_values.empty()) options.p_values = steps(5, 5, 50);
  if (options.nc_values.empty()) options.nc_values = steps(100, 100, 1000);
  return options;
}

BenchResult run_bench(const BenchOptions& raw, std::ostream* log) {
  const BenchOptions options = with_default_sweeps(raw);
  if (options.rounds < 1) throw InvalidParameter("bench needs at least one round");
  BenchResult result;
  for (MaskMethod method : options.methods) {
    for (SweepAxis axis : options.axes) {
      if (axis == SweepAxis::Classes && !has_classes(method)) continue;
      const auto& values = axis == SweepAxis::Rows      ? options.n_values
                           : axis == SweepAxis::Columns ? options.p_values
                                                        : options.nc_values;
      // Inputs are generated once, outside the timed region.
      std::vector<BenchPoint> points;
      std::vector<DataMatrix> inputs;
      for (double v : values) {
        BenchPoint pt{method, axis, options.base_n, options.base_p, options.base_nc, {}, 0.0};
        if (axis == SweepAxis::Rows) pt.n = static_cast<std::size_t>(v);
        if (axis == SweepAxis::Columns) pt.p = static_cast<std::size_t>(v);
        if (axis == SweepAxis::Classes) pt.n_c = static_cast<int>(v);
        if (!has_classes(method)) pt.n_c = 0;
        inputs.push_back(simulate_benchmark(pt.n, pt.p, derive_seed(options.seed, {pt.n, pt.p})));
        points.push_back(pt);
      }
      BenchSlope slope{method, axis, {}, 0.0};
      for (int round = 0; round < options.rounds; ++round) {
        std::vector<double> xs, ys;
        for (std::size_t i = 0; i < points.size(); ++i) {
          auto& pt = points[i];
          const double param = has_classes(method) ? pt.n_c : fixed_param(method);
          const MaskSpec spec{method, param,
                              derive_seed(options.seed, {static_cast<std::uint64_t>(round), i})};
          const double t = measure(inputs[i], spec, options.min_seconds);
          pt.seconds.push_back(t);
          xs.push_back(values[i]);
          ys.push_back(t);
        }
        slope.round_slopes.push_back(xs.size() >= 2 ? log_log_slope(xs, ys) : 0.0);
        if (log) {
          *log << to_string(method) << " " << to_string(axis) << " round " << round + 1 << "/"
               << options.rounds << ": slope " << format_double(slope.round_slopes.back())
               << "\n";
        }
      }
      for (auto& pt : points) {
        pt.median_seconds = stats::median(pt.seconds);
        result.points.push_back(pt);
      }
      slope.slope = stats::median(slope.round_slopes);
      result.slopes.push_back(std::move(slope));
    }
  }
  return result;
}

}  // namespace sdshuffle::cli
