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

#include "sdshuffle/scoring.hpp"

#include <cmath>
#include <string>
#include <tuple>

#include "sdshuffle/csv.hpp"
#include "sdshuffle/parallel.hpp"
#include "sdshuffle/stats.hpp"

namespace sdshuffle {
namespace {

void require_unit(double value, const char* name) {
  if (!(value >= 0.0 && value <= 1.0)) {
    throw InvalidInput(std::string(name) + " must be in [0, 1], got " + format_double(value));
  }
}

std::vector<double> arithmetic(double start, double step, double end) {
  std::vector<double> out;
  for (double v = start; v <= end; v += step) out.push_back(v);
  return out;
}

MetricBundle median_bundle(const std::vector<MetricBundle>& runs) {
  const auto med = [&](double MetricBundle::*field) {
    std::vector<double> values;
    values.reserve(runs.size());
    for (const auto& r : runs) values.push_back(r.*field);
    return stats::median(std::move(values));
  };
  MetricBundle out;
  out.dbrl = med(&MetricBundle::dbrl);
  out.rid = med(&MetricBundle::rid);
  out.sdid = med(&MetricBundle::sdid);
  out.ps_scaled = med(&MetricBundle::ps_scaled);
  out.pil = med(&MetricBundle::pil);
  out.mae = med(&MetricBundle::mae);
  out.mse = med(&MetricBundle::mse);
  out.brmae = med(&MetricBundle::brmae);
  out.brmse = med(&MetricBundle::brmse);
  return out;
}

}  // namespace

ScoreBundle compute_scores(const MetricBundle& m) {
  require_unit(m.dbrl, "dbrl");
  require_unit(m.rid, "rid");
  require_unit(m.sdid, "sdid");
  require_unit(m.ps_scaled, "ps");
  require_unit(m.pil, "pil");
  require_unit(m.brmae, "brmae");
  require_unit(m.brmse, "brmse");
  ScoreBundle s;
  s.avg_il = m.ps_scaled / 3.0 + m.pil / 3.0 + m.brmae / 6.0 + m.brmse / 6.0;
  s.avg_dr = m.dbrl / 3.0 + m.rid / 3.0 + m.sdid / 3.0;
  s.overall = (s.avg_il + s.avg_dr) / 2.0;
  return s;
}

std::vector<double> default_grid(MaskMethod method) {
  switch (method) {
    case MaskMethod::SjppdsFull:
    case MaskMethod::SjppdsSimplified: return arithmetic(10, 10, 300);
    case MaskMethod::Mdav: return arithmetic(2, 1, 31);
    case MaskMethod::NoiseIndependent:
    case MaskMethod::NoiseCorrelated: return arithmetic(1, 4, 117);
    case MaskMethod::RankSwap: return arithmetic(2, 2, 60);
  }
  throw InvalidParameter("unknown masking method");
}

MetricBundle evaluate_masked(const DataMatrix& original, const DataMatrix& masked,
                             MaskMethod method, Seed seed, Diagnostics* diagnostics) {
  EvaluationOptions options;
  options.sorted = is_mapping_free(method);
  options.seed = seed;
  return evaluate_metrics(original, masked, options, diagnostics);
}

Seed replication_seed(Seed seed, std::size_t index, int rep) {
  return derive_seed(seed, {static_cast<std::uint64_t>(index), static_cast<std::uint64_t>(rep)});
}

std::optional<std::size_t> select_feasible(const std::vector<TuningPoint>& grid,
                                           double threshold) {
  std::optional<std::size_t> best;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const auto& pt = grid[i];
    if (!(pt.median.dbrl < threshold)) continue;
    if (!best) {
      best = i;
      continue;
    }
    const auto& cur = grid[*best];
    if (std::tie(pt.scores.overall, pt.scores.avg_dr, pt.param) <
        std::tie(cur.scores.overall, cur.scores.avg_dr, cur.param)) {
      best = i;
    }
  }
  return best;
}

TuningResult select_best_parameter(const DataMatrix& original, MaskMethod method,
                                   const std::vector<double>& grid,
                                   const TuningOptions& options, Diagnostics* diagnostics) {
  if (grid.empty()) throw InvalidParameter("tuning grid is empty");
  if (options.replications < 1) throw InvalidParameter("replications must be >= 1");
  if (!(options.threshold > 0.0 && options.threshold <= 1.0)) {
    throw InvalidParameter("DBRL threshold must be in (0, 1]");
  }
  for (double param : grid) validate(MaskSpec{method, param, options.seed});

  const int reps = is_deterministic(method) ? 1 : options.replications;
  const std::size_t jobs = grid.size() * static_cast<std::size_t>(reps);
  std::vector<MetricBundle> runs(jobs);
  std::vector<Diagnostics> notes(jobs);
  parallel_for(jobs, options.workers, [&](std::size_t job) {
    const std::size_t index = job / static_cast<std::size_t>(reps);
    const int rep = static_cast<int>(job % static_cast<std::size_t>(reps));
    const Seed seed = replication_seed(options.seed, index, rep);
    const MaskSpec spec{method, grid[index], seed};
    const DataMatrix masked = apply_mask(original, spec, &notes[job]);
    runs[job] = evaluate_masked(original, masked, method, derive_seed(seed, {1}), &notes[job]);
  });

  TuningResult result;
  result.method = method;
  result.threshold = options.threshold;
  for (std::size_t index = 0; index < grid.size(); ++index) {
    const auto first = runs.begin() + static_cast<std::ptrdiff_t>(index * reps);
    TuningPoint pt;
    pt.param = grid[index];
    pt.replications = reps;
    pt.runs.assign(first, first + reps);
    pt.median = median_bundle(pt.runs);
    pt.scores = compute_scores(pt.median);
    pt.feasible = pt.median.dbrl < options.threshold;
    result.grid.push_back(pt);
  }
  result.selected = select_feasible(result.grid, options.threshold);
  if (diagnostics) {
    for (std::size_t job = 0; job < jobs; ++job) {
      for (auto& w : notes[job].warnings) {
        diagnostics->warn("param " + format_double(grid[job / reps]) + ": " + w);
      }
    }
  }
  return result;
}

}  // namespace sdshuffle
