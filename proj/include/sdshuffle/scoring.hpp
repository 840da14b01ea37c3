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

// Composite scores and threshold-constrained parameter tuning.
//
//   avg_il  = PS/3 + PIL/3 + brMAE/6 + brMSE/6
//   avg_dr  = DBRL/3 + RID/3 + SDID/3
//   overall = (avg_il + avg_dr) / 2
//
// MAE and MSE are unbounded and stay out of every score.

#ifndef SDSHUFFLE_SCORING_HPP_
#define SDSHUFFLE_SCORING_HPP_

#include <optional>
#include <vector>

#include "sdshuffle/baselines.hpp"
#include "sdshuffle/metrics.hpp"

namespace sdshuffle {

struct ScoreBundle {
  double avg_il = 0.0;
  double avg_dr = 0.0;
  double overall = 0.0;
};

// Throws InvalidInput if a bounded metric is outside [0, 1].
ScoreBundle compute_scores(const MetricBundle& m);

inline constexpr double kDefaultDbrlThreshold = 0.2;

// Default tuning grids per method family.
std::vector<double> default_grid(MaskMethod method);

struct TuningPoint {
  double param = 0.0;
  int replications = 0;
  std::vector<MetricBundle> runs;  // one per replication, in order
  MetricBundle median;  // per-metric median over replications
  ScoreBundle scores;   // scores of the medians
  bool feasible = false;
};

struct TuningResult {
  MaskMethod method = MaskMethod::SjppdsSimplified;
  double threshold = kDefaultDbrlThreshold;
  std::vector<TuningPoint> grid;
  std::optional<std::size_t> selected;  // index into grid; empty if infeasible
  bool infeasible() const { return !selected.has_value(); }
};

struct TuningOptions {
  double threshold = kDefaultDbrlThreshold;
  int replications = 1;  // forced to 1 for deterministic maskers
  Seed seed{};
  unsigned workers = 1;  // 0: one per hardware thread
};

// Metrics of one masked replicate. Mapping-free maskers get the sorted form
// of their row-correspondence metrics.
MetricBundle evaluate_masked(const DataMatrix& original, const DataMatrix& masked,
                             MaskMethod method, Seed seed, Diagnostics* diagnostics = nullptr);

// Seed for replication `rep` of grid point `index`.
Seed replication_seed(Seed seed, std::size_t index, int rep);

// Runs every (grid point, replication), takes per-metric medians and selects
// the feasible point (median DBRL < threshold) with the lowest overall score.
// Ties go to the lower avg_dr, then to the smaller parameter.
TuningResult select_best_parameter(const DataMatrix& original, MaskMethod method,
                                   const std::vector<double>& grid,
                                   const TuningOptions& options,
                                   Diagnostics* diagnostics = nullptr);

// Selection step alone, over points whose medians are already known.
std::optional<std::size_t> select_feasible(const std::vector<TuningPoint>& grid,
                                           double threshold);

}  // namespace sdshuffle

#endif  // SDSHUFFLE_SCORING_HPP_
