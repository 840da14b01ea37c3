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

// Disclosure-risk and information-loss metrics for an (original, masked)
// pair of datasets.
//
// Risk: DBRL (distance-based record linkage), RID (rank interval
// disclosure) and SDID (standard-deviation interval disclosure).
// Loss: PS (propensity-score distinguishability, reported x4), PIL
// (probabilistic information loss), MAE/MSE and their bounded rank-based
// versions brMAE/brMSE.
//
// DBRL, RID, SDID and the distance metrics assume row i of `masked` is the
// masked version of row i of `original`. For maskers without such a mapping
// use averaged_sorted().

#ifndef SDSHUFFLE_METRICS_HPP_
#define SDSHUFFLE_METRICS_HPP_

#include <optional>
#include <string_view>

#include "sdshuffle/core.hpp"
#include "sdshuffle/error.hpp"

namespace sdshuffle {

struct MetricBundle {
  double dbrl = 0.0;
  double rid = 0.0;
  double sdid = 0.0;
  double ps_scaled = 0.0;
  double pil = 0.0;
  double mae = 0.0;
  double mse = 0.0;
  double brmae = 0.0;
  double brmse = 0.0;
};

// Metrics that accept the sorted-averaging wrapper.
enum class MetricId { Dbrl, Rid, Sdid, Mae, Mse, Brmae, Brmse };

std::string_view to_string(MetricId id);
MetricId parse_metric_id(std::string_view name);

// Fraction of masked records whose nearest original record (Euclidean, after
// z-scoring with the original's column means and standard deviations) is
// their own. A tie at the minimum distance counts as linked.
double dbrl(const DataMatrix& original, const DataMatrix& masked);

// Interval disclosure at one width, `percent` in 1..100. A record is
// disclosed when, for every column, its original value lies within the
// interval centred on its masked value.
double rid_at_width(const DataMatrix& original, const DataMatrix& masked, int percent);
double sdid_at_width(const DataMatrix& original, const DataMatrix& masked, int percent);

// Averages over widths 1%, 2%, ..., 10%.
double rid(const DataMatrix& original, const DataMatrix& masked);
double sdid(const DataMatrix& original, const DataMatrix& masked);

struct PropensityFit {
  double ps = 0.0;         // (1/2n) * sum (p_i - 1/2)^2, in [0, 0.25]
  double ps_scaled = 0.0;  // 4 * ps
  int iterations = 0;
  bool converged = false;
};

// Logistic model on the stacked data (original = 0, masked = 1) with all
// variables, their squares and pairwise products as features.
PropensityFit propensity_fit(const DataMatrix& original, const DataMatrix& masked,
                             Diagnostics* diagnostics = nullptr);
double propensity_score_il(const DataMatrix& original, const DataMatrix& masked,
                           Diagnostics* diagnostics = nullptr);

// 2 * (Phi(|z|) - 1/2): the loss attributed to one standardized discrepancy.
double pil_term(double z);

struct PilBreakdown {
  double means = 0.0;
  double variances = 0.0;
  std::optional<double> covariances;   // absent when p = 1
  std::optional<double> correlations;  // absent when p = 1
  double deciles = 0.0;
  double overall = 0.0;
};

PilBreakdown pil_breakdown(const DataMatrix& original, const DataMatrix& masked,
                           Diagnostics* diagnostics = nullptr);
double pil(const DataMatrix& original, const DataMatrix& masked,
           Diagnostics* diagnostics = nullptr);

struct DistanceErrors {
  double mae = 0.0;
  double mse = 0.0;
};

DistanceErrors mae_mse(const DataMatrix& original, const DataMatrix& masked);

struct RankErrors {
  double brmae = 0.0;
  double brmse = 0.0;
};

RankErrors brmae_brmse(const RankMatrix& original_ranks, const RankMatrix& masked_ranks);

// Ranks both datasets (ties broken from `seed`) and compares the ranks.
RankErrors brmae_brmse(const DataMatrix& original, const DataMatrix& masked, Seed seed);

// For each column j: sort both datasets by their own column j, evaluate the
// metric on the sorted pair, then average over j.
double averaged_sorted(MetricId metric, const DataMatrix& original, const DataMatrix& masked,
                       Seed seed = {});

struct EvaluationOptions {
  // Use averaged_sorted() for DBRL, RID, SDID, MAE, MSE, brMAE and brMSE.
  bool sorted = false;
  Seed seed{};  // tie-breaking for the rank-based metrics
};

MetricBundle evaluate_metrics(const DataMatrix& original, const DataMatrix& masked,
                              const EvaluationOptions& options,
                              Diagnostics* diagnostics = nullptr);

}  // namespace sdshuffle

#endif  // SDSHUFFLE_METRICS_HPP_
