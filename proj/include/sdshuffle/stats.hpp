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

#ifndef SDSHUFFLE_STATS_HPP_
#define SDSHUFFLE_STATS_HPP_

#include <span>
#include <vector>

#include <Eigen/Core>

namespace sdshuffle::stats {

double mean(std::span<const double> x);

// Unbiased (n-1) variance; 0 for fewer than two values.
double variance(std::span<const double> x);
double stddev(std::span<const double> x);

// Unbiased sample covariance of the columns.
Eigen::MatrixXd covariance(const Eigen::MatrixXd& x);

// Linear-interpolation sample quantile (Hyndman-Fan type 7) of sorted data.
double quantile_sorted(std::span<const double> sorted, double prob);

// Middle value, or the average of the two middle values.
double median(std::vector<double> x);

// Standard normal CDF, double-precision accurate in both tails.
double normal_cdf(double z);

// Pearson correlation of two equal-length samples.
double correlation(std::span<const double> x, std::span<const double> y);

}  // namespace sdshuffle::stats

#endif  // SDSHUFFLE_STATS_HPP_
