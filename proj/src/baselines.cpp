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

#include "sdshuffle/baselines.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include <Eigen/Cholesky>

#include "sdshuffle/csv.hpp"
#include "sdshuffle/shuffle.hpp"
#include "sdshuffle/stats.hpp"

namespace sdshuffle {
namespace {

struct MethodName {
  MaskMethod method;
  std::string_view name;
};

constexpr MethodName kMethodNames[] = {
    {MaskMethod::SjppdsFull, "sjppds-f"},
    {MaskMethod::SjppdsSimplified, "sjppds-s"},
    {MaskMethod::Mdav, "mdav"},
    {MaskMethod::NoiseIndependent, "noise-ind"},
    {MaskMethod::NoiseCorrelated, "noise-corr"},
    {MaskMethod::RankSwap, "rank-swap"},
};

bool is_integral(double x) { return std::isfinite(x) && x == std::floor(x); }

// Column-wise z-scores; constant columns become zero.
Eigen::MatrixXd standardize(const DataMatrix& data) {
  Eigen::MatrixXd z = data.values();
  for (std::size_t j = 0; j < data.cols(); ++j) {
    const double m = stats::mean(data.column(j));
    const double sd = stats::stddev(data.column(j));
    auto col = z.col(static_cast<Eigen::Index>(j));
    col.array() -= m;
    if (sd > 0.0) col.array() /= sd;
  }
  return z;
}

class MdavGrouper {
 public:
  MdavGrouper(const Eigen::MatrixXd& z, std::size_t k) : z_(z), k_(k) {
    remaining_.resize(static_cast<std::size_t>(z.rows()));
    std::iota(remaining_.begin(), remaining_.end(), std::size_t{0});
  }

  std::vector<std::vector<std::size_t>> run() {
    while (remaining_.size() >= 3 * k_) {
      const std::size_t r = farthest_from(centroid());
      const Eigen::VectorXd r_point = z_.row(static_cast<Eigen::Index>(r)).transpose();
      take_group_around(r);
      take_group_around(farthest_from(r_point));
    }
    if (remaining_.size() >= 2 * k_) {
      take_group_around(farthest_from(centroid()));
    }
    if (!remaining_.empty()) {
      groups_.push_back(remaining_);
      remaining_.clear();
    }
    return std::move(groups_);
  }

 private:
  double sq_dist(std::size_t row, const Eigen::VectorXd& point) const {
    return (z_.row(static_cast<Eigen::Index>(row)).transpose() - point).squaredNorm();
  }

  Eigen::VectorXd centroid() const {
    Eigen::VectorXd c = Eigen::VectorXd::Zero(z_.cols());
    for (std::size_t r : remaining_) c += z_.row(static_cast<Eigen::Index>(r)).transpose();
    return c / static_cast<double>(remaining_.size());
  }

  // Ties go to the lowest row index (remaining_ stays sorted).
  std::size_t farthest_from(const Eigen::VectorXd& point) const {
    std::size_t best = remaining_.front();
    double best_d = -1.0;
    for (std::size_t r : remaining_) {
      const double d = sq_dist(r, point);
      if (d > best_d) {
        best_d = d;
        best = r;
      }
    }
    return best;
  }

  // `center` and its k-1 nearest remaining records.
  void take_group_around(std::size_t center) {
    const Eigen::VectorXd point = z_.row(static_cast<Eigen::Index>(center)).transpose();
    std::vector<std::pair<double, std::size_t>> by_distance;
    by_distance.reserve(remaining_.size());
    for (std::size_t r : remaining_) {
      by_distance.emplace_back(r == center ? -1.0 : sq_dist(r, point), r);
    }
    std::partial_sort(by_distance.begin(),
                      by_distance.begin() + static_cast<std::ptrdiff_t>(k_),
                      by_distance.end());
    std::vector<std::size_t> group;
    group.reserve(k_);
    for (std::size_t i = 0; i < k_; ++i) group.push_back(by_distance[i].second);
    std::sort(group.begin(), group.end());
    std::vector<std::size_t> rest;
    rest.reserve(remaining_.size() - k_);
    std::set_difference(remaining_.begin(), remaining_.end(), group.begin(), group.end(),
                        std::back_inserter(rest));
    remaining_ = std::move(rest);
    groups_.push_back(std::move(group));
  }

  const Eigen::MatrixXd& z_;
  std::size_t k_;
  std::vector<std::size_t> remaining_;
  std::vector<std::vector<std::size_t>> groups_;
};

}  // namespace

std::string_view to_string(MaskMethod method) {
  for (const auto& entry : kMethodNames) {
    if (entry.method == method) return entry.name;
  }
  return "unknown";
}

MaskMethod parse_mask_method(std::string_view name) {
  for (const auto& entry : kMethodNames) {
    if (entry.name == name) return entry.method;
  }
  throw InvalidParameter("unknown masking method '" + std::string(name) + "'");
}

bool is_mapping_free(MaskMethod method) {
  return method == MaskMethod::SjppdsFull || method == MaskMethod::SjppdsSimplified;
}

bool is_deterministic(MaskMethod method) { return method == MaskMethod::Mdav; }

void validate(const MaskSpec& spec) {
  const double x = spec.param;
  const std::string shown = format_double(x);
  switch (spec.method) {
    case MaskMethod::SjppdsFull:
    case MaskMethod::SjppdsSimplified:
      if (!is_integral(x) || x < 1 || x > std::numeric_limits<int>::max()) {
        throw InvalidParameter("number of classes must be an integer >= 1, got " + shown);
      }
      break;
    case MaskMethod::Mdav:
      if (!is_integral(x) || x < 2 || x > std::numeric_limits<int>::max()) {
        throw InvalidParameter("aggregation size must be an integer >= 2, got " + shown);
      }
      break;
    case MaskMethod::NoiseIndependent:
    case MaskMethod::NoiseCorrelated:
      if (!std::isfinite(x) || x < 0) {
        throw InvalidParameter("noise percentage must be >= 0, got " + shown);
      }
      break;
    case MaskMethod::RankSwap:
      if (!std::isfinite(x) || x < 0 || x > 100) {
        throw InvalidParameter("swap percentage must be in [0, 100], got " + shown);
      }
      break;
  }
}

std::vector<std::vector<std::size_t>> mdav_partition(const DataMatrix& data, int k) {
  if (k < 2) {
    throw InvalidParameter("aggregation size must be >= 2, got " + std::to_string(k));
  }
  const auto kk = static_cast<std::size_t>(k);
  if (data.rows() < 2 * kk) {
    throw InvalidParameter("MDAV needs at least 2k = " + std::to_string(2 * kk) +
                           " records, got " + std::to_string(data.rows()));
  }
  const Eigen::MatrixXd z = standardize(data);
  return MdavGrouper(z, kk).run();
}

DataMatrix mdav_microaggregate(const DataMatrix& data, int k) {
  const auto groups = mdav_partition(data, k);
  Eigen::MatrixXd out(data.values().rows(), data.values().cols());
  for (const auto& group : groups) {
    for (Eigen::Index j = 0; j < out.cols(); ++j) {
      double sum = 0.0;
      for (std::size_t r : group) sum += data.values()(static_cast<Eigen::Index>(r), j);
      const double m = sum / static_cast<double>(group.size());
      for (std::size_t r : group) out(static_cast<Eigen::Index>(r), j) = m;
    }
  }
  return data.with_values(std::move(out));
}

DataMatrix add_noise(const DataMatrix& data, double q, bool correlated, Seed seed,
                     Diagnostics* diagnostics) {
  if (!std::isfinite(q) || q < 0) {
    throw InvalidParameter("noise percentage must be >= 0");
  }
  if (q == 0.0) return data;
  const double fraction = q / 100.0;
  Eigen::MatrixXd out = data.values();
  const Eigen::Index n = out.rows();
  const Eigen::Index p = out.cols();

  if (!correlated) {
    for (Eigen::Index j = 0; j < p; ++j) {
      Rng rng = Rng::stream(seed, {static_cast<std::uint64_t>(j)});
      const double sd =
          std::sqrt(fraction * stats::variance(data.column(static_cast<std::size_t>(j))));
      for (Eigen::Index i = 0; i < n; ++i) out(i, j) += sd * rng.normal();
    }
    return data.with_values(std::move(out));
  }

  Eigen::MatrixXd sigma = fraction * stats::covariance(data.values());
  Eigen::LLT<Eigen::MatrixXd> llt(sigma);
  if (llt.info() != Eigen::Success) {
    const double eps = 1e-10 * sigma.trace() / static_cast<double>(p);
    if (diagnostics) {
      diagnostics->warn("sample covariance is not positive definite; added " +
                        format_double(eps) + " to the diagonal");
    }
    sigma.diagonal().array() += eps;
    llt.compute(sigma);
    if (llt.info() != Eigen::Success) {
      if (diagnostics) diagnostics->warn("covariance still singular; no noise added");
      return data;
    }
  }
  const Eigen::MatrixXd lower = llt.matrixL();
  Rng rng = Rng::stream(seed, {0});
  Eigen::VectorXd z(p);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < p; ++j) z(j) = rng.normal();
    out.row(i) += (lower * z).transpose();
  }
  return data.with_values(std::move(out));
}

DataMatrix rank_swap(const DataMatrix& data, double s, Seed seed,
                     std::vector<SwapRecord>* log) {
  if (!std::isfinite(s) || s < 0 || s > 100) {
    throw InvalidParameter("swap percentage must be in [0, 100]");
  }
  const std::size_t n = data.rows();
  const auto window = static_cast<std::size_t>(std::floor(s * static_cast<double>(n) / 100.0));
  Eigen::MatrixXd out = data.values();
  if (window == 0) return data;

  std::vector<std::size_t> by_rank(n);
  std::vector<char> swapped(n);
  std::vector<std::size_t> candidates;
  for (std::size_t j = 0; j < data.cols(); ++j) {
    Rng rng = Rng::stream(seed, {j});
    const auto ranks = rank_column(data.column(j), rng);
    for (std::size_t i = 0; i < n; ++i) by_rank[static_cast<std::size_t>(ranks[i] - 1)] = i;
    std::fill(swapped.begin(), swapped.end(), 0);
    auto col = out.col(static_cast<Eigen::Index>(j));
    for (std::size_t a = 0; a < n; ++a) {
      if (swapped[a]) continue;
      candidates.clear();
      const std::size_t last = std::min(n - 1, a + window);
      for (std::size_t b = a + 1; b <= last; ++b) {
        if (!swapped[b]) candidates.push_back(b);
      }
      if (candidates.empty()) continue;
      const std::size_t b = candidates[rng.below(candidates.size())];
      swapped[a] = swapped[b] = 1;
      std::swap(col(static_cast<Eigen::Index>(by_rank[a])),
                col(static_cast<Eigen::Index>(by_rank[b])));
      if (log) {
        log->push_back({j, static_cast<std::int64_t>(a + 1), static_cast<std::int64_t>(b + 1)});
      }
    }
  }
  return data.with_values(std::move(out));
}

DataMatrix apply_mask(const DataMatrix& data, const MaskSpec& spec,
                      Diagnostics* diagnostics) {
  validate(spec);
  switch (spec.method) {
    case MaskMethod::SjppdsFull:
      return sjppds(data, static_cast<int>(spec.param), ShuffleVariant::Full, spec.seed);
    case MaskMethod::SjppdsSimplified:
      return sjppds(data, static_cast<int>(spec.param), ShuffleVariant::Simplified,
                    spec.seed);
    case MaskMethod::Mdav:
      return mdav_microaggregate(data, static_cast<int>(spec.param));
    case MaskMethod::NoiseIndependent:
      return add_noise(data, spec.param, false, spec.seed, diagnostics);
    case MaskMethod::NoiseCorrelated:
      return add_noise(data, spec.param, true, spec.seed, diagnostics);
    case MaskMethod::RankSwap:
      return rank_swap(data, spec.param, spec.seed);
  }
  throw InvalidParameter("unhandled masking method");
}

}  // namespace sdshuffle
