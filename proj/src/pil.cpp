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

// Probabilistic information loss over means, variances, covariances,
// correlations and deciles. Each statistic's discrepancy is standardized by
// a normal-theory standard error computed on the masked data.

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "sdshuffle/metrics.hpp"
#include "sdshuffle/stats.hpp"

namespace sdshuffle {
namespace {

constexpr double kDecileStep = 0.1;
constexpr int kDeciles = 9;

// Running mean of PIL terms for one family of statistics.
class Family {
 public:
  void add(double estimate, double masked_estimate, double variance) {
    const double delta = masked_estimate - estimate;
    if (!(variance > 0.0) || !std::isfinite(variance)) {
      ++degenerate_;
      total_ += delta != 0.0 ? 1.0 : 0.0;
    } else {
      total_ += pil_term(delta / std::sqrt(variance));
    }
    ++count_;
  }
  bool empty() const { return count_ == 0; }
  double value() const { return count_ == 0 ? 0.0 : total_ / static_cast<double>(count_); }
  int degenerate() const { return degenerate_; }

 private:
  double total_ = 0.0;
  int count_ = 0;
  int degenerate_ = 0;
};

// Gaussian kernel density estimate at x with Silverman's rule-of-thumb
// bandwidth 0.9 * min(sd, IQR/1.34) * n^(-1/5). Zero when the bandwidth is.
double kernel_density(std::span<const double> sorted, double sd, double x) {
  const auto n = static_cast<double>(sorted.size());
  const double iqr = stats::quantile_sorted(sorted, 0.75) - stats::quantile_sorted(sorted, 0.25);
  double spread = sd;
  if (iqr > 0.0) spread = std::min(sd, iqr / 1.34);
  const double bandwidth = 0.9 * spread * std::pow(n, -0.2);
  if (!(bandwidth > 0.0)) return 0.0;
  double sum = 0.0;
  for (double v : sorted) {
    const double u = (x - v) / bandwidth;
    sum += std::exp(-0.5 * u * u);
  }
  return sum / (n * bandwidth * std::sqrt(2.0 * std::numbers::pi));
}

double fisher_z(double r) {
  constexpr double kLimit = 1.0 - 1e-15;
  return std::atanh(std::clamp(r, -kLimit, kLimit));
}

}  // namespace

double pil_term(double z) { return std::erf(std::abs(z) / std::numbers::sqrt2); }

PilBreakdown pil_breakdown(const DataMatrix& original, const DataMatrix& masked,
                           Diagnostics* diagnostics) {
  require_same_shape(original, masked);
  const std::size_t p = original.cols();
  const auto n = static_cast<double>(original.rows());

  Family means, variances, covariances, correlations, deciles;
  const Eigen::MatrixXd cov = stats::covariance(original.values());
  const Eigen::MatrixXd cov_m = stats::covariance(masked.values());
  for (std::size_t j = 0; j < p; ++j) {
    const auto jj = static_cast<Eigen::Index>(j);
    const double s2 = cov_m(jj, jj);
    means.add(stats::mean(original.column(j)), stats::mean(masked.column(j)), s2 / n);
    variances.add(cov(jj, jj), s2, 2.0 * s2 * s2 / (n - 1.0));
  }
  for (std::size_t a = 0; a < p; ++a) {
    for (std::size_t b = a + 1; b < p; ++b) {
      const auto ia = static_cast<Eigen::Index>(a);
      const auto ib = static_cast<Eigen::Index>(b);
      const double s_ab = cov_m(ia, ib);
      covariances.add(cov(ia, ib), s_ab,
                      (cov_m(ia, ia) * cov_m(ib, ib) + s_ab * s_ab) / n);
      correlations.add(fisher_z(stats::correlation(original.column(a), original.column(b))),
                       fisher_z(stats::correlation(masked.column(a), masked.column(b))),
                       n > 3.0 ? 1.0 / (n - 3.0) : 0.0);
    }
  }
  for (std::size_t j = 0; j < p; ++j) {
    std::vector<double> xo(original.column(j).begin(), original.column(j).end());
    std::vector<double> xm(masked.column(j).begin(), masked.column(j).end());
    std::sort(xo.begin(), xo.end());
    std::sort(xm.begin(), xm.end());
    const double sd = stats::stddev(masked.column(j));
    for (int d = 1; d <= kDeciles; ++d) {
      const double w = kDecileStep * d;
      const double q = stats::quantile_sorted(xo, w);
      const double q_m = stats::quantile_sorted(xm, w);
      const double f = kernel_density(xm, sd, q_m);
      deciles.add(q, q_m, f > 0.0 ? w * (1.0 - w) / (n * f * f) : 0.0);
    }
  }

  PilBreakdown out;
  out.means = means.value();
  out.variances = variances.value();
  out.deciles = deciles.value();
  double sum = out.means + out.variances + out.deciles;
  int families = 3;
  if (!covariances.empty()) {
    out.covariances = covariances.value();
    out.correlations = correlations.value();
    sum += *out.covariances + *out.correlations;
    families += 2;
  }
  out.overall = sum / families;

  const int degenerate = means.degenerate() + variances.degenerate() +
                         covariances.degenerate() + correlations.degenerate() +
                         deciles.degenerate();
  if (degenerate > 0 && diagnostics) {
    diagnostics->warn("PIL: " + std::to_string(degenerate) +
                      " statistic(s) had zero estimated variance; scored 1 if changed, else 0");
  }
  return out;
}

double pil(const DataMatrix& original, const DataMatrix& masked, Diagnostics* diagnostics) {
  return pil_breakdown(original, masked, diagnostics).overall;
}

}  // namespace sdshuffle
