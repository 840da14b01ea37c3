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

// Propensity-score information loss: logistic regression of "is masked" on a
// full quadratic expansion of the stacked data, fitted by damped IRLS.

#include <cmath>
#include <string>

#include <Eigen/Cholesky>
#include <Eigen/Core>

#include "sdshuffle/metrics.hpp"

namespace sdshuffle {
namespace {

constexpr double kRidge = 1e-6;
constexpr int kMaxIterations = 200;
constexpr double kRelativeTolerance = 1e-8;
constexpr int kMaxHalvings = 60;

double softplus(double x) {
  return x > 0 ? x + std::log1p(std::exp(-x)) : std::log1p(std::exp(x));
}

double sigmoid(double x) {
  if (x >= 0) return 1.0 / (1.0 + std::exp(-x));
  const double e = std::exp(x);
  return e / (1.0 + e);
}

// Intercept column followed by z-scored linear, squared and pairwise-product
// terms. Constant features are dropped.
Eigen::MatrixXd design_matrix(const Eigen::MatrixXd& stacked) {
  const Eigen::Index rows = stacked.rows();
  const Eigen::Index p = stacked.cols();
  const Eigen::Index n_features = 2 * p + p * (p - 1) / 2;
  Eigen::MatrixXd raw(rows, n_features);
  Eigen::Index f = 0;
  for (Eigen::Index j = 0; j < p; ++j) raw.col(f++) = stacked.col(j);
  for (Eigen::Index j = 0; j < p; ++j) raw.col(f++) = stacked.col(j).array().square();
  for (Eigen::Index a = 0; a < p; ++a) {
    for (Eigen::Index b = a + 1; b < p; ++b) {
      raw.col(f++) = stacked.col(a).array() * stacked.col(b).array();
    }
  }

  Eigen::MatrixXd design(rows, n_features + 1);
  design.col(0).setOnes();
  Eigen::Index kept = 1;
  for (Eigen::Index c = 0; c < n_features; ++c) {
    const double m = raw.col(c).mean();
    const double sd =
        std::sqrt((raw.col(c).array() - m).square().sum() / static_cast<double>(rows - 1));
    if (!(sd > 0.0) || !std::isfinite(sd)) continue;
    design.col(kept++) = (raw.col(c).array() - m) / sd;
  }
  design.conservativeResize(Eigen::NoChange, kept);
  return design;
}

// Penalized log-likelihood; the intercept is not penalized.
double objective(const Eigen::MatrixXd& x, const Eigen::VectorXd& y,
                 const Eigen::VectorXd& beta) {
  const Eigen::VectorXd eta = x * beta;
  double ll = 0.0;
  for (Eigen::Index i = 0; i < eta.size(); ++i) ll += y(i) * eta(i) - softplus(eta(i));
  return ll - 0.5 * kRidge * beta.tail(beta.size() - 1).squaredNorm();
}

}  // namespace

PropensityFit propensity_fit(const DataMatrix& original, const DataMatrix& masked,
                             Diagnostics* diagnostics) {
  if (original.cols() != masked.cols()) {
    throw InvalidInput("original and masked data must have the same columns");
  }
  const auto n_orig = static_cast<Eigen::Index>(original.rows());
  const auto n_mask = static_cast<Eigen::Index>(masked.rows());
  Eigen::MatrixXd stacked(n_orig + n_mask, original.values().cols());
  stacked.topRows(n_orig) = original.values();
  stacked.bottomRows(n_mask) = masked.values();
  const Eigen::MatrixXd x = design_matrix(stacked);
  Eigen::VectorXd y(stacked.rows());
  y.head(n_orig).setZero();
  y.tail(n_mask).setOnes();

  const Eigen::Index k = x.cols();
  Eigen::VectorXd beta = Eigen::VectorXd::Zero(k);
  double current = objective(x, y, beta);
  PropensityFit fit;
  Eigen::VectorXd mu(x.rows());
  Eigen::VectorXd weights(x.rows());
  for (int iter = 1; iter <= kMaxIterations; ++iter) {
    fit.iterations = iter;
    const Eigen::VectorXd eta = x * beta;
    for (Eigen::Index i = 0; i < eta.size(); ++i) {
      mu(i) = sigmoid(eta(i));
      weights(i) = mu(i) * (1.0 - mu(i));
    }
    Eigen::VectorXd gradient = x.transpose() * (y - mu);
    gradient.tail(k - 1) -= kRidge * beta.tail(k - 1);
    Eigen::MatrixXd hessian = x.transpose() * weights.asDiagonal() * x;
    hessian.diagonal().tail(k - 1).array() += kRidge;
    const Eigen::VectorXd step = hessian.ldlt().solve(gradient);

    // Step halving until the penalized likelihood does not decrease.
    double scale = 1.0;
    Eigen::VectorXd candidate = beta + step;
    double next = objective(x, y, candidate);
    for (int h = 0; h < kMaxHalvings && !(next >= current); ++h) {
      scale *= 0.5;
      candidate = beta + scale * step;
      next = objective(x, y, candidate);
    }
    if (!(next >= current)) {
      fit.converged = true;  // no ascent direction left
      break;
    }
    const double change = std::abs(next - current) / std::max(std::abs(current), 1e-300);
    beta = std::move(candidate);
    current = next;
    if (change < kRelativeTolerance) {
      fit.converged = true;
      break;
    }
  }
  if (!fit.converged && diagnostics) {
    diagnostics->warn("propensity model did not converge in " +
                      std::to_string(kMaxIterations) + " iterations");
  }

  const Eigen::VectorXd eta = x * beta;
  double sum = 0.0;
  for (Eigen::Index i = 0; i < eta.size(); ++i) {
    const double d = sigmoid(eta(i)) - 0.5;
    sum += d * d;
  }
  fit.ps = sum / static_cast<double>(eta.size());
  fit.ps_scaled = 4.0 * fit.ps;
  return fit;
}

double propensity_score_il(const DataMatrix& original, const DataMatrix& masked,
                           Diagnostics* diagnostics) {
  return propensity_fit(original, masked, diagnostics).ps_scaled;
}

}  // namespace sdshuffle
