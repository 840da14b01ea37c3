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

#include "sdshuffle/simulate.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include <Eigen/Cholesky>

#include "sdshuffle/error.hpp"

namespace sdshuffle {
namespace {

constexpr double kMuRange = 3.0;
constexpr double kRhoRange = 0.8;
constexpr double kLambdaLo = 0.1;
constexpr double kLambdaHi = 10.0;
constexpr double kBenchmarkRho = -0.75;
constexpr int kPresetDatasets = 30;

// Stream keys: hyperparameters and samples never share draws.
constexpr std::uint64_t kHyperStream = 0;
constexpr std::uint64_t kSampleStream = 1;

// -ln(1 - U) / lambda with U = Phi(z). 1 - U is evaluated as Phi(-z), and is
// kept inside [1e-16, 1 - 2^-53] so that U stays strictly inside (0, 1).
double exponential_from_normal(double z, double lambda) {
  double tail = 0.5 * std::erfc(z / std::numbers::sqrt2);
  tail = std::clamp(tail, 1e-16, 1.0 - std::numeric_limits<double>::epsilon() / 2);
  return -std::log(tail) / lambda;
}

}  // namespace

std::string_view to_string(SimFamily family) {
  switch (family) {
    case SimFamily::GaussianAR: return "gaussian-ar";
    case SimFamily::ExponentialCopula: return "exponential-copula";
    case SimFamily::BenchmarkGaussian: return "benchmark";
  }
  return "unknown";
}

SimFamily parse_sim_family(std::string_view name) {
  for (auto f : {SimFamily::GaussianAR, SimFamily::ExponentialCopula,
                 SimFamily::BenchmarkGaussian}) {
    if (to_string(f) == name) return f;
  }
  throw InvalidParameter("unknown simulation family: " + std::string(name));
}

void validate(const SimSpec& spec) {
  if (spec.n < 2) throw InvalidParameter("simulation needs n >= 2");
  if (spec.p < 1) throw InvalidParameter("simulation needs p >= 1");
  if (spec.rho && !(std::abs(*spec.rho) < 1.0)) {
    throw InvalidParameter("rho must satisfy |rho| < 1");
  }
  if (spec.lambda && !(*spec.lambda > 0.0 && std::isfinite(*spec.lambda))) {
    throw InvalidParameter("lambda must be positive");
  }
  if (spec.mu) {
    if (spec.mu->size() != spec.p) throw InvalidParameter("mu must have p entries");
    for (double m : *spec.mu) {
      if (!std::isfinite(m)) throw InvalidParameter("mu must be finite");
    }
  }
}

Eigen::MatrixXd ar1_correlation(std::size_t p, double rho) {
  const auto dim = static_cast<Eigen::Index>(p);
  Eigen::MatrixXd sigma(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    for (Eigen::Index j = 0; j < dim; ++j) {
      sigma(i, j) = std::pow(rho, static_cast<double>(std::abs(i - j)));
    }
  }
  return sigma;
}

Eigen::MatrixXd sample_multivariate_normal(std::size_t n, const Eigen::VectorXd& mu,
                                           const Eigen::MatrixXd& sigma, Rng& rng) {
  const Eigen::LLT<Eigen::MatrixXd> llt(sigma);
  if (llt.info() != Eigen::Success) {
    throw std::runtime_error("covariance matrix is not positive definite");
  }
  const Eigen::MatrixXd lower = llt.matrixL();
  const auto rows = static_cast<Eigen::Index>(n);
  Eigen::MatrixXd z(rows, mu.size());
  for (Eigen::Index i = 0; i < rows; ++i) {
    for (Eigen::Index j = 0; j < mu.size(); ++j) z(i, j) = rng.normal();
  }
  Eigen::MatrixXd x = z * lower.transpose();
  x.rowwise() += mu.transpose();
  return x;
}

SimulatedDataset simulate(const SimSpec& spec) {
  validate(spec);
  Rng hyper = Rng::stream(spec.seed, {kHyperStream});
  Rng sampler = Rng::stream(spec.seed, {kSampleStream});
  const auto p = static_cast<Eigen::Index>(spec.p);

  SimulatedDataset out{DataMatrix(Eigen::MatrixXd::Zero(1, 1)), 0.0, {}, std::nullopt};
  switch (spec.family) {
    case SimFamily::BenchmarkGaussian: {
      out.rho = spec.rho.value_or(kBenchmarkRho);
      out.mu.assign(spec.p, 0.0);
      break;
    }
    case SimFamily::GaussianAR: {
      if (spec.mu) {
        out.mu = *spec.mu;
      } else {
        for (Eigen::Index j = 0; j < p; ++j) out.mu.push_back(hyper.uniform(-kMuRange, kMuRange));
      }
      out.rho = spec.rho ? *spec.rho : hyper.uniform(-kRhoRange, kRhoRange);
      break;
    }
    case SimFamily::ExponentialCopula: {
      out.rho = spec.rho ? *spec.rho : hyper.uniform(-kRhoRange, kRhoRange);
      out.lambda = spec.lambda ? *spec.lambda : hyper.uniform(kLambdaLo, kLambdaHi);
      break;
    }
  }

  Eigen::VectorXd mean = Eigen::VectorXd::Zero(p);
  for (Eigen::Index j = 0; j < static_cast<Eigen::Index>(out.mu.size()); ++j) mean(j) = out.mu[j];
  Eigen::MatrixXd x = sample_multivariate_normal(spec.n, mean, ar1_correlation(spec.p, out.rho),
                                                 sampler);
  if (out.lambda) {
    const double lambda = *out.lambda;
    x = x.unaryExpr([lambda](double z) { return exponential_from_normal(z, lambda); });
  }
  out.data = DataMatrix(std::move(x));
  return out;
}

DataMatrix simulate_gaussian_ar(const SimSpec& spec) {
  if (spec.family != SimFamily::GaussianAR) throw InvalidParameter("spec is not gaussian-ar");
  return simulate(spec).data;
}

DataMatrix simulate_exponential_copula(const SimSpec& spec) {
  if (spec.family != SimFamily::ExponentialCopula) {
    throw InvalidParameter("spec is not exponential-copula");
  }
  return simulate(spec).data;
}

DataMatrix simulate_benchmark(std::size_t n, std::size_t p, Seed seed) {
  SimSpec spec;
  spec.family = SimFamily::BenchmarkGaussian;
  spec.n = n;
  spec.p = p;
  spec.seed = seed;
  return simulate(spec).data;
}

SimPreset sim_preset(std::string_view name) {
  if (name == "gaussian-sim") {
    return {"gaussian-sim", SimFamily::GaussianAR, 500, 10, kPresetDatasets};
  }
  if (name == "exponential-sim") {
    return {"exponential-sim", SimFamily::ExponentialCopula, 500, 10, kPresetDatasets};
  }
  throw InvalidParameter("unknown simulation preset: " + std::string(name));
}

SimSpec preset_spec(const SimPreset& preset, int index, Seed seed) {
  SimSpec spec;
  spec.family = preset.family;
  spec.n = preset.n;
  spec.p = preset.p;
  spec.seed = derive_seed(seed, {static_cast<std::uint64_t>(index)});
  return spec;
}

}  // namespace sdshuffle
