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

// Synthetic datasets: Gaussian with AR(1) correlation, an exponential
// marginal Gaussian copula on the same correlation, and the fixed benchmark
// design. Identical specs (seed included) give bit-identical data.

#ifndef SDSHUFFLE_SIMULATE_HPP_
#define SDSHUFFLE_SIMULATE_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Core>

#include "sdshuffle/core.hpp"
#include "sdshuffle/rng.hpp"

namespace sdshuffle {

enum class SimFamily { GaussianAR, ExponentialCopula, BenchmarkGaussian };

std::string_view to_string(SimFamily family);
SimFamily parse_sim_family(std::string_view name);

// Unset hyperparameters are drawn from the seed: mu_j ~ U(-3, 3),
// rho ~ U(-0.8, 0.8), lambda ~ U(0.1, 10).
struct SimSpec {
  SimFamily family = SimFamily::GaussianAR;
  std::size_t n = 500;
  std::size_t p = 10;
  std::optional<double> rho;
  std::optional<std::vector<double>> mu;  // GaussianAR only
  std::optional<double> lambda;           // ExponentialCopula only
  Seed seed{};
};

// Throws InvalidParameter on n < 2, p < 1, |rho| >= 1, lambda <= 0 or a mu of
// the wrong length.
void validate(const SimSpec& spec);

struct SimulatedDataset {
  DataMatrix data;
  double rho = 0.0;
  std::vector<double> mu;         // empty for the copula family
  std::optional<double> lambda;
};

// sigma_ij = rho^|i-j|.
Eigen::MatrixXd ar1_correlation(std::size_t p, double rho);

// n draws from N_p(mu, sigma) through the Cholesky factor of sigma.
Eigen::MatrixXd sample_multivariate_normal(std::size_t n, const Eigen::VectorXd& mu,
                                           const Eigen::MatrixXd& sigma, Rng& rng);

SimulatedDataset simulate(const SimSpec& spec);

DataMatrix simulate_gaussian_ar(const SimSpec& spec);
DataMatrix simulate_exponential_copula(const SimSpec& spec);

// N_p(0, sigma) with sigma_ij = (-0.75)^|i-j|.
DataMatrix simulate_benchmark(std::size_t n, std::size_t p, Seed seed);

// Named experiment settings: "gaussian-sim" and "exponential-sim", 30
// datasets of 500 x 10 each.
struct SimPreset {
  std::string name;
  SimFamily family;
  std::size_t n;
  std::size_t p;
  int datasets;
};

SimPreset sim_preset(std::string_view name);

// Spec for dataset `index` of a preset; each dataset has its own seed.
SimSpec preset_spec(const SimPreset& preset, int index, Seed seed);

}  // namespace sdshuffle

#endif  // SDSHUFFLE_SIMULATE_HPP_
