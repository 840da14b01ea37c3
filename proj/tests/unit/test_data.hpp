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

#ifndef SDSHUFFLE_TESTS_TEST_DATA_HPP_
#define SDSHUFFLE_TESTS_TEST_DATA_HPP_

#include <algorithm>
#include <vector>

#include <Eigen/Core>

#include "sdshuffle/core.hpp"
#include "sdshuffle/rng.hpp"

namespace sdshuffle::testing {

// The 12-record restricted-permutation example (columns X1, X2).
inline const std::vector<double> kExampleX1 = {8.87, 9.57,  9.61,  9.36,  9.75,  10.51,
                                             10.01, 9.67, 10.29, 11.42, 12.11, 11.64};
inline const std::vector<double> kExampleX2 = {9.66,  10.09, 10.52, 10.54, 10.80, 11.19,
                                             11.24, 11.47, 11.61, 11.96, 12.23, 12.39};
inline const std::vector<int> kExampleC2 = {1, 1, 1, 1, 2, 2, 2, 2, 3, 3, 3, 3};

inline DataMatrix example_data() {
  Eigen::MatrixXd x(12, 2);
  for (int i = 0; i < 12; ++i) {
    x(i, 0) = kExampleX1[i];
    x(i, 1) = kExampleX2[i];
  }
  return DataMatrix(x);
}

// Standard normal entries; tie-free with probability one.
inline DataMatrix random_data(std::size_t n, std::size_t p, std::uint64_t seed) {
  Rng rng(Seed{seed});
  Eigen::MatrixXd x(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(p));
  for (Eigen::Index i = 0; i < x.rows(); ++i) {
    for (Eigen::Index j = 0; j < x.cols(); ++j) x(i, j) = rng.normal();
  }
  return DataMatrix(x);
}

inline std::vector<double> sorted_column(const DataMatrix& d, std::size_t j) {
  std::vector<double> v(d.column(j).begin(), d.column(j).end());
  std::sort(v.begin(), v.end());
  return v;
}

inline DataMatrix from_rows(std::initializer_list<std::initializer_list<double>> rows) {
  const auto n = static_cast<Eigen::Index>(rows.size());
  const auto p = static_cast<Eigen::Index>(rows.begin()->size());
  Eigen::MatrixXd x(n, p);
  Eigen::Index i = 0;
  for (const auto& r : rows) {
    Eigen::Index j = 0;
    for (double v : r) x(i, j++) = v;
    ++i;
  }
  return DataMatrix(x);
}

}  // namespace sdshuffle::testing

#endif  // SDSHUFFLE_TESTS_TEST_DATA_HPP_
