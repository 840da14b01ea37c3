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

// Comparison maskers (microaggregation, additive noise, rank swapping) and
// the MaskSpec dispatcher shared with the shuffling methods.

#ifndef SDSHUFFLE_BASELINES_HPP_
#define SDSHUFFLE_BASELINES_HPP_

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "sdshuffle/core.hpp"
#include "sdshuffle/error.hpp"
#include "sdshuffle/rng.hpp"

namespace sdshuffle {

enum class MaskMethod {
  SjppdsFull,
  SjppdsSimplified,
  Mdav,
  NoiseIndependent,
  NoiseCorrelated,
  RankSwap,
};

// CLI spelling: sjppds-f, sjppds-s, mdav, noise-ind, noise-corr, rank-swap.
std::string_view to_string(MaskMethod method);
MaskMethod parse_mask_method(std::string_view name);

// True for maskers with no record-level mapping between input and output
// rows; their row-correspondence metrics are evaluated in sorted form.
bool is_mapping_free(MaskMethod method);
bool is_deterministic(MaskMethod method);

// One masking run. `param` is n_c for the shuffling methods, the group size
// k for MDAV, the noise percentage q, or the swap percentage s.
struct MaskSpec {
  MaskMethod method = MaskMethod::SjppdsSimplified;
  double param = 100.0;
  Seed seed{};
};

// Throws InvalidParameter when param is outside the method's range.
void validate(const MaskSpec& spec);

// Groups of row indices formed by MDAV on z-scored data. Every group has
// between k and 2k-1 rows. Requires n >= 2k.
std::vector<std::vector<std::size_t>> mdav_partition(const DataMatrix& data, int k);

// Replaces each record by the mean of its MDAV group (original units).
DataMatrix mdav_microaggregate(const DataMatrix& data, int k);

// Adds zero-mean Gaussian noise whose variance is q% of the sample variance
// (independent) or q% of the sample covariance matrix (correlated).
DataMatrix add_noise(const DataMatrix& data, double q, bool correlated, Seed seed,
                     Diagnostics* diagnostics = nullptr);

struct SwapRecord {
  std::size_t column;
  std::int64_t rank_a;  // the lower rank, the one being traversed
  std::int64_t rank_b;
};

// Per column: each unswapped rank, taken in ascending order, is swapped with
// a uniformly chosen unswapped rank at most floor(s*n/100) above it.
DataMatrix rank_swap(const DataMatrix& data, double s, Seed seed,
                     std::vector<SwapRecord>* log = nullptr);

DataMatrix apply_mask(const DataMatrix& data, const MaskSpec& spec,
                      Diagnostics* diagnostics = nullptr);

}  // namespace sdshuffle

#endif  // SDSHUFFLE_BASELINES_HPP_
