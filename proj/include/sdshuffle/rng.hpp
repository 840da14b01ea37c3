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

#ifndef SDSHUFFLE_RNG_HPP_
#define SDSHUFFLE_RNG_HPP_

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

namespace sdshuffle {

struct Seed {
  std::uint64_t value = 0;

  friend bool operator==(Seed, Seed) = default;
};

// Mixes `seed` with each key in turn (splitmix64 finalizer). Used to give
// every column, grid point and replication its own reproducible stream.
Seed derive_seed(Seed seed, std::initializer_list<std::uint64_t> keys);

// SplitMix64 generator with platform-independent draws. The standard
// distributions are implementation-defined, so the mapping from engine output
// to integers, uniforms and normals is done here. Streams are split off with
// derive_seed().
class Rng {
 public:
  explicit Rng(Seed seed);

  // Independent stream for (seed, keys...).
  static Rng stream(Seed seed, std::initializer_list<std::uint64_t> keys) {
    return Rng(derive_seed(seed, keys));
  }

  // SplitMix64 step.
  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform on [0, 1) with 53 random bits.
  double uniform();
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Uniform integer on [0, bound). bound must be positive.
  std::uint64_t below(std::uint64_t bound);

  // Standard normal (Marsaglia polar method).
  double normal();

 private:
  std::uint64_t state_;
  double spare_normal_ = 0.0;
  bool has_spare_ = false;
};

// In-place Fisher-Yates shuffle.
template <typename T>
void shuffle_in_place(std::span<T> items, Rng& rng) {
  for (std::size_t i = items.size(); i > 1; --i) {
    const auto j = static_cast<std::size_t>(rng.below(i));
    using std::swap;
    swap(items[i - 1], items[j]);
  }
}

// Uniform random permutation of `indices`.
std::vector<std::int64_t> shuffle_indices(std::vector<std::int64_t> indices,
                                          Rng& rng);

}  // namespace sdshuffle

#endif  // SDSHUFFLE_RNG_HPP_
