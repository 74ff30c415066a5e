// Copyright 2026 The fuia-lab Authors
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

#ifndef FUIA_RNG_HPP
#define FUIA_RNG_HPP

#include <cstdint>
#include <initializer_list>
#include <string_view>
#include <vector>

namespace fuia {

// Deterministic splitmix64 stream. The standard <random> engines are
// portable but the distributions are not; every draw here is pinned down
// by this file so experiment artifacts replay bit-for-bit anywhere.
class Rng {
 public:
  explicit Rng(uint64_t seed) : state_(seed) {}

  uint64_t next_u64();

  /// Uniform double in [0, 1).
  double uniform();
  /// Uniform double in [lo, hi).
  double uniform(double lo, double hi);
  /// Uniform integer in [0, n); n must be positive.
  int64_t uniform_int(int64_t n);
  /// Standard normal via Box-Muller.
  double normal();
  double normal(double mean, double stddev);
  /// Gamma(alpha, 1) for alpha > 0 (Marsaglia-Tsang).
  double gamma(double alpha);
  /// Dirichlet draw with symmetric concentration alpha over k categories.
  std::vector<double> dirichlet(double alpha, int k);

  /// Fisher-Yates shuffle.
  template <typename T>
  void shuffle(std::vector<T>& values) {
    for (int64_t i = static_cast<int64_t>(values.size()) - 1; i > 0; --i) {
      int64_t j = uniform_int(i + 1);
      std::swap(values[i], values[j]);
    }
  }

  /// k distinct values from [0, n), in draw order.
  std::vector<int> sample_without_replacement(int n, int k);

 private:
  uint64_t state_;
  bool has_cached_normal_ = false;
  double cached_normal_ = 0.0;
};

/// Hash-derives an independent child seed from a base seed and a path of
/// tags, e.g. derive_seed(seed, "local", client, round). Stable across
/// platforms and insertion of unrelated draws.
uint64_t derive_seed(uint64_t base, std::string_view tag,
                     std::initializer_list<uint64_t> path = {});

}  // namespace fuia

#endif  // FUIA_RNG_HPP
