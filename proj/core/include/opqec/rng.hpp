// Copyright 2026 The opqec Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef OPQEC_RNG_HPP_
#define OPQEC_RNG_HPP_

#include <cstdint>
#include <random>

namespace opqec {

namespace detail {

/// splitmix64 step, used only to derive well-separated child seeds.
inline std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d4a2b3f90f86dcULL;
  return z ^ (z >> 31);
}

}  // namespace detail

/// Deterministic random stream with cheap key-derived children.
///
/// Every trial of an experiment draws from `stream.child(trial_index)`, so
/// results are reproducible from (seed, trial index) alone and independent of
/// how trials are scheduled across threads.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed) : seed_(seed), engine_(mix(seed)) {}

  std::uint64_t seed() const { return seed_; }

  /// Independent stream for sub-task `index` of this stream.
  RandomStream child(std::uint64_t index) const {
    std::uint64_t s = seed_ ^ 0xa02bdbf7bb3c0a7ULL;
    std::uint64_t h = detail::splitmix64(s);
    s ^= index * 0xda942042e4dd58b5ULL + 0x2545f4914f6cdd1dULL;
    h ^= detail::splitmix64(s);
    return RandomStream(h);
  }

  std::uint64_t next_u64() { return engine_(); }

  bool next_bool() { return (next_u64() >> 63) != 0; }

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  bool bernoulli(double p) { return uniform01() < p; }

  /// Uniform integer in [0, bound) by rejection; bound must be positive.
  std::uint64_t uniform_below(std::uint64_t bound) {
    const std::uint64_t limit = bound * (UINT64_MAX / bound);
    std::uint64_t draw;
    do {
      draw = next_u64();
    } while (draw >= limit);
    return draw % bound;
  }

  /// Access for std::distribution compatibility.
  std::mt19937_64& engine() { return engine_; }

 private:
  static std::uint64_t mix(std::uint64_t seed) {
    std::uint64_t s = seed;
    return detail::splitmix64(s);
  }

  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

}  // namespace opqec

#endif  // OPQEC_RNG_HPP_
