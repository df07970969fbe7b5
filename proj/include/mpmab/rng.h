// Copyright 2026 The mpmab Authors.
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

#ifndef MPMAB_RNG_H_
#define MPMAB_RNG_H_

#include <cmath>
#include <cstdint>
#include <random>
#include <span>

namespace mpmab {

// Named substreams. Each (seed, player, purpose) triple owns an independent
// generator so that swapping one algorithm for another leaves the draws of
// every other consumer untouched.
enum class StreamPurpose : std::uint32_t {
  kEnvironment = 1,
  kExploration = 2,
  kTrialAndError = 3,
  kPerturbation = 4,
  kBaseline = 5,
  kScenario = 6,  // one-off scenario geometry (positions, shadowing)
};

// Player slot used for streams that belong to no particular player.
inline constexpr int kSharedStream = -1;

std::uint64_t SplitMix64(std::uint64_t x);

// Deterministic random stream. The engine is std::mt19937_64, whose output
// sequence is fixed by the standard; all distributions are implemented here
// rather than with <random> distributions so sequences are identical across
// standard libraries.
class RngStream {
 public:
  RngStream(std::uint64_t seed, int player, StreamPurpose purpose);

  std::uint64_t seed() const { return seed_; }
  int player() const { return player_; }
  StreamPurpose purpose() const { return purpose_; }

  std::uint64_t NextU64() { return engine_(); }

  // Uniform on [0, 1) with 53 random bits.
  double Uniform();
  // Uniform on [lo, hi].
  double Uniform(double lo, double hi);
  // Uniform integer on [0, n); n >= 1. Unbiased (rejection).
  int UniformInt(int n);
  bool Bernoulli(double p) { return Uniform() < p; }
  double Normal();
  // Gamma(shape, scale) via Marsaglia-Tsang.
  double Gamma(double shape, double scale);
  double Exponential() { return -std::log1p(-Uniform()); }
  // Index drawn from a categorical distribution with the given
  // probabilities (assumed to sum to one).
  int Categorical(std::span<const double> probs);

 private:
  std::uint64_t seed_;
  int player_;
  StreamPurpose purpose_;
  std::mt19937_64 engine_;
  bool has_spare_normal_ = false;
  double spare_normal_ = 0.0;
};

}  // namespace mpmab

#endif  // MPMAB_RNG_H_
