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

#ifndef MPMAB_TRIAL_AND_ERROR_H_
#define MPMAB_TRIAL_AND_ERROR_H_

#include <span>
#include <string>
#include <vector>

#include "mpmab/core.h"
#include "mpmab/rng.h"

namespace mpmab {

enum class Mood { kContent, kHopeful, kWatchful, kDiscontent };

const char* MoodName(Mood mood);

// Per-context auxiliary state of a trial-and-error player.
struct AuxState {
  Mood mood = Mood::kDiscontent;
  ArmIndex benchmark_action = 0;
  double benchmark_payoff = 0.0;

  bool operator==(const AuxState&) const = default;
};

// Affine acceptance exponents
//   F(u) = f_slope * u + f_intercept   (discontent acceptance, eps^F(u))
//   G(d) = g_slope * d + g_intercept   (content acceptance of a gain d)
// Both slopes must be negative.
struct AcceptanceFunctions {
  double f_slope = -0.12;
  double f_intercept = 0.15;
  double g_slope = -0.35;
  double g_intercept = 0.4;

  double F(double u) const { return f_slope * u + f_intercept; }
  double G(double gain) const { return g_slope * gain + g_intercept; }

  // Throws ConfigError unless F and G are strictly decreasing and positive
  // on [0,1]. Returns warnings for the softer range conditions
  // G < 1/2 and F < 1/(2M).
  std::vector<std::string> Validate(int num_players) const;

  bool operator==(const AcceptanceFunctions&) const = default;
};

struct TneParams {
  double epsilon = 0.01;
  int num_arms = 1;
  AcceptanceFunctions acceptance;
};

// Probability of each arm under the content experimentation rule.
std::vector<double> ContentActionDistribution(const AuxState& state,
                                              double epsilon, int num_arms);
// Content rule: benchmark with probability 1 - eps, otherwise a uniformly
// chosen other arm.
ArmIndex ContentAction(const AuxState& state, double epsilon, int num_arms,
                       RngStream& rng);
// Mood-dependent action: content experiments, hopeful and watchful replay
// the benchmark, discontent picks uniformly.
ArmIndex SelectAction(const AuxState& state, const TneParams& params,
                      RngStream& rng);

// One state-machine update after playing `played_arm` and observing
// `payoff` in [0,1] (ContractViolation otherwise).
AuxState TneTransition(const AuxState& state, ArmIndex played_arm,
                       double payoff, const TneParams& params, RngStream& rng);

// Visit test: content after the update, and the observed
// payoff equals the (post-update) benchmark payoff.
inline bool CountsAsVisit(const AuxState& next, double payoff) {
  return next.mood == Mood::kContent && payoff == next.benchmark_payoff;
}

struct TneRoundResult {
  JointAction actions;
  std::vector<double> payoffs;
  // Per player: whether nu(actions[m]) is incremented this round.
  std::vector<bool> visit;
};

// One lockstep round of the intermediate game for a single context.
// `values[m][l]` is player m's fixed (perturbed) value of arm l; `states`
// are updated in place; player m draws only from `rngs[m]`.
TneRoundResult TneRound(std::span<AuxState> states,
                        const std::vector<std::vector<double>>& values,
                        const TneParams& params, std::span<RngStream> rngs);

}  // namespace mpmab

#endif  // MPMAB_TRIAL_AND_ERROR_H_
