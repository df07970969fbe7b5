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

#include "mpmab/trial_and_error.h"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace mpmab {

const char* MoodName(Mood mood) {
  switch (mood) {
    case Mood::kContent: return "content";
    case Mood::kHopeful: return "hopeful";
    case Mood::kWatchful: return "watchful";
    case Mood::kDiscontent: return "discontent";
  }
  return "unknown";
}

std::vector<std::string> AcceptanceFunctions::Validate(int num_players) const {
  if (!(f_slope < 0.0)) {
    throw ConfigError("acceptance.f_slope",
                      "F must be strictly decreasing (slope < 0)");
  }
  if (!(g_slope < 0.0)) {
    throw ConfigError("acceptance.g_slope",
                      "G must be strictly decreasing (slope < 0)");
  }
  // Affine and decreasing, so the extremes sit at the interval ends.
  if (!(F(1.0) > 0.0)) {
    throw ConfigError("acceptance.f_intercept", "F must be positive on [0,1]");
  }
  if (!(G(1.0) > 0.0)) {
    throw ConfigError("acceptance.g_intercept", "G must be positive on [0,1]");
  }
  std::vector<std::string> warnings;
  if (!(G(0.0) < 0.5)) {
    std::ostringstream os;
    os << "acceptance: G(0) = " << G(0.0) << " is not below 1/2";
    warnings.push_back(os.str());
  }
  const double f_bound = 1.0 / (2.0 * num_players);
  if (!(F(0.0) < f_bound)) {
    // F is decreasing, so find where it drops below the bound.
    const double u_ok = (f_bound - f_intercept) / f_slope;
    std::ostringstream os;
    os << "acceptance: F(u) < 1/(2M) = " << f_bound
       << " fails for payoffs u < " << std::min(1.0, u_ok) << " (M="
       << num_players << ")";
    warnings.push_back(os.str());
  }
  return warnings;
}

std::vector<double> ContentActionDistribution(const AuxState& state,
                                              double epsilon, int num_arms) {
  std::vector<double> p(num_arms, 0.0);
  if (num_arms == 1) {
    p[0] = 1.0;
    return p;
  }
  for (int l = 0; l < num_arms; ++l) {
    p[l] = l == state.benchmark_action ? 1.0 - epsilon
                                       : epsilon / (num_arms - 1);
  }
  return p;
}

ArmIndex ContentAction(const AuxState& state, double epsilon, int num_arms,
                       RngStream& rng) {
  if (num_arms == 1) return state.benchmark_action;
  if (!(rng.Uniform() < epsilon)) return state.benchmark_action;
  // Uniform over the other L-1 arms.
  const ArmIndex k = rng.UniformInt(num_arms - 1);
  return k < state.benchmark_action ? k : k + 1;
}

ArmIndex SelectAction(const AuxState& state, const TneParams& params,
                      RngStream& rng) {
  switch (state.mood) {
    case Mood::kContent:
      return ContentAction(state, params.epsilon, params.num_arms, rng);
    case Mood::kHopeful:
    case Mood::kWatchful:
      return state.benchmark_action;
    case Mood::kDiscontent:
      return rng.UniformInt(params.num_arms);
  }
  return state.benchmark_action;
}

AuxState TneTransition(const AuxState& state, ArmIndex played_arm,
                       double payoff, const TneParams& params,
                       RngStream& rng) {
  if (!(payoff >= 0.0 && payoff <= 1.0)) {
    throw ContractViolation("trial-and-error payoff outside [0,1]");
  }
  const double bench = state.benchmark_payoff;
  const double eps = params.epsilon;
  AuxState next = state;

  switch (state.mood) {
    case Mood::kContent:
      if (played_arm != state.benchmark_action) {
        if (payoff > bench &&
            rng.Bernoulli(std::pow(eps, params.acceptance.G(payoff - bench)))) {
          next = {Mood::kContent, played_arm, payoff};
        }
      } else if (payoff > bench) {
        next.mood = Mood::kHopeful;
      } else if (payoff < bench) {
        next.mood = Mood::kWatchful;
      }
      break;
    case Mood::kHopeful:
      if (payoff > bench) {
        next = {Mood::kContent, state.benchmark_action, payoff};
      } else if (payoff == bench) {
        next.mood = Mood::kContent;
      } else {
        next.mood = Mood::kWatchful;
      }
      break;
    case Mood::kWatchful:
      if (payoff > bench) {
        next.mood = Mood::kHopeful;
      } else if (payoff == bench) {
        next.mood = Mood::kContent;
      } else {
        next.mood = Mood::kDiscontent;
      }
      break;
    case Mood::kDiscontent:
      if (payoff != 0.0 &&
          rng.Bernoulli(std::pow(eps, params.acceptance.F(payoff)))) {
        next = {Mood::kContent, played_arm, payoff};
      }
      break;
  }
  return next;
}

TneRoundResult TneRound(std::span<AuxState> states,
                        const std::vector<std::vector<double>>& values,
                        const TneParams& params, std::span<RngStream> rngs) {
  const size_t num_players = states.size();
  TneRoundResult out;
  out.actions.resize(num_players);
  for (size_t m = 0; m < num_players; ++m) {
    out.actions[m] = SelectAction(states[m], params, rngs[m]);
  }
  const auto collided = CollisionFlags(out.actions);
  out.payoffs.resize(num_players);
  out.visit.resize(num_players);
  for (size_t m = 0; m < num_players; ++m) {
    out.payoffs[m] = collided[m] ? 0.0 : values[m][out.actions[m]];
    states[m] = TneTransition(states[m], out.actions[m], out.payoffs[m],
                              params, rngs[m]);
    out.visit[m] = CountsAsVisit(states[m], out.payoffs[m]);
  }
  return out;
}

}  // namespace mpmab
