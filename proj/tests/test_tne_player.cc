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


#include "mpmab/tne_player.h"

#include <cmath>
#include <map>

#include "doctest.h"

namespace mpmab {
namespace {

TneConfig SmallConfig() {
  TneConfig c;
  c.schedule = EpochSchedule(20, 40, 10, 1.0);
  c.epsilon = 0.1;
  c.xi = 0.2;
  return c;
}

// Feeds a player synthetic feedback: random contexts, a reward that depends
// on (arm, context), and occasional collisions.
struct Driver {
  explicit Driver(std::uint64_t seed) : rng(seed, kSharedStream, StreamPurpose::kEnvironment) {}

  ContextIndex NextContext(int num_contexts) { return rng.UniformInt(num_contexts); }
  SlotFeedback Feedback(ArmIndex arm, ContextIndex x) {
    if (rng.Bernoulli(0.2)) return {0.0, true};
    return {0.1 + 0.2 * arm + 0.05 * x + 0.01 * rng.Uniform(), false};
  }

  RngStream rng;
};

TEST_CASE("epoch initial states") {
  RngStream rng(1, 0, StreamPurpose::kTrialAndError);
  const auto first = EpochInitStates(1, {-1, -1, -1}, 4, rng);
  REQUIRE(first.size() == 3);
  for (const auto& s : first) {
    CHECK(s.mood == Mood::kDiscontent);
    CHECK(s.benchmark_payoff == 0.0);
    CHECK(s.benchmark_action >= 0);
    CHECK(s.benchmark_action < 4);
  }
  const auto later = EpochInitStates(3, {2, 0}, 4, rng);
  CHECK(later[0] == AuxState{Mood::kContent, 2, 0.0});
  CHECK(later[1] == AuxState{Mood::kContent, 0, 0.0});
  CHECK_THROWS_AS(EpochInitStates(0, {0}, 4, rng), ContractViolation);
}

TEST_CASE("exploitation policy is the most visited arm") {
  RngStream rng(2, 0, StreamPurpose::kTrialAndError);
  const std::vector<std::int64_t> a = {0, 120, 3};
  CHECK(ExploitPolicy(a, 0, rng).arm == 1);
  CHECK_FALSE(ExploitPolicy(a, 0, rng).degenerate);
  const std::vector<std::int64_t> tie = {5, 5, 0};
  CHECK(ExploitPolicy(tie, 2, rng).arm == 0);
  const std::vector<std::int64_t> none = {0, 0, 0};
  const auto fallback = ExploitPolicy(none, 2, rng);
  CHECK(fallback.degenerate);
  CHECK(fallback.arm == 2);
  for (int i = 0; i < 100; ++i) {
    const auto random = ExploitPolicy(none, -1, rng);
    CHECK(random.degenerate);
    CHECK(random.arm >= 0);
    CHECK(random.arm < 3);
  }
}

TEST_CASE("hidden contexts behave exactly like a single context") {
  TneConfig visible = SmallConfig();
  TneConfig hidden = SmallConfig();
  hidden.observe_context = false;
  TnePlayer a(0, 3, 1, visible, 7);
  TnePlayer b(0, 3, 4, hidden, 7);
  CHECK(b.num_contexts() == 1);
  Driver da(9), db(9);
  for (int t = 0; t < 3000; ++t) {
    const ContextIndex x = db.NextContext(4);
    da.NextContext(4);
    const ArmIndex arm_a = a.Act(0);
    const ArmIndex arm_b = b.Act(x);
    REQUIRE(arm_a == arm_b);
    REQUIRE(a.phase() == b.phase());
    a.Observe(da.Feedback(arm_a, 0));
    b.Observe(db.Feedback(arm_b, 0));
  }
  CHECK(a.policy() == b.policy());
}

TEST_CASE("player invariants over several epochs") {
  const TneConfig config = SmallConfig();
  const int arms = 3, contexts = 2;
  TnePlayer p(1, arms, contexts, config, 11);
  Driver d(12);
  std::map<std::pair<int, int>, ArmIndex> exploit_arm;  // (epoch, x) -> arm
  std::vector<int> explore_counts(arms, 0);
  int explore_slots = 0;
  int checked_epochs = 0;
  for (int t = 0; t < 6000; ++t) {
    const EpochPosition pos = p.position();
    const ContextIndex x = d.NextContext(contexts);
    const ArmIndex arm = p.Act(x);
    REQUIRE(p.phase() == pos.phase);
    if (pos.phase == Phase::kExploration) {
      ++explore_counts[arm];
      ++explore_slots;
    }
    if (pos.phase == Phase::kLearning && pos.offset == 0) {
      // Perturbed values stay within xi / k of the estimate.
      for (ArmIndex l = 0; l < arms; ++l) {
        for (ContextIndex c = 0; c < contexts; ++c) {
          const double diff = std::abs(p.perturbed_value(l, c) - p.estimator().Estimate(l, c));
          CHECK(diff <= config.xi / pos.epoch + 1e-12);
        }
      }
      ++checked_epochs;
    }
    if (pos.phase == Phase::kExploitation) {
      REQUIRE(arm == p.policy()[x]);
      const auto key = std::make_pair(pos.epoch, x);
      const auto it = exploit_arm.find(key);
      if (it == exploit_arm.end()) {
        exploit_arm[key] = arm;
      } else {
        REQUIRE(it->second == arm);
      }
    }
    p.Observe(d.Feedback(arm, x));
    if (pos.phase == Phase::kLearning) {
      std::int64_t visits = 0;
      for (ArmIndex l = 0; l < arms; ++l) {
        for (ContextIndex c = 0; c < contexts; ++c) visits += p.visits(l, c);
      }
      REQUIRE(visits <= pos.offset + 1);
    }
  }
  CHECK(checked_epochs >= 4);
  CHECK(p.estimator_checks() == checked_epochs);
  CHECK(p.estimator().MatchesSampleLog());
  for (int c : explore_counts) {
    const double mean = explore_slots / static_cast<double>(arms);
    CHECK(std::abs(c - mean) < 4 * std::sqrt(mean));
  }
}

TEST_CASE("only exploration slots feed the estimator") {
  TnePlayer p(0, 2, 1, SmallConfig(), 3);
  Driver d(4);
  std::int64_t nonzero_exploration = 0;
  for (int t = 0; t < 2000; ++t) {
    const Phase phase = p.position().phase;
    const ArmIndex arm = p.Act(0);
    const SlotFeedback fb = d.Feedback(arm, 0);
    if (phase == Phase::kExploration && fb.reward != 0.0) ++nonzero_exploration;
    p.Observe(fb);
  }
  CHECK(static_cast<std::int64_t>(p.estimator().samples().size()) == nonzero_exploration);
}

TEST_CASE("constructor rejects invalid parameters") {
  TneConfig bad = SmallConfig();
  bad.epsilon = 1.5;
  CHECK_THROWS_AS(TnePlayer(0, 2, 1, bad, 1), ConfigError);
  bad = SmallConfig();
  bad.xi = -0.1;
  CHECK_THROWS_AS(TnePlayer(0, 2, 1, bad, 1), ConfigError);
  TnePlayer ok(0, 2, 2, SmallConfig(), 1);
  CHECK_THROWS_AS(ok.Act(5), ContractViolation);
}

}  // namespace
}  // namespace mpmab
