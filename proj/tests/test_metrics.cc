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


#include "mpmab/metrics.h"

#include <cmath>

#include "doctest.h"
#include "mpmab/assignment.h"
#include "mpmab/baselines.h"
#include "mpmab/simulation.h"
#include "test_util.h"

namespace mpmab {
namespace {

std::unique_ptr<SyntheticEnv> TwoContextEnv() {
  return testing::PointMassEnv({{{0.9, 0.2}, {0.3, 0.7}, {0.1, 0.1}},
                                {{0.4, 0.6}, {0.8, 0.5}, {0.2, 0.9}}},
                               {0.4, 0.6});
}

RoundRecord Record(ContextIndex x, JointAction actions, RealizedRewards realized) {
  RoundRecord r;
  r.context = x;
  r.collisions = CollisionSet(actions);
  r.actions = std::move(actions);
  r.realized = std::move(realized);
  return r;
}

TEST_CASE("benchmark values") {
  auto env = TwoContextEnv();
  const auto contextual = BenchmarkValues(*env, RegretBenchmark::kContextual);
  // x=0: (0,1) -> 0.9 + 0.8 = 1.7. x=1: (1,2) -> 0.7 + 0.9 = 1.6.
  CHECK(contextual[0] == doctest::Approx(1.7));
  CHECK(contextual[1] == doctest::Approx(1.6));
  const auto marginal = BenchmarkValues(*env, RegretBenchmark::kMarginal);
  // Marginal means: p0 row {0.48, 0.54, 0.1}, p1 row {0.52, 0.62, 0.62}.
  // Best marginal assignment (1, 2): 0.54 + 0.62.
  CHECK(marginal[0] == doctest::Approx(1.16));
  CHECK(marginal[1] == marginal[0]);
}

TEST_CASE("oracle has zero regret on a deterministic environment") {
  auto env = TwoContextEnv();
  const auto bench = BenchmarkValues(*env, RegretBenchmark::kContextual);
  std::vector<std::vector<ArmIndex>> per_player(2, std::vector<ArmIndex>(2));
  for (ContextIndex x = 0; x < 2; ++x) {
    const auto s = OptimalAssignment(MeanMatrix(*env, x));
    for (int m = 0; m < 2; ++m) per_player[m][x] = s.assignment[m];
  }
  std::vector<std::unique_ptr<Player>> players;
  for (int m = 0; m < 2; ++m) players.push_back(std::make_unique<FixedPolicyPlayer>(per_player[m]));
  RngStream rng(1, kSharedStream, StreamPurpose::kEnvironment);
  GameOptions opts;
  opts.horizon = 5000;
  opts.optimum_per_context = bench;
  const auto run = RunGame(*env, players, rng, opts);
  CHECK(std::abs(run.regret) < 1e-9);
}

TEST_CASE("all-colliding players accumulate the benchmark as regret") {
  auto env = TwoContextEnv();
  const auto bench = BenchmarkValues(*env, RegretBenchmark::kContextual);
  std::vector<std::unique_ptr<Player>> players;
  for (int m = 0; m < 2; ++m) players.push_back(std::make_unique<FixedPolicyPlayer>(std::vector<ArmIndex>{1}));
  RngStream rng(2, kSharedStream, StreamPurpose::kEnvironment);
  double expected = 0.0;
  GameOptions opts;
  opts.horizon = 3000;
  opts.optimum_per_context = bench;
  opts.observer = [&](const RoundRecord& r) { expected += bench[r.context]; };
  const auto run = RunGame(*env, players, rng, opts);
  CHECK(run.regret == doctest::Approx(expected));
  CHECK(run.metrics.total_collisions() == 2 * opts.horizon);
  CHECK(run.metrics.cumulative_reward() == 0.0);
}

TEST_CASE("regret is additive over slots") {
  const std::vector<double> bench = {1.5, 1.0};
  const std::vector<RoundRecord> records = {
      Record(0, {0, 1}, {0.7, 0.6}),
      Record(1, {1, 1}, {0.0, 0.0}),
      Record(0, {2, 0}, {0.5, 0.5}),
  };
  const auto trace = RegretTrace(records, bench);
  REQUIRE(trace.size() == 3);
  CHECK(trace[0] == doctest::Approx(0.2));
  CHECK(trace[1] == doctest::Approx(1.2));
  CHECK(trace[2] == doctest::Approx(1.7));
  RegretAccumulator a(bench), b(bench);
  for (const auto& r : records) a.Add(r);
  b.Add(records[0]);
  const double first = b.cumulative();
  RegretAccumulator c(bench);
  c.Add(records[1]);
  c.Add(records[2]);
  CHECK(a.cumulative() == doctest::Approx(first + c.cumulative()));
  CHECK(a.slots() == 3);
}

TEST_CASE("collision and switch counters") {
  MetricsAccumulators acc(3);
  acc.Add(Record(0, {0, 0, 1}, {0, 0, 0.5}));
  acc.Add(Record(0, {0, 1, 1}, {0.3, 0, 0}));
  acc.Add(Record(0, {2, 1, 0}, {0.1, 0.2, 0.3}));
  CHECK(acc.collisions() == std::vector<std::int64_t>{1, 2, 1});
  CHECK(acc.switches() == std::vector<std::int64_t>{1, 1, 1});
  CHECK(acc.total_collisions() == 4);
  CHECK(acc.total_switches() == 3);
  CHECK(acc.cumulative_reward() == doctest::Approx(1.4));
  CHECK(acc.slots() == 3);
}

TEST_CASE("uniformly random play matches the analytic regret") {
  // Two players, two arms, one context, point masses. Each slot both players
  // pick uniformly: half the slots collide, otherwise one of the two
  // assignments is played.
  auto env = testing::PointMassEnv({{{0.9}, {0.2}}, {{0.3}, {0.8}}}, {1.0});
  const auto bench = BenchmarkValues(*env, RegretBenchmark::kContextual);
  const double expected_reward = 0.25 * (0.9 + 0.8) + 0.25 * (0.2 + 0.3);
  const double expected_regret_per_slot = bench[0] - expected_reward;

  struct RandomPlayer : Player {
    explicit RandomPlayer(int id) : rng(3, id, StreamPurpose::kBaseline) {}
    ArmIndex Act(std::optional<ContextIndex>) override { return rng.UniformInt(2); }
    void Observe(const SlotFeedback&) override {}
    Phase phase() const override { return Phase::kStatic; }
    std::vector<ArmIndex> policy() const override { return {-1}; }
    RngStream rng;
  };
  std::vector<std::unique_ptr<Player>> players;
  players.push_back(std::make_unique<RandomPlayer>(0));
  players.push_back(std::make_unique<RandomPlayer>(1));
  RngStream rng(4, kSharedStream, StreamPurpose::kEnvironment);
  GameOptions opts;
  opts.horizon = 100000;
  opts.optimum_per_context = bench;
  const auto run = RunGame(*env, players, rng, opts);
  // Per-slot reward takes values {1.7, 0.5, 0} with probabilities 1/4, 1/4, 1/2.
  const double second = 0.25 * 1.7 * 1.7 + 0.25 * 0.5 * 0.5;
  const double sd = std::sqrt((second - expected_reward * expected_reward) / opts.horizon);
  CHECK(std::abs(run.regret / opts.horizon - expected_regret_per_slot) < 4 * sd);
}

}  // namespace
}  // namespace mpmab
