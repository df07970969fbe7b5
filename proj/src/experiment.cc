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

#include "mpmab/experiment.h"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <limits>
#include <thread>

#include "mpmab/assignment.h"
#include "mpmab/baselines.h"
#include "mpmab/tne_player.h"

namespace mpmab {

namespace {

bool ObservesContext(Algorithm a) {
  return a == Algorithm::kTne || a == Algorithm::kOracle;
}

}  // namespace

MeanVar ComputeMeanVar(const std::vector<double>& values) {
  MeanVar out;
  if (values.empty()) return out;
  double sum = 0.0;
  for (double v : values) sum += v;
  out.mean = sum / static_cast<double>(values.size());
  if (values.size() > 1) {
    double ss = 0.0;
    for (double v : values) ss += (v - out.mean) * (v - out.mean);
    out.var = ss / static_cast<double>(values.size() - 1);
  }
  return out;
}

int ExperimentResults::num_ok() const {
  return static_cast<int>(
      std::count_if(runs.begin(), runs.end(), [](const RunResult& r) { return r.ok; }));
}

std::vector<std::unique_ptr<Player>> MakePlayers(const ExperimentConfig& config,
                                                 const Environment& reference,
                                                 std::uint64_t seed) {
  const int num_m = config.num_players;
  const int num_l = config.num_arms;
  std::vector<std::unique_ptr<Player>> players;
  switch (config.algorithm) {
    case Algorithm::kTne:
    case Algorithm::kTneContextless: {
      TneConfig tc;
      tc.schedule = config.schedule();
      tc.epsilon = config.epsilon;
      tc.xi = config.xi;
      tc.acceptance = config.acceptance;
      tc.observe_context = config.algorithm == Algorithm::kTne;
      const int num_x = tc.observe_context ? config.num_contexts : 1;
      for (int m = 0; m < num_m; ++m) {
        players.push_back(std::make_unique<TnePlayer>(m, num_l, num_x, tc, seed));
      }
      break;
    }
    case Algorithm::kMusicalChairs:
      for (int m = 0; m < num_m; ++m) {
        players.push_back(std::make_unique<MusicalChairsPlayer>(
            m, num_l, config.mc_exploration_rounds, seed));
      }
      break;
    case Algorithm::kRandomStatic: {
      RngStream rng(seed, kSharedStream, StreamPurpose::kBaseline);
      const auto arms = RandomStaticAssignment(num_m, num_l, rng);
      for (int m = 0; m < num_m; ++m) {
        players.push_back(
            std::make_unique<FixedPolicyPlayer>(std::vector<ArmIndex>{arms[m]}));
      }
      break;
    }
    case Algorithm::kOracle: {
      std::vector<std::vector<ArmIndex>> per_player(num_m);
      for (int x = 0; x < config.num_contexts; ++x) {
        const auto sol = OptimalAssignment(MeanMatrix(reference, x));
        for (int m = 0; m < num_m; ++m) per_player[m].push_back(sol.assignment[m]);
      }
      for (int m = 0; m < num_m; ++m) {
        players.push_back(std::make_unique<FixedPolicyPlayer>(per_player[m]));
      }
      break;
    }
  }
  return players;
}

RunResult RunOne(const ExperimentConfig& config,
                 const EnvironmentFactory& factory,
                 const std::vector<double>& benchmark,
                 const std::vector<std::int64_t>& grid, std::uint64_t seed,
                 int index) {
  RunResult result;
  result.index = index;
  result.seed = seed;
  const auto start = std::chrono::steady_clock::now();
  try {
    RngStream env_rng(seed, kSharedStream, StreamPurpose::kEnvironment);
    auto env = factory.Make(env_rng);
    auto players = MakePlayers(config, factory.reference(), seed);

    GameOptions options;
    options.horizon = config.horizon;
    options.observe_context = ObservesContext(config.algorithm);
    options.optimum_per_context = benchmark;
    options.checkpoints = grid;
    if (config.raw_log) {
      result.rounds.reserve(static_cast<size_t>(config.horizon));
      options.observer = [&](const RoundRecord& r) { result.rounds.push_back(r); };
    }
    GameRun run = RunGame(*env, players, env_rng, options);

    for (const auto& p : players) {
      if (const auto* tne = dynamic_cast<const TnePlayer*>(p.get())) {
        if (!tne->estimator().MatchesSampleLog()) {
          throw ContractViolation("estimator disagrees with its sample log");
        }
        result.estimator_checks += tne->estimator_checks() + 1;
        result.degenerate_policies += tne->degenerate_policies();
      }
      result.final_policies.push_back(p->policy());
    }
    result.checkpoints = std::move(run.checkpoints);
    result.collisions = run.metrics.collisions();
    result.switches = run.metrics.switches();
    result.regret = run.regret;
    result.ok = true;
  } catch (const std::exception& e) {
    result.ok = false;
    result.error = e.what();
    result.rounds.clear();
  }
  result.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

std::vector<AggregateRow> Aggregate(const std::vector<RunResult>& runs,
                                    const std::vector<std::int64_t>& grid) {
  std::vector<AggregateRow> rows;
  std::vector<double> regret, reward, collisions, switches;
  for (size_t i = 0; i < grid.size(); ++i) {
    regret.clear();
    reward.clear();
    collisions.clear();
    switches.clear();
    const std::int64_t prev_t = i == 0 ? 0 : grid[i - 1];
    const double width = static_cast<double>(grid[i] - prev_t);
    for (const auto& r : runs) {
      if (!r.ok) continue;
      const Checkpoint& c = r.checkpoints.at(i);
      const double prev_reward = i == 0 ? 0.0 : r.checkpoints[i - 1].reward;
      regret.push_back(c.regret);
      reward.push_back((c.reward - prev_reward) / width);
      collisions.push_back(static_cast<double>(c.collisions));
      switches.push_back(static_cast<double>(c.switches));
    }
    rows.push_back({grid[i], ComputeMeanVar(regret), ComputeMeanVar(reward),
                    ComputeMeanVar(collisions), ComputeMeanVar(switches)});
  }
  return rows;
}

ExperimentResults RunExperiment(const ExperimentConfig& config) {
  ExperimentResults out;
  out.config = config;
  out.warnings = config.Validate();
  out.config_hash = ConfigHash(config);

  EnvironmentFactory factory(config);
  const Environment& ref = factory.reference();
  out.benchmark = BenchmarkValues(ref, config.effective_regret_benchmark());
  const auto& probs = ref.context_process().probs();
  for (size_t x = 0; x < probs.size(); ++x) {
    out.expected_optimum += probs[x] * out.benchmark[x];
  }
  if (config.num_arms <= kBruteForceMaxArms) {
    std::vector<RewardMatrix> means;
    for (int x = 0; x < config.num_contexts; ++x) means.push_back(MeanMatrix(ref, x));
    out.gap_margin = GapConditionMargin(means);
  } else {
    out.gap_margin = std::numeric_limits<double>::quiet_NaN();
  }

  const auto epoch_ends = config.schedule().EpochEnds(config.horizon);
  out.grid = CheckpointGrid(config.horizon, config.effective_log_every(), epoch_ends);

  const int reps = config.reps;
  out.runs.resize(reps);
  int workers = config.threads == 0
                    ? static_cast<int>(std::max(1u, std::thread::hardware_concurrency()))
                    : config.threads;
  workers = std::clamp(workers, 1, reps);
  std::atomic<int> next{0};
  auto work = [&] {
    for (int i = next++; i < reps; i = next++) {
      out.runs[i] = RunOne(config, factory, out.benchmark, out.grid,
                           config.seed + static_cast<std::uint64_t>(i), i);
    }
  };
  if (workers == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  std::stable_sort(out.runs.begin(), out.runs.end(),
                   [](const RunResult& a, const RunResult& b) { return a.seed < b.seed; });
  out.aggregate = Aggregate(out.runs, out.grid);
  return out;
}

}  // namespace mpmab
