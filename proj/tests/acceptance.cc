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


// Acceptance checks. Prints one PASS/FAIL line per criterion. Exits nonzero
// only when a criterion fails that is not listed in --known-failures.

#include <algorithm>
#include <cstdarg>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <limits>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "mpmab/assignment.h"
#include "mpmab/config.h"
#include "mpmab/experiment.h"
#include "mpmab/output.h"
#include "mpmab/presets.h"
#include "mpmab/simulation.h"
#include "mpmab/tne_player.h"
#include "mpmab/trial_and_error.h"

namespace mpmab {
namespace {

namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = false;
  std::string detail;
};

double Seconds(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string Fmt(const char* format, ...) __attribute__((format(printf, 1, 2)));
std::string Fmt(const char* format, ...) {
  char buf[1024];
  va_list args;
  va_start(args, format);
  std::vsnprintf(buf, sizeof(buf), format, args);
  va_end(args);
  return buf;
}

size_t GridIndex(const std::vector<std::int64_t>& grid, std::int64_t t) {
  const auto it = std::find(grid.begin(), grid.end(), t);
  if (it == grid.end()) throw std::runtime_error("checkpoint " + std::to_string(t) + " missing");
  return static_cast<size_t>(it - grid.begin());
}

MeanVar RegretAt(const ExperimentResults& r, std::int64_t t) {
  return r.aggregate.at(GridIndex(r.grid, t)).regret;
}

// ---------------------------------------------------------------------------

Outcome HungarianVsBruteForce() {
  const auto start = Clock::now();
  RngStream rng(2026, kSharedStream, StreamPurpose::kBaseline);
  int mismatches = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const int m = 1 + rng.UniformInt(5);
    const int l = m + rng.UniformInt(8 - m);
    RewardMatrix w(m, l);
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < l; ++j) w(i, j) = rng.Uniform();
    }
    const auto fast = OptimalAssignment(w);
    const auto brute = BruteForceAssignment(w);
    if (fast.value != brute.value || fast.assignment != brute.assignment) {
      ++mismatches;
    }
  }
  const double secs = Seconds(start);
  return {mismatches == 0 && secs < 10.0,
          Fmt("%d mismatches in 1000 instances, %.2f s", mismatches, secs)};
}

struct SmallRuns {
  ExperimentResults tne;
  ExperimentResults mc;
};

ExperimentConfig PaperSmall(Algorithm algorithm) {
  ExperimentConfig c = MakePreset("paper-small");
  c.algorithm = algorithm;
  c.reps = 20;
  c.horizon = 200000;
  c.log_every = 1000;
  c.threads = 0;
  return c;
}

Outcome TrailingReward(const ExperimentResults& r) {
  const size_t i90 = GridIndex(r.grid, r.config.horizon * 9 / 10);
  const size_t iend = GridIndex(r.grid, r.config.horizon);
  const double width = static_cast<double>(r.grid[iend] - r.grid[i90]);
  std::vector<double> per_run;
  for (const auto& run : r.runs) {
    if (!run.ok) continue;
    per_run.push_back((run.checkpoints[iend].reward - run.checkpoints[i90].reward) / width);
  }
  const double mean = ComputeMeanVar(per_run).mean;
  const double rel = (r.expected_optimum - mean) / r.expected_optimum;
  return {r.num_ok() == 20 && std::abs(rel) <= 0.05,
          Fmt("last-10%% mean sum reward %.4f vs optimum %.4f (%.2f%% short, limit 5%%)",
              mean, r.expected_optimum, 100.0 * rel)};
}

Outcome RegretShape(const ExperimentResults& r) {
  const std::int64_t ts[] = {25000, 50000, 100000, 200000};
  const double c3 = static_cast<double>(r.config.c3);
  bool monotone = true, ratio = true, bound = true;
  double prev = -std::numeric_limits<double>::infinity();
  double prev_ratio = std::numeric_limits<double>::infinity();
  std::ostringstream os;
  for (auto t : ts) {
    const double reg = RegretAt(r, t).mean;
    const double lg = std::log2(static_cast<double>(t) / c3 + 2.0);
    const double limit = 200.0 * lg + 40.0 * lg * lg;
    monotone = monotone && reg > prev;
    ratio = ratio && reg / t < prev_ratio;
    bound = bound && reg < limit;
    prev = reg;
    prev_ratio = reg / t;
    os << " T=" << t << ": " << Fmt("%.0f", reg) << (reg < limit ? " < " : " >= ")
       << Fmt("%.0f", limit) << ";";
  }
  return {monotone && ratio && bound,
          Fmt("monotone %s, regret/T decreasing %s, below bound %s;", monotone ? "yes" : "no",
              ratio ? "yes" : "no", bound ? "yes" : "no") + os.str()};
}

Outcome TwoByTwoGame() {
  const auto start = Clock::now();
  TneParams p;
  p.epsilon = 0.01;
  p.num_arms = 2;
  const std::vector<std::vector<double>> values = {{1.0, 0.0}, {0.0, 1.0}};
  int good = 0;
  for (int seed = 1; seed <= 20; ++seed) {
    std::vector<RngStream> rngs = {RngStream(seed, 0, StreamPurpose::kTrialAndError),
                                   RngStream(seed, 1, StreamPurpose::kTrialAndError)};
    std::vector<AuxState> states = {{Mood::kDiscontent, rngs[0].UniformInt(2), 0.0},
                                    {Mood::kDiscontent, rngs[1].UniformInt(2), 0.0}};
    int held = 0;
    for (int t = 0; t < 5000; ++t) {
      TneRound(states, values, p, rngs);
      const bool all_content = states[0].mood == Mood::kContent &&
                               states[1].mood == Mood::kContent &&
                               states[0].benchmark_action == 0 &&
                               states[1].benchmark_action == 1;
      if (t >= 1000 && all_content) ++held;
    }
    good += held >= 3600;
  }
  const double secs = Seconds(start);
  return {good >= 18 && secs < 10.0,
          Fmt("%d/20 runs all-content on (0,1) in >=90%% of the last 4000 rounds, %.2f s", good,
              secs)};
}

Outcome ExplorationStatistics() {
  const auto start = Clock::now();
  ExperimentConfig c = MakePreset("paper-iot");
  const std::int64_t slots = 100000;
  c.c1 = slots;
  EnvironmentFactory factory(c);
  RngStream env_rng(3, kSharedStream, StreamPurpose::kEnvironment);
  auto env = factory.Make(env_rng);
  TneConfig tc;
  tc.schedule = c.schedule();
  std::vector<std::unique_ptr<Player>> players;
  for (int m = 0; m < c.num_players; ++m) {
    players.push_back(std::make_unique<TnePlayer>(m, c.num_arms, c.num_contexts, tc, 3));
  }
  std::vector<std::int64_t> non_collisions(c.num_players, slots);
  GameOptions opts;
  opts.horizon = slots;
  opts.optimum_per_context.assign(c.num_contexts, 0.0);
  opts.observer = [&](const RoundRecord& r) {
    if (r.phase != Phase::kExploration) throw std::logic_error("left exploration");
    for (PlayerIndex m : r.collisions) --non_collisions[m];
  };
  RunGame(*env, players, env_rng, opts);

  const double p = std::pow(11.0 / 12.0, 9);
  const double sigma = std::sqrt(p * (1 - p) / slots);
  int rates_ok = 0;
  double worst_rate = p;
  for (auto n : non_collisions) {
    const double rate = static_cast<double>(n) / slots;
    rates_ok += std::abs(rate - p) <= 3 * sigma;
    if (std::abs(rate - p) > std::abs(worst_rate - p)) worst_rate = rate;
  }
  const bool rate_ok = rates_ok == c.num_players;

  int cells = 0, bad = 0;
  double worst = 0.0;
  for (int m = 0; m < c.num_players; ++m) {
    const auto& tp = static_cast<const TnePlayer&>(*players[m]);
    for (ArmIndex l = 0; l < c.num_arms; ++l) {
      for (ContextIndex x = 0; x < c.num_contexts; ++x) {
        if (tp.estimator().Count(l, x) < 500) continue;
        ++cells;
        const double err = std::abs(tp.estimator().Estimate(l, x) - env->TrueMean(m, l, x));
        worst = std::max(worst, err);
        bad += err > 0.05;
      }
    }
  }
  const double secs = Seconds(start);
  return {rate_ok && cells > 0 && bad == 0 && secs < 30.0,
          Fmt("%d/%d players within 3 sigma (%.5f) of %.5f, farthest %.5f; %d cells with "
              ">=500 samples, %d off by >0.05 (max %.4f); %.2f s",
              rates_ok, c.num_players, 3 * sigma, p, worst_rate, cells, bad, worst, secs)};
}

Outcome EstimatorExactness(const ExperimentResults& r) {
  std::int64_t checks = 0;
  int failed = 0;
  for (const auto& run : r.runs) {
    checks += run.estimator_checks;
    failed += !run.ok;
  }
  return {failed == 0 && checks > 0 && r.num_ok() > 0,
          Fmt("%lld running-vs-recomputed estimate checks passed across %d runs",
              static_cast<long long>(checks), r.num_ok())};
}

ExperimentConfig ContextlessConfig() {
  // Marginal means {{0.9,0.4,0.2},{0.3,0.8,0.5}}; context 1 alone favours
  // (0,2), so the marginal and contextual optima differ.
  const auto j = nlohmann::json::parse(R"({
    "name": "contextless-check",
    "algorithm": "tne-contextless",
    "game": {"num_players": 2, "num_arms": 3, "num_contexts": 2},
    "environment": {
      "context_probs": [0.5, 0.5],
      "cells": [
        [[0.9, 0.9], [0.1, 0.7], [0.35, 0.05]],
        [[0.05, 0.55], [1.0, 0.6], [0.05, 0.95]]
      ]
    },
    "run": {"horizon": 100000, "reps": 20, "seed": 1, "log_every": 1000, "threads": 0}
  })");
  return ConfigFromJson(j);
}

Outcome ContextlessMatchesMarginal() {
  const ExperimentConfig c = ContextlessConfig();
  const auto r = RunExperiment(c);
  EnvironmentFactory factory(c);
  const auto target = OptimalAssignment(MarginalMeanMatrix(factory.reference())).assignment;
  int match = 0;
  for (const auto& run : r.runs) {
    if (!run.ok) continue;
    bool same = true;
    for (int m = 0; m < c.num_players; ++m) {
      same = same && run.final_policies[m].size() == 1 && run.final_policies[m][0] == target[m];
    }
    match += same;
  }
  std::ostringstream os;
  for (auto a : target) os << a;
  return {match >= 18, Fmt("%d/20 runs end on the marginal optimum %s", match, os.str().c_str())};
}

Outcome TneBeatsMusicalChairs(const SmallRuns& runs) {
  const MeanVar tne = RegretAt(runs.tne, 200000);
  const MeanVar mc = RegretAt(runs.mc, 200000);
  const double st = std::sqrt(tne.var), sm = std::sqrt(mc.var);
  return {tne.mean < mc.mean && tne.mean + st < mc.mean - sm,
          Fmt("regret(T=2e5): TnE %.0f +- %.0f, Musical Chairs %.0f +- %.0f", tne.mean, st,
              mc.mean, sm)};
}

std::string Slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Outcome Reproducibility(const fs::path& workdir) {
  ExperimentConfig c = MakePreset("paper-small");
  c.reps = 4;
  c.horizon = 20000;
  c.log_every = 500;
  const fs::path a = workdir / "repro_a", b = workdir / "repro_b";
  fs::remove_all(a);
  fs::remove_all(b);
  EmitResults(RunExperiment(c), a.string(), {true, true});
  c.threads = 2;
  EmitResults(RunExperiment(c), b.string(), {true, true});
  int compared = 0, differ = 0;
  for (const char* stem : {"regret", "reward", "collisions", "switches"}) {
    for (const char* ext : {".csv", ".json"}) {
      const std::string f = std::string(stem) + ext;
      ++compared;
      const std::string x = Slurp(a / f);
      differ += x.empty() || x != Slurp(b / f);
    }
  }
  return {differ == 0, Fmt("%d/%d metric tables byte-identical across reruns", compared - differ,
                           compared)};
}

}  // namespace
}  // namespace mpmab

int main(int argc, char** argv) {
  using namespace mpmab;
  CLI::App app{"mpmab acceptance checks"};
  std::string known_text;
  std::string workdir = "acceptance_tmp";
  app.add_option("--known-failures", known_text,
                 "comma-separated criteria expected to fail");
  app.add_option("--workdir", workdir, "scratch directory");
  CLI11_PARSE(app, argc, argv);

  std::set<int> known;
  {
    std::stringstream ss(known_text);
    std::string item;
    while (std::getline(ss, item, ',')) {
      if (!item.empty()) known.insert(std::stoi(item));
    }
  }
  fs::create_directories(workdir);

  int unexpected = 0;
  auto report = [&](int id, const char* name, const std::function<Outcome()>& check) {
    const auto start = Clock::now();
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::printf("%s %d %s: %s [%.1f s]\n", o.pass ? "PASS" : "FAIL", id, name, o.detail.c_str(),
                Seconds(start));
    if (!o.pass && known.count(id) == 0) ++unexpected;
    if (!o.pass && known.count(id) != 0) {
      std::printf("     criterion %d is a known failure\n", id);
    }
    if (o.pass && known.count(id) != 0) {
      std::printf("     criterion %d listed as a known failure but passed\n", id);
    }
    std::fflush(stdout);
  };

  report(1, "hungarian-vs-brute-force", HungarianVsBruteForce);

  SmallRuns small;
  bool small_ok = true;
  std::string small_error;
  const auto small_start = Clock::now();
  try {
    small.tne = RunExperiment(PaperSmall(Algorithm::kTne));
    small.mc = RunExperiment(PaperSmall(Algorithm::kMusicalChairs));
  } catch (const std::exception& e) {
    small_ok = false;
    small_error = e.what();
  }
  std::printf("     paper-small: 20 TnE and 20 Musical Chairs runs of 2e5 slots [%.1f s]\n",
              Seconds(small_start));
  auto need_small = [&](const std::function<Outcome()>& f) {
    return [&, f] {
      if (!small_ok) return Outcome{false, "paper-small runs failed: " + small_error};
      return f();
    };
  };
  report(2, "paper-small-trailing-reward", need_small([&] { return TrailingReward(small.tne); }));
  report(3, "paper-small-regret-growth", need_small([&] { return RegretShape(small.tne); }));
  report(4, "two-by-two-concentration", TwoByTwoGame);
  report(5, "exploration-statistics", ExplorationStatistics);
  report(6, "estimator-exactness", need_small([&] { return EstimatorExactness(small.tne); }));
  report(7, "contextless-marginal-optimum", ContextlessMatchesMarginal);
  report(8, "tne-beats-musical-chairs", need_small([&] { return TneBeatsMusicalChairs(small); }));
  report(9, "reproducibility", [&] { return Reproducibility(workdir); });

  std::printf("%s: %d unexpected failure(s)\n", unexpected == 0 ? "OK" : "FAILED", unexpected);
  return unexpected == 0 ? 0 : 1;
}
