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

#include <cmath>
#include <numeric>

#include "doctest.h"

namespace mpmab {
namespace {

TneParams Params(double eps, int arms) {
  TneParams p;
  p.epsilon = eps;
  p.num_arms = arms;
  return p;
}

AuxState State(Mood mood, ArmIndex a, double u) { return {mood, a, u}; }

TEST_CASE("acceptance functions") {
  AcceptanceFunctions f;
  CHECK(f.F(0.5) == doctest::Approx(0.09));
  CHECK(f.G(0.2) == doctest::Approx(0.33));
  CHECK(f.Validate(2).empty());
  // F(0) = 0.15 >= 1/(2M) for M = 4: warning, not an error.
  CHECK(f.Validate(4).size() == 1);
  AcceptanceFunctions bad = f;
  bad.f_slope = 0.12;
  CHECK_THROWS_AS(bad.Validate(2), ConfigError);
  bad = f;
  bad.g_intercept = 0.3;  // G(1) < 0
  CHECK_THROWS_AS(bad.Validate(2), ConfigError);
}

TEST_CASE("content action distribution") {
  const auto p = ContentActionDistribution(State(Mood::kContent, 1, 0.5), 0.01, 3);
  CHECK(p[0] == doctest::Approx(0.005));
  CHECK(p[1] == doctest::Approx(0.99));
  CHECK(p[2] == doctest::Approx(0.005));
  CHECK(std::accumulate(p.begin(), p.end(), 0.0) == doctest::Approx(1.0));
  CHECK(ContentActionDistribution(State(Mood::kContent, 0, 0.5), 0.3, 1) ==
        std::vector<double>{1.0});

  RngStream rng(1, 0, StreamPurpose::kTrialAndError);
  for (int i = 0; i < 1000; ++i) {
    CHECK(ContentAction(State(Mood::kContent, 2, 0.1), 0.0, 4, rng) == 2);
  }
}

TEST_CASE("content experimentation frequencies within 3 sigma") {
  RngStream rng(2, 0, StreamPurpose::kTrialAndError);
  const int n = 100000;
  std::vector<int> counts(4, 0);
  for (int i = 0; i < n; ++i) {
    ++counts[ContentAction(State(Mood::kContent, 2, 0.1), 0.1, 4, rng)];
  }
  const auto p = ContentActionDistribution(State(Mood::kContent, 2, 0.1), 0.1, 4);
  for (int l = 0; l < 4; ++l) {
    CHECK(std::abs(counts[l] - n * p[l]) < 3 * std::sqrt(n * p[l] * (1 - p[l])));
  }
}

TEST_CASE("mood-dependent action selection") {
  RngStream rng(3, 0, StreamPurpose::kTrialAndError);
  const auto params = Params(0.5, 5);
  for (int i = 0; i < 2000; ++i) {
    CHECK(SelectAction(State(Mood::kHopeful, 3, 0.2), params, rng) == 3);
    CHECK(SelectAction(State(Mood::kWatchful, 1, 0.2), params, rng) == 1);
  }
  std::vector<int> counts(5, 0);
  const int n = 50000;
  for (int i = 0; i < n; ++i) ++counts[SelectAction(State(Mood::kDiscontent, 0, 0), params, rng)];
  for (int c : counts) CHECK(std::abs(c - n / 5.0) < 3 * std::sqrt(n * 0.16));
}

TEST_CASE("transition table") {
  RngStream rng(4, 0, StreamPurpose::kTrialAndError);
  const auto p = Params(0.01, 3);
  const AuxState c = State(Mood::kContent, 1, 0.5);

  // Content.
  CHECK(TneTransition(c, 1, 0.5, p, rng) == c);
  CHECK(TneTransition(c, 1, 0.7, p, rng) == State(Mood::kHopeful, 1, 0.5));
  CHECK(TneTransition(c, 1, 0.2, p, rng) == State(Mood::kWatchful, 1, 0.5));
  CHECK(TneTransition(c, 0, 0.4, p, rng) == c);
  CHECK(TneTransition(c, 0, 0.5, p, rng) == c);
  // Hopeful.
  const AuxState h = State(Mood::kHopeful, 1, 0.5);
  CHECK(TneTransition(h, 1, 0.7, p, rng) == State(Mood::kContent, 1, 0.7));
  CHECK(TneTransition(h, 1, 0.5, p, rng) == State(Mood::kContent, 1, 0.5));
  CHECK(TneTransition(h, 1, 0.3, p, rng) == State(Mood::kWatchful, 1, 0.5));
  // Watchful.
  const AuxState w = State(Mood::kWatchful, 1, 0.5);
  CHECK(TneTransition(w, 1, 0.7, p, rng) == State(Mood::kHopeful, 1, 0.5));
  CHECK(TneTransition(w, 1, 0.5, p, rng) == State(Mood::kContent, 1, 0.5));
  CHECK(TneTransition(w, 1, 0.3, p, rng) == State(Mood::kDiscontent, 1, 0.5));
  // Discontent with a zero payoff stays put.
  const AuxState d = State(Mood::kDiscontent, 2, 0.0);
  CHECK(TneTransition(d, 0, 0.0, p, rng) == d);

  CHECK_THROWS_AS(TneTransition(c, 1, 1.2, p, rng), ContractViolation);
  CHECK_THROWS_AS(TneTransition(c, 1, -0.1, p, rng), ContractViolation);
}

TEST_CASE("content acceptance of a better experiment has probability eps^G") {
  RngStream rng(5, 0, StreamPurpose::kTrialAndError);
  const auto p = Params(0.01, 3);
  const AuxState c = State(Mood::kContent, 1, 0.3);
  const double expected = std::pow(0.01, p.acceptance.G(0.5));
  const int n = 100000;
  int accepted = 0;
  for (int i = 0; i < n; ++i) {
    const auto next = TneTransition(c, 2, 0.8, p, rng);
    if (next == State(Mood::kContent, 2, 0.8)) {
      ++accepted;
    } else {
      REQUIRE(next == c);
    }
  }
  CHECK(std::abs(accepted - n * expected) < 3 * std::sqrt(n * expected * (1 - expected)));
}

TEST_CASE("discontent acceptance eps^F(u)") {
  // F(u) = 0.03 at u = 1: acceptance 0.01^0.03 = 0.8710.
  RngStream rng(6, 0, StreamPurpose::kTrialAndError);
  const auto p = Params(0.01, 3);
  CHECK(p.acceptance.F(1.0) == doctest::Approx(0.03));
  const double expected = std::pow(0.01, 0.03);
  CHECK(expected == doctest::Approx(0.8710).epsilon(1e-3));
  const AuxState d = State(Mood::kDiscontent, 0, 0.0);
  const int n = 100000;
  int accepted = 0;
  for (int i = 0; i < n; ++i) {
    const auto next = TneTransition(d, 2, 1.0, p, rng);
    if (next.mood == Mood::kContent) {
      REQUIRE(next == State(Mood::kContent, 2, 1.0));
      ++accepted;
    } else {
      REQUIRE(next == d);
    }
  }
  CHECK(std::abs(accepted - n * expected) < 3 * std::sqrt(n * expected * (1 - expected)));
}

TEST_CASE("benchmark payoff only changes on acceptance or promotion") {
  RngStream rng(7, 0, StreamPurpose::kTrialAndError);
  const auto p = Params(0.2, 3);
  const Mood moods[] = {Mood::kContent, Mood::kHopeful, Mood::kWatchful, Mood::kDiscontent};
  for (int i = 0; i < 20000; ++i) {
    const AuxState s = State(moods[rng.UniformInt(4)], rng.UniformInt(3), rng.Uniform());
    const ArmIndex a = rng.UniformInt(3);
    const double u = rng.Bernoulli(0.2) ? 0.0 : rng.Uniform();
    const AuxState next = TneTransition(s, a, u, p, rng);
    if (next.benchmark_payoff != s.benchmark_payoff ||
        next.benchmark_action != s.benchmark_action) {
      const bool content_accept = s.mood == Mood::kContent && a != s.benchmark_action &&
                                  u > s.benchmark_payoff;
      const bool hopeful_promotion = s.mood == Mood::kHopeful && u > s.benchmark_payoff;
      const bool discontent_accept = s.mood == Mood::kDiscontent && u > 0.0;
      REQUIRE((content_accept || hopeful_promotion || discontent_accept));
      REQUIRE(next.mood == Mood::kContent);
    }
  }
}

TEST_CASE("tne round examples") {
  const auto p = Params(0.0, 3);  // no experimentation
  const std::vector<std::vector<double>> values = {{0.9, 0.2, 0.1}, {0.3, 0.8, 0.4}};
  std::vector<RngStream> rngs = {RngStream(8, 0, StreamPurpose::kTrialAndError),
                                 RngStream(8, 1, StreamPurpose::kTrialAndError)};
  SUBCASE("content on non-colliding benchmarks") {
    std::vector<AuxState> states = {State(Mood::kContent, 0, 0.9),
                                    State(Mood::kContent, 1, 0.8)};
    const auto before = states;
    const auto r = TneRound(states, values, p, rngs);
    CHECK(states == before);
    CHECK(r.actions == JointAction{0, 1});
    CHECK(r.payoffs == std::vector<double>{0.9, 0.8});
    CHECK(r.visit == std::vector<bool>{true, true});
  }
  SUBCASE("colliding discontent players stay discontent") {
    const auto pd = Params(0.01, 1);
    const std::vector<std::vector<double>> one = {{0.7}, {0.6}};
    std::vector<AuxState> states = {State(Mood::kDiscontent, 0, 0.0),
                                    State(Mood::kDiscontent, 0, 0.0)};
    const auto r = TneRound(states, one, pd, rngs);
    CHECK(r.payoffs == std::vector<double>{0.0, 0.0});
    CHECK(states[0].mood == Mood::kDiscontent);
    CHECK(states[1].mood == Mood::kDiscontent);
    CHECK(r.visit == std::vector<bool>{false, false});
  }
}

TEST_CASE("2x2 game concentrates on the social optimum") {
  const auto p = Params(0.01, 2);
  const std::vector<std::vector<double>> values = {{1.0, 0.0}, {0.0, 1.0}};
  int good_runs = 0;
  for (int seed = 1; seed <= 20; ++seed) {
    std::vector<RngStream> rngs = {RngStream(seed, 0, StreamPurpose::kTrialAndError),
                                   RngStream(seed, 1, StreamPurpose::kTrialAndError)};
    std::vector<AuxState> states = {State(Mood::kDiscontent, rngs[0].UniformInt(2), 0),
                                    State(Mood::kDiscontent, rngs[1].UniformInt(2), 0)};
    int held = 0;
    for (int t = 0; t < 5000; ++t) {
      TneRound(states, values, p, rngs);
      if (t >= 1000 && states[0] == State(Mood::kContent, 0, 1.0) &&
          states[1] == State(Mood::kContent, 1, 1.0)) {
        ++held;
      }
    }
    good_runs += held >= 0.9 * 4000;
  }
  CHECK(good_runs >= 18);
}

}  // namespace
}  // namespace mpmab
