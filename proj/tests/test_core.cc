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


#include "mpmab/core.h"

#include "doctest.h"

namespace mpmab {
namespace {

TEST_CASE("GameDims rejects impossible shapes") {
  CHECK_NOTHROW(GameDims(2, 3, 3));
  CHECK_NOTHROW(GameDims(1, 1, 1));
  CHECK_THROWS_AS(GameDims(0, 3, 1), ConfigError);
  CHECK_THROWS_AS(GameDims(2, 3, 0), ConfigError);
  try {
    GameDims(4, 3, 1);
    FAIL("expected ConfigError");
  } catch (const ConfigError& e) {
    CHECK(e.field() == "num_arms");
  }
}

TEST_CASE("ResolveRewards zeroes colliding players only") {
  const RewardMatrix r = {{0.9, 0.2, 0.5}, {0.3, 0.8, 0.4}, {0.6, 0.1, 0.7}};
  SUBCASE("no collision") {
    const auto v = ResolveRewards({0, 1, 2}, r);
    CHECK(v == std::vector<double>{0.9, 0.8, 0.7});
  }
  SUBCASE("pair collision") {
    const auto v = ResolveRewards({0, 0, 2}, r);
    CHECK(v == std::vector<double>{0.0, 0.0, 0.7});
  }
  SUBCASE("everyone on one arm") {
    const auto v = ResolveRewards({1, 1, 1}, r);
    CHECK(v == std::vector<double>{0.0, 0.0, 0.0});
  }
  CHECK_THROWS_AS(ResolveRewards({0, 1}, r), ConfigError);
  CHECK_THROWS_AS(ResolveRewards({0, 1, 3}, r), ConfigError);
}

TEST_CASE("CollisionSet and CollisionFlags agree") {
  CHECK(CollisionSet({0, 1, 2}).empty());
  CHECK(CollisionSet({2, 0, 2, 1, 0}) == std::vector<PlayerIndex>{0, 1, 2, 4});
  const auto flags = CollisionFlags({2, 0, 2, 1, 0});
  CHECK(flags == std::vector<bool>{true, true, true, false, true});
}

TEST_CASE("RewardMatrix layout") {
  RewardMatrix m(2, 3, 0.25);
  m(1, 2) = 0.75;
  CHECK(m.num_players() == 2);
  CHECK(m.num_arms() == 3);
  CHECK(m.row(1)[2] == 0.75);
  CHECK(m.row(0)[0] == 0.25);
  CHECK_THROWS_AS((RewardMatrix{{0.1, 0.2}, {0.3}}), ConfigError);
}

TEST_CASE("PhaseName covers every phase") {
  CHECK(std::string(PhaseName(Phase::kExploration)) == "exploration");
  CHECK(std::string(PhaseName(Phase::kLearning)) == "learning");
  CHECK(std::string(PhaseName(Phase::kExploitation)) == "exploitation");
  CHECK(std::string(PhaseName(Phase::kFixed)) == "fixed");
}

}  // namespace
}  // namespace mpmab
