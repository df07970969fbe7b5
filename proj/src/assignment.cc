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

#include "mpmab/assignment.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <string>

namespace mpmab {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void CheckShape(const RewardMatrix& means) {
  if (means.num_players() < 1) {
    throw ConfigError("means", "need at least one player row");
  }
  if (means.num_players() > means.num_arms()) {
    throw ConfigError("means", "assignment needs M <= L (got M=" +
                                   std::to_string(means.num_players()) +
                                   ", L=" + std::to_string(means.num_arms()) +
                                   ")");
  }
  for (int m = 0; m < means.num_players(); ++m) {
    for (double v : means.row(m)) {
      if (!std::isfinite(v)) throw ConfigError("means", "entries must be finite");
    }
  }
}

// Shortest-augmenting-path Hungarian method on an n x k cost matrix with
// n <= k, minimizing total cost. Returns the column of each row.
std::vector<int> MinCostAssignment(const std::vector<std::vector<double>>& cost) {
  const int n = static_cast<int>(cost.size());
  if (n == 0) return {};
  const int k = static_cast<int>(cost[0].size());
  // 1-based potentials; column 0 is the virtual source.
  std::vector<double> u(n + 1, 0.0), v(k + 1, 0.0);
  std::vector<int> owner(k + 1, 0), way(k + 1, 0);
  for (int i = 1; i <= n; ++i) {
    owner[0] = i;
    int j0 = 0;
    std::vector<double> minv(k + 1, kInf);
    std::vector<bool> used(k + 1, false);
    do {
      used[j0] = true;
      const int i0 = owner[j0];
      double delta = kInf;
      int j1 = 0;
      for (int j = 1; j <= k; ++j) {
        if (used[j]) continue;
        const double cur = cost[i0 - 1][j - 1] - u[i0] - v[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (int j = 0; j <= k; ++j) {
        if (used[j]) {
          u[owner[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (owner[j0] != 0);
    do {
      const int j1 = way[j0];
      owner[j0] = owner[j1];
      j0 = j1;
    } while (j0 != 0);
  }
  std::vector<int> column_of(n, -1);
  for (int j = 1; j <= k; ++j) {
    if (owner[j] != 0) column_of[owner[j] - 1] = j - 1;
  }
  return column_of;
}

// Best value of assigning `rows` to distinct `cols`.
double BestValue(const RewardMatrix& means, const std::vector<int>& rows,
                 const std::vector<int>& cols) {
  if (rows.empty()) return 0.0;
  std::vector<std::vector<double>> cost(rows.size(),
                                        std::vector<double>(cols.size()));
  for (size_t i = 0; i < rows.size(); ++i) {
    for (size_t j = 0; j < cols.size(); ++j) {
      cost[i][j] = -means(rows[i], cols[j]);
    }
  }
  const auto pick = MinCostAssignment(cost);
  double total = 0.0;
  for (size_t i = 0; i < rows.size(); ++i) total += means(rows[i], cols[pick[i]]);
  return total;
}

double SumInPlayerOrder(const RewardMatrix& means,
                        const std::vector<ArmIndex>& assignment) {
  double total = 0.0;
  for (size_t m = 0; m < assignment.size(); ++m) {
    total += means(static_cast<int>(m), assignment[m]);
  }
  return total;
}

void CheckGuard(const RewardMatrix& means) {
  CheckShape(means);
  if (means.num_arms() > kBruteForceMaxArms) {
    throw ConfigError("means", "exhaustive search limited to L <= " +
                                   std::to_string(kBruteForceMaxArms));
  }
}

// Calls visit(assignment) for every injective map, in lexicographic order.
void ForEachAssignment(int num_players, int num_arms,
                       const std::function<void(const std::vector<ArmIndex>&)>& visit) {
  std::vector<ArmIndex> current(num_players, -1);
  std::vector<bool> taken(num_arms, false);
  std::function<void(int)> recurse = [&](int m) {
    if (m == num_players) {
      visit(current);
      return;
    }
    for (int l = 0; l < num_arms; ++l) {
      if (taken[l]) continue;
      taken[l] = true;
      current[m] = l;
      recurse(m + 1);
      taken[l] = false;
    }
  };
  recurse(0);
}

}  // namespace

AssignmentSolution OptimalAssignment(const RewardMatrix& means) {
  CheckShape(means);
  const int num_m = means.num_players();
  const int num_l = means.num_arms();

  std::vector<int> all_rows(num_m), all_cols(num_l);
  for (int m = 0; m < num_m; ++m) all_rows[m] = m;
  for (int l = 0; l < num_l; ++l) all_cols[l] = l;
  const double optimum = BestValue(means, all_rows, all_cols);
  const double tol = 1e-10 * (1.0 + std::abs(optimum));

  // Fix players in order to the smallest arm that still admits an optimal
  // completion.
  AssignmentSolution out;
  out.assignment.assign(num_m, -1);
  std::vector<bool> taken(num_l, false);
  double prefix = 0.0;
  for (int m = 0; m < num_m; ++m) {
    std::vector<int> rest_rows;
    for (int r = m + 1; r < num_m; ++r) rest_rows.push_back(r);
    ArmIndex chosen = -1;
    for (int l = 0; l < num_l && chosen < 0; ++l) {
      if (taken[l]) continue;
      std::vector<int> rest_cols;
      for (int c = 0; c < num_l; ++c) {
        if (!taken[c] && c != l) rest_cols.push_back(c);
      }
      const double completion = BestValue(means, rest_rows, rest_cols);
      if (prefix + means(m, l) + completion >= optimum - tol) chosen = l;
    }
    if (chosen < 0) {
      // Unreachable unless rounding exceeds tol; fall back to the plain
      // Hungarian assignment.
      std::vector<std::vector<double>> cost(num_m, std::vector<double>(num_l));
      for (int r = 0; r < num_m; ++r) {
        for (int c = 0; c < num_l; ++c) cost[r][c] = -means(r, c);
      }
      out.assignment = MinCostAssignment(cost);
      out.value = SumInPlayerOrder(means, out.assignment);
      return out;
    }
    out.assignment[m] = chosen;
    taken[chosen] = true;
    prefix += means(m, chosen);
  }
  out.value = SumInPlayerOrder(means, out.assignment);
  return out;
}

AssignmentSolution BruteForceAssignment(const RewardMatrix& means) {
  CheckGuard(means);
  AssignmentSolution best;
  best.value = -kInf;
  ForEachAssignment(means.num_players(), means.num_arms(),
                    [&](const std::vector<ArmIndex>& a) {
                      const double v = SumInPlayerOrder(means, a);
                      if (v > best.value) {
                        best.value = v;
                        best.assignment = a;
                      }
                    });
  return best;
}

double SecondBestGap(const RewardMatrix& means) {
  CheckGuard(means);
  std::vector<double> values;
  ForEachAssignment(means.num_players(), means.num_arms(),
                    [&](const std::vector<ArmIndex>& a) {
                      values.push_back(SumInPlayerOrder(means, a));
                    });
  const double best = *std::max_element(values.begin(), values.end());
  // Sums of the same entries in different orders may differ in the last
  // bits; treat those as ties.
  const double tol = 1e-12 * (1.0 + std::abs(best));
  double second = -kInf;
  for (double v : values) {
    if (v < best - tol) second = std::max(second, v);
  }
  if (second == -kInf) return kInf;
  return (best - second) / (2.0 * means.num_players());
}

double GapConditionMargin(std::span<const RewardMatrix> per_context) {
  double margin = kInf;
  for (const auto& means : per_context) {
    margin = std::min(margin, SecondBestGap(means));
  }
  return margin;
}

}  // namespace mpmab
