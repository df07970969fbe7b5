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

#include "mpmab/output.h"

#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <stdexcept>

namespace mpmab {

using nlohmann::json;

namespace {

std::string Int(std::int64_t v) { return std::to_string(v); }

void WriteFile(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << text;
  if (!out) throw std::runtime_error("write failed for " + path.string());
}

// One metric: aggregate mean/variance per row plus optional per-run values.
Table MetricTable(const ExperimentResults& r, const std::string& mean_col,
                  const std::string& var_col,
                  const std::function<MeanVar(const AggregateRow&)>& agg,
                  const std::function<double(const RunResult&, size_t)>& per_run) {
  Table t;
  t.columns = {"t", mean_col, var_col};
  if (r.config.per_run_values) {
    for (const auto& run : r.runs) {
      if (run.ok) t.columns.push_back("run_" + std::to_string(run.seed));
    }
  }
  for (size_t i = 0; i < r.aggregate.size(); ++i) {
    const auto& row = r.aggregate[i];
    const MeanVar mv = agg(row);
    std::vector<std::string> cells = {Int(row.t), FormatDouble(mv.mean),
                                      FormatDouble(mv.var)};
    if (r.config.per_run_values) {
      for (const auto& run : r.runs) {
        if (run.ok) cells.push_back(FormatDouble(per_run(run, i)));
      }
    }
    t.rows.push_back(std::move(cells));
  }
  return t;
}

}  // namespace

EmitFormats ParseEmitFormats(const std::string& text) {
  if (text == "csv") return {true, false};
  if (text == "json") return {false, true};
  if (text == "both") return {true, true};
  throw ConfigError("emit", "expected csv, json or both, got \"" + text + "\"");
}

std::string FormatDouble(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (v == 0.0) return "0";  // also folds -0
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

std::string Table::ToCsv() const {
  std::string out;
  for (size_t i = 0; i < columns.size(); ++i) {
    if (i) out += ',';
    out += columns[i];
  }
  out += '\n';
  for (const auto& row : rows) {
    for (size_t i = 0; i < row.size(); ++i) {
      if (i) out += ',';
      out += row[i];
    }
    out += '\n';
  }
  return out;
}

json Table::ToJson() const {
  json rows_json = json::array();
  for (const auto& row : rows) {
    json r = json::array();
    for (const auto& cell : row) {
      json v = json::parse(cell, nullptr, false);
      if (v.is_discarded() || !v.is_number()) {
        r.push_back(cell);
      } else {
        r.push_back(v);
      }
    }
    rows_json.push_back(std::move(r));
  }
  return {{"columns", columns}, {"rows", rows_json}};
}

std::vector<std::pair<std::string, Table>> MetricTables(const ExperimentResults& r) {
  std::vector<std::pair<std::string, Table>> out;
  out.emplace_back("regret", MetricTable(
      r, "mean_regret", "var_regret",
      [](const AggregateRow& a) { return a.regret; },
      [](const RunResult& run, size_t i) { return run.checkpoints[i].regret; }));
  out.emplace_back("reward", MetricTable(
      r, "mean_reward", "var_reward",
      [](const AggregateRow& a) { return a.reward; },
      [&](const RunResult& run, size_t i) {
        const double prev_reward = i == 0 ? 0.0 : run.checkpoints[i - 1].reward;
        const double prev_t = i == 0 ? 0.0 : static_cast<double>(run.checkpoints[i - 1].t);
        return (run.checkpoints[i].reward - prev_reward) /
               (static_cast<double>(run.checkpoints[i].t) - prev_t);
      }));
  out.emplace_back("collisions", MetricTable(
      r, "mean_collisions", "var_collisions",
      [](const AggregateRow& a) { return a.collisions; },
      [](const RunResult& run, size_t i) {
        return static_cast<double>(run.checkpoints[i].collisions);
      }));
  out.emplace_back("switches", MetricTable(
      r, "mean_switches", "var_switches",
      [](const AggregateRow& a) { return a.switches; },
      [](const RunResult& run, size_t i) {
        return static_cast<double>(run.checkpoints[i].switches);
      }));
  return out;
}

json Manifest(const ExperimentResults& r) {
  json runs = json::array();
  for (const auto& run : r.runs) {
    json j = {{"index", run.index}, {"seed", run.seed},
              {"status", run.ok ? "ok" : "failed"}};
    if (!run.ok) j["error"] = run.error;
    runs.push_back(std::move(j));
  }
  json gap = std::isfinite(r.gap_margin) ? json(r.gap_margin) : json(nullptr);
  return {
      {"software", "mpmab"},
      {"version", MPMAB_VERSION_STRING},
      {"config_hash", r.config_hash},
      {"config", ConfigToJson(r.config)},
      {"runs", runs},
      {"runs_ok", r.num_ok()},
      {"warnings", r.warnings},
      {"benchmark_per_context", r.benchmark},
      {"expected_optimum", r.expected_optimum},
      {"gap_margin", gap},
      {"checkpoints", r.grid.size()},
  };
}

void EmitResults(const ExperimentResults& r, const std::string& dir,
                 EmitFormats formats) {
  namespace fs = std::filesystem;
  const fs::path root(dir);
  std::error_code ec;
  fs::create_directories(root, ec);
  if (ec || !fs::is_directory(root)) {
    throw std::runtime_error("cannot create output directory " + dir +
                             (ec ? ": " + ec.message() : ""));
  }

  for (const auto& [stem, table] : MetricTables(r)) {
    if (formats.csv) WriteFile(root / (stem + ".csv"), table.ToCsv());
    if (formats.json) WriteFile(root / (stem + ".json"), table.ToJson().dump(1) + "\n");
  }
  WriteFile(root / "manifest.json", Manifest(r).dump(2) + "\n");

  Table seeds{{"index", "seed", "status", "final_regret", "estimator_checks",
               "degenerate_policies"}, {}};
  Table policies{{"seed", "player", "context", "arm"}, {}};
  Table players{{"seed", "player", "collisions", "switches"}, {}};
  Table timing{{"seed", "wall_seconds"}, {}};
  for (const auto& run : r.runs) {
    seeds.rows.push_back({Int(run.index), std::to_string(run.seed),
                          run.ok ? "ok" : "failed", FormatDouble(run.regret),
                          Int(run.estimator_checks), Int(run.degenerate_policies)});
    timing.rows.push_back({std::to_string(run.seed), FormatDouble(run.wall_seconds)});
    if (!run.ok) continue;
    for (size_t m = 0; m < run.final_policies.size(); ++m) {
      for (size_t x = 0; x < run.final_policies[m].size(); ++x) {
        policies.rows.push_back({std::to_string(run.seed), Int(m), Int(x),
                                 Int(run.final_policies[m][x])});
      }
      players.rows.push_back({std::to_string(run.seed), Int(m),
                              Int(run.collisions[m]), Int(run.switches[m])});
    }
  }
  WriteFile(root / "seeds.csv", seeds.ToCsv());
  WriteFile(root / "policies.csv", policies.ToCsv());
  WriteFile(root / "players.csv", players.ToCsv());
  WriteFile(root / "timing.csv", timing.ToCsv());

  if (r.config.raw_log) {
    for (const auto& run : r.runs) {
      if (!run.ok) continue;
      std::string text = "slot,context,phase,player,arm,sampled,realized,collided\n";
      for (const auto& rec : run.rounds) {
        size_t c = 0;
        for (size_t m = 0; m < rec.actions.size(); ++m) {
          while (c < rec.collisions.size() &&
                 rec.collisions[c] < static_cast<PlayerIndex>(m)) {
            ++c;
          }
          const bool collided = c < rec.collisions.size() &&
                                rec.collisions[c] == static_cast<PlayerIndex>(m);
          text += Int(rec.slot) + ',' + Int(rec.context) + ',' +
                  PhaseName(rec.phase) + ',' + Int(m) + ',' + Int(rec.actions[m]) +
                  ',' + FormatDouble(rec.sampled[m]) + ',' +
                  FormatDouble(rec.realized[m]) + ',' + (collided ? "1" : "0") + '\n';
        }
      }
      WriteFile(root / ("rounds_" + std::to_string(run.seed) + ".csv"), text);
    }
  }
}

}  // namespace mpmab
