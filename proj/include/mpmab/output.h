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

#ifndef MPMAB_OUTPUT_H_
#define MPMAB_OUTPUT_H_

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "mpmab/experiment.h"

namespace mpmab {

struct EmitFormats {
  bool csv = true;
  bool json = false;
};

// Parses "csv", "json" or "both".
EmitFormats ParseEmitFormats(const std::string& text);

// Shortest round-trip decimal form of `v`.
std::string FormatDouble(double v);

// Column-oriented table; every cell is already formatted.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;

  std::string ToCsv() const;
  // {"columns": [...], "rows": [[...]]} with numeric cells as numbers.
  nlohmann::json ToJson() const;
};

// Metric tables keyed by file stem: regret, reward, collisions, switches.
std::vector<std::pair<std::string, Table>> MetricTables(
    const ExperimentResults& results);

nlohmann::json Manifest(const ExperimentResults& results);

// Writes metric tables, manifest.json, seeds.csv, policies.csv, players.csv,
// timing.csv and, with run.raw_log, rounds_<seed>.csv into `dir` (created
// if needed). Throws std::runtime_error when the directory is unwritable.
void EmitResults(const ExperimentResults& results, const std::string& dir,
                 EmitFormats formats);

}  // namespace mpmab

#endif  // MPMAB_OUTPUT_H_
