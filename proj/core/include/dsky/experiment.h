// Copyright 2026 The dsky Authors.
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

// Experiment plumbing shared by the command-line runner and the tests:
// build an instance, run protocols, verify against the sequential skyline,
// and format metric rows.

#ifndef DSKY_EXPERIMENT_H_
#define DSKY_EXPERIMENT_H_

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "dsky/coordsim.h"
#include "dsky/datagen.h"
#include "dsky/horizontal.h"

namespace dsky {

// Protocol names accepted by the runner.
const std::vector<std::string>& AlgorithmNames();

struct RunConfig {
  std::string data = "indi";              // indi | corr | anti, ignored with csv
  std::size_t n = 100000;
  std::optional<std::string> csv;
  CsvColumns columns;
  PartitionKind partition = PartitionKind::kRandom;
  std::size_t sites = 20;
  std::vector<std::string> algorithms = {"naive"};
  std::optional<int> rounds;              // tradeoff defaults to 3, prune to 8
  std::size_t rho = 500;
  int grid = 20;
  int kappa = 1;
  int ell = 1;
  std::uint64_t seed = 1;
  int repeat = 1;
  std::size_t verify_cap = 100000;
  bool timing = true;
  bool parallel_sites = false;
  // When set, one transcript file per run is written here.
  std::optional<std::string> transcript_dir;
};

// Throws ParameterError for unknown names or values outside an
// algorithm's domain.
void ValidateConfig(const RunConfig& config);

struct MetricRow {
  std::string alg;
  std::string param;
  double words = 0;
  double bits = 0;
  double messages = 0;
  double rounds = 0;
  double recovered = 0;
  double k = 0;
  double coord_ms = 0;
  double site_ms = 0;
  std::optional<bool> verified;  // unset when the instance exceeds the cap
  double words_max = 0;
  double rounds_max = 0;
  std::optional<double> bound;   // tradeoff sweeps only
  std::string diff;              // id-set difference on a failed check
};

// The points a configuration runs on for a given seed.
std::vector<Point> LoadPoints(const RunConfig& config, std::uint64_t seed);

// One row per algorithm, averaged over `repeat` seeds starting at `seed`.
std::vector<MetricRow> RunExperiment(const RunConfig& config);

// One row per (algorithm, value). `parameter` is one of r, rho, grid,
// kappa, ell, s.
std::vector<MetricRow> Sweep(const RunConfig& config, const std::string& parameter,
                             const std::vector<std::string>& values);

// s * k * (n / s)^(1 / ceil(r / 2)).
double TradeoffBound(std::size_t s, std::size_t k, std::size_t n, int r);

struct TableFormat {
  bool with_max = false;    // words_max,rounds_max
  bool with_bound = false;  // bound
};

void WriteHeader(std::ostream& out, const TableFormat& format);
void WriteRow(std::ostream& out, const MetricRow& row, const TableFormat& format);

}  // namespace dsky

#endif  // DSKY_EXPERIMENT_H_
