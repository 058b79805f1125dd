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

// Experiment runner: generate or ingest points, partition them, run the
// selected protocols and print one metric row per protocol.
//
//   dsky --data indi --n 100000 --s 20 --alg naive,tradeoff --r 3
//   dsky --data anti --alg prune --sweep rho=10,100,1000

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "dsky/datagen.h"
#include "dsky/experiment.h"

namespace {

constexpr int kUsageError = 1;
constexpr int kVerificationFailure = 2;

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Distributed skyline protocols in the coordinator model"};
  app.option_defaults()->always_capture_default();

  dsky::RunConfig config;
  std::string partition = "random";
  std::string csv_path;
  std::string key_col;
  std::string sweep;
  std::string out_path;
  std::string transcript_dir;
  bool no_dedupe = false;
  bool no_timing = false;
  int rounds = 0;

  app.add_option("--data", config.data, "Synthetic dataset")
      ->check(CLI::IsMember({"indi", "corr", "anti"}));
  app.add_option("--n", config.n, "Synthetic point count")->check(CLI::PositiveNumber);
  app.add_option("--csv", csv_path, "Read points from a CSV file instead")
      ->check(CLI::ExistingFile);
  app.add_option("--x-col", config.columns.x, "CSV column for x");
  app.add_option("--y-col", config.columns.y, "CSV column for y");
  app.add_flag("--negate-x", config.columns.negate_x, "Prefer small x");
  app.add_flag("--negate-y", config.columns.negate_y, "Prefer small y");
  app.add_flag("--no-dedupe", no_dedupe, "Reject duplicate rows instead of dropping them");
  app.add_option("--key-col", key_col, "CSV column hashed by --partition by-key");
  app.add_option("--partition", partition, "Partition scheme")
      ->check(CLI::IsMember({"random", "by-key", "sorted"}));
  app.add_option("--s", config.sites, "Number of sites")->check(CLI::PositiveNumber);
  app.add_option("--alg", config.algorithms, "Protocols, comma separated")
      ->delimiter(',')
      ->check(CLI::IsMember(dsky::AlgorithmNames()));
  app.add_option("--r,--rounds", rounds,
                 "Round budget (tradeoff default 3, prune default 8)");
  app.add_option("--rho", config.rho, "Group count for prune")->check(CLI::PositiveNumber);
  app.add_option("--grid", config.grid, "Cells per axis for agids")->check(CLI::PositiveNumber);
  app.add_option("--kappa", config.kappa, "Batch size for fds")->check(CLI::PositiveNumber);
  app.add_option("--ell", config.ell, "Feedback parameter for fds")->check(CLI::PositiveNumber);
  app.add_option("--seed", config.seed, "Random seed");
  app.add_option("--repeat", config.repeat, "Seeds to average over")
      ->check(CLI::PositiveNumber);
  app.add_option("--sweep", sweep, "Parameter sweep, e.g. r=3,5,7 or rho=10,100");
  app.add_option("--verify-cap", config.verify_cap,
                 "Largest instance checked against the sequential skyline");
  app.add_flag("--no-timing", no_timing, "Report zero timings (byte-stable output)");
  app.add_flag("--parallel", config.parallel_sites, "Run sites of a round on threads");
  app.add_option("--transcript-dir", transcript_dir,
                 "Write one message transcript per run into this directory");
  app.add_option("--out", out_path, "Write the table here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsageError;
  }

  if (!csv_path.empty()) {
    config.csv = csv_path;
    if (config.columns.x.empty() || config.columns.y.empty()) {
      std::cerr << "error: --csv needs --x-col and --y-col\n";
      return kUsageError;
    }
  }
  config.columns.dedupe = !no_dedupe;
  if (!key_col.empty()) config.columns.key = key_col;
  if (rounds != 0) config.rounds = rounds;
  config.timing = !no_timing;
  if (!transcript_dir.empty()) config.transcript_dir = transcript_dir;

  std::vector<dsky::MetricRow> rows;
  dsky::TableFormat format;
  try {
    config.partition = dsky::ParsePartition(partition);
    if (sweep.empty()) {
      rows = dsky::RunExperiment(config);
    } else {
      const auto eq = sweep.find('=');
      if (eq == std::string::npos) {
        throw dsky::ParameterError("--sweep expects name=v1,v2,...");
      }
      std::vector<std::string> values;
      for (std::size_t at = eq + 1; at <= sweep.size();) {
        const std::size_t comma = std::min(sweep.find(',', at), sweep.size());
        values.push_back(sweep.substr(at, comma - at));
        at = comma + 1;
      }
      rows = dsky::Sweep(config, sweep.substr(0, eq), values);
      for (const auto& row : rows) format.with_bound |= row.bound.has_value();
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsageError;
  }
  format.with_max = config.repeat > 1;

  std::ofstream file;
  if (!out_path.empty()) {
    file.open(out_path, std::ios::binary);
    if (!file) {
      std::cerr << "error: cannot write " << out_path << '\n';
      return kUsageError;
    }
  }
  std::ostream& out = out_path.empty() ? std::cout : file;
  dsky::WriteHeader(out, format);
  int status = 0;
  for (const auto& row : rows) {
    dsky::WriteRow(out, row, format);
    if (row.verified && !*row.verified) {
      std::cerr << "verification failed for " << row.alg << " (" << row.param
                << "): " << row.diff << '\n';
      status = kVerificationFailure;
    }
  }
  return status;
}
