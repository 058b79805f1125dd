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

#include "dsky/experiment.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <string>
#include <vector>

#include "dsky/baselines.h"
#include "dsky/skyline.h"
#include "dsky/vertical.h"

namespace dsky {
namespace {

constexpr int kTradeoffDefaultRounds = 3;
constexpr int kPruneDefaultRounds = 8;

bool IsVertical(const std::string& alg) {
  return alg == "vertical-naive" || alg == "prune";
}

std::string ParamOf(const std::string& alg, const RunConfig& c) {
  if (alg == "tradeoff") {
    return "r=" + std::to_string(c.rounds.value_or(kTradeoffDefaultRounds));
  }
  if (alg == "prune") {
    return "rho=" + std::to_string(c.rho) +
           ";r=" + std::to_string(c.rounds.value_or(kPruneDefaultRounds));
  }
  if (alg == "agids") return "g=" + std::to_string(c.grid);
  if (alg == "fds") {
    return "kappa=" + std::to_string(c.kappa) + ";ell=" + std::to_string(c.ell);
  }
  return "-";
}

std::string IdDiff(const std::vector<PointId>& got,
                   const std::vector<PointId>& want) {
  std::vector<PointId> extra, missing;
  std::set_difference(got.begin(), got.end(), want.begin(), want.end(),
                      std::back_inserter(extra));
  std::set_difference(want.begin(), want.end(), got.begin(), got.end(),
                      std::back_inserter(missing));
  auto list = [](const std::vector<PointId>& ids) {
    std::string s;
    for (std::size_t i = 0; i < ids.size() && i < 20; ++i) {
      if (i) s += ' ';
      s += std::to_string(ids[i]);
    }
    if (ids.size() > 20) s += " ...";
    return s;
  };
  return "extra ids [" + list(extra) + "] missing ids [" + list(missing) + "]";
}

ProtocolOutcome RunAlgorithm(const std::string& alg, const RunConfig& c,
                             const HorizontalInstance& inst,
                             const VerticalInstance* vert) {
  SimOptions sim;
  sim.parallel_sites = c.parallel_sites;
  if (alg == "naive") return RunNaive(inst, sim);
  if (alg == "optimal") return RunOptimal(inst, sim);
  if (alg == "tradeoff") {
    TradeoffOptions opt;
    opt.rounds = c.rounds.value_or(kTradeoffDefaultRounds);
    return RunTradeoff(inst, opt, sim);
  }
  if (alg == "sorted") return RunSorted(inst, sim);
  if (alg == "agids") return RunAgids(inst, c.grid, sim);
  if (alg == "fds") return RunFds(inst, FdsOptions{c.kappa, c.ell}, sim);
  if (alg == "vertical-naive") return RunVerticalNaive(*vert, sim);
  PruneOptions opt;
  opt.groups = c.rho;
  opt.rounds = c.rounds.value_or(kPruneDefaultRounds);
  return RunPrune(*vert, opt, sim);
}

std::string Num(double v) {
  char buf[64];
  if (v == std::floor(v) && std::abs(v) < 1e15) {
    std::snprintf(buf, sizeof buf, "%.0f", v);
  } else {
    std::snprintf(buf, sizeof buf, "%.3f", v);
  }
  return buf;
}

std::string Ms(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

}  // namespace

const std::vector<std::string>& AlgorithmNames() {
  static const std::vector<std::string> names = {
      "naive", "optimal", "tradeoff", "sorted", "agids", "fds",
      "vertical-naive", "prune"};
  return names;
}

void ValidateConfig(const RunConfig& c) {
  if (c.algorithms.empty()) throw ParameterError("no algorithm selected");
  for (const std::string& alg : c.algorithms) {
    const auto& names = AlgorithmNames();
    if (std::find(names.begin(), names.end(), alg) == names.end()) {
      throw ParameterError("unknown algorithm '" + alg + "'");
    }
    if (alg == "sorted" && c.partition != PartitionKind::kSorted) {
      throw ParameterError("sorted needs --partition sorted");
    }
    if (alg == "tradeoff" && c.rounds && *c.rounds < 3) {
      throw ParameterError("tradeoff needs r >= 3");
    }
    if (alg == "prune" && c.rounds && *c.rounds < 6) {
      throw ParameterError("prune needs r >= 6");
    }
    if (alg == "prune" && c.rho < 1) throw ParameterError("rho must be positive");
    if (alg == "agids" && c.grid < 1) throw ParameterError("grid must be positive");
    if (alg == "fds" && (c.kappa < 1 || c.ell < 1)) {
      throw ParameterError("kappa and ell must be positive");
    }
  }
  if (c.sites < 1) throw ParameterError("s must be positive");
  if (c.repeat < 1) throw ParameterError("repeat must be positive");
  if (!c.csv) {
    ParseDistribution(c.data);
    if (c.n < 1) throw ParameterError("n must be positive");
  }
}

std::vector<Point> LoadPoints(const RunConfig& config, std::uint64_t seed) {
  if (config.csv) return IngestCsv(*config.csv, config.columns).points;
  return GenerateSynthetic(
      GenSpec::Make(ParseDistribution(config.data), config.n, seed));
}

std::vector<MetricRow> RunExperiment(const RunConfig& config) {
  ValidateConfig(config);
  const std::size_t a = config.algorithms.size();
  std::vector<MetricRow> rows(a);
  for (std::size_t i = 0; i < a; ++i) {
    rows[i].alg = config.algorithms[i];
    rows[i].param = ParamOf(config.algorithms[i], config);
  }

  std::optional<CsvData> csv;
  if (config.csv) csv = IngestCsv(*config.csv, config.columns);

  for (int rep = 0; rep < config.repeat; ++rep) {
    const std::uint64_t seed = config.seed + static_cast<std::uint64_t>(rep);
    const std::vector<Point> points =
        csv ? csv->points
            : GenerateSynthetic(GenSpec::Make(ParseDistribution(config.data),
                                              config.n, seed));
    const std::vector<std::string>* keys =
        csv && config.columns.key ? &csv->keys : nullptr;
    const HorizontalInstance inst =
        Partition(points, config.partition, config.sites, seed, keys);
    std::optional<VerticalInstance> vert;
    std::optional<std::vector<PointId>> oracle;
    if (points.size() <= config.verify_cap) {
      oracle = ComputeSkyline(points).SortedIds();
    }

    for (std::size_t i = 0; i < a; ++i) {
      const std::string& alg = config.algorithms[i];
      if (IsVertical(alg) && !vert) vert = MakeVertical(points);
      ProtocolOutcome out = RunAlgorithm(alg, config, inst, vert ? &*vert : nullptr);
      MetricRow& row = rows[i];
      const CostReport& cost = out.cost;
      row.words += static_cast<double>(cost.total_words);
      row.bits += static_cast<double>(cost.bits());
      row.messages += static_cast<double>(cost.total_messages);
      row.rounds += cost.rounds;
      row.recovered += static_cast<double>(cost.recovered_points);
      row.k += static_cast<double>(out.skyline.size());
      if (config.timing) {
        row.coord_ms += std::chrono::duration<double, std::milli>(cost.coordinator_time).count();
        row.site_ms += std::chrono::duration<double, std::milli>(cost.max_site_time).count();
      }
      row.words_max = std::max(row.words_max, static_cast<double>(cost.total_words));
      row.rounds_max = std::max(row.rounds_max, static_cast<double>(cost.rounds));
      if (oracle) {
        const auto got = out.skyline.SortedIds();
        const bool ok = got == *oracle;
        if (!ok && row.diff.empty()) {
          row.diff = "seed " + std::to_string(seed) + ": " + IdDiff(got, *oracle);
        }
        row.verified = row.verified.value_or(true) && ok;
      }
      if (config.transcript_dir) {
        std::string name = alg + "_" + row.param + "_seed" + std::to_string(seed) + ".csv";
        std::replace(name.begin(), name.end(), ';', '_');
        std::filesystem::create_directories(*config.transcript_dir);
        std::ofstream file(std::filesystem::path(*config.transcript_dir) / name,
                           std::ios::binary);
        out.transcript.WriteCsv(file);
      }
    }
  }
  const double reps = config.repeat;
  for (MetricRow& row : rows) {
    for (double* v : {&row.words, &row.bits, &row.messages, &row.rounds,
                      &row.recovered, &row.k, &row.coord_ms, &row.site_ms}) {
      *v /= reps;
    }
  }
  return rows;
}

double TradeoffBound(std::size_t s, std::size_t k, std::size_t n, int r) {
  const int t = (r + 1) / 2;
  return static_cast<double>(s) * static_cast<double>(k) *
         std::pow(static_cast<double>(n) / static_cast<double>(s), 1.0 / t);
}

std::vector<MetricRow> Sweep(const RunConfig& config, const std::string& parameter,
                             const std::vector<std::string>& values) {
  if (values.empty()) throw ParameterError("sweep needs at least one value");
  std::vector<MetricRow> table;
  for (const std::string& value : values) {
    RunConfig c = config;
    long long v = 0;
    try {
      std::size_t used = 0;
      v = std::stoll(value, &used);
      if (used != value.size()) throw std::invalid_argument(value);
    } catch (const std::exception&) {
      throw ParameterError("sweep value '" + value + "' is not an integer");
    }
    if (v < 1) throw ParameterError("sweep values must be positive");
    if (parameter == "r") {
      c.rounds = static_cast<int>(v);
    } else if (parameter == "rho") {
      c.rho = static_cast<std::size_t>(v);
    } else if (parameter == "grid") {
      c.grid = static_cast<int>(v);
    } else if (parameter == "kappa") {
      c.kappa = static_cast<int>(v);
    } else if (parameter == "ell") {
      c.ell = static_cast<int>(v);
    } else if (parameter == "s") {
      c.sites = static_cast<std::size_t>(v);
    } else {
      throw ParameterError("cannot sweep '" + parameter + "'");
    }
    for (MetricRow& row : RunExperiment(c)) {
      if (row.alg == "tradeoff") {
        const std::size_t n = c.csv ? LoadPoints(c, c.seed).size() : c.n;
        row.bound = TradeoffBound(c.sites, static_cast<std::size_t>(std::llround(row.k)),
                                  n, c.rounds.value_or(kTradeoffDefaultRounds));
      }
      table.push_back(std::move(row));
    }
  }
  return table;
}

void WriteHeader(std::ostream& out, const TableFormat& format) {
  out << "alg,param,words,bits,messages,rounds,recovered,k,coord_ms,site_ms,verified";
  if (format.with_max) out << ",words_max,rounds_max";
  if (format.with_bound) out << ",bound";
  out << '\n';
}

void WriteRow(std::ostream& out, const MetricRow& row, const TableFormat& format) {
  out << row.alg << ',' << row.param << ',' << Num(row.words) << ','
      << Num(row.bits) << ',' << Num(row.messages) << ',' << Num(row.rounds) << ','
      << Num(row.recovered) << ',' << Num(row.k) << ',' << Ms(row.coord_ms) << ','
      << Ms(row.site_ms) << ','
      << (row.verified ? (*row.verified ? "true" : "false") : "skipped");
  if (format.with_max) out << ',' << Num(row.words_max) << ',' << Num(row.rounds_max);
  if (format.with_bound) out << ',' << (row.bound ? Num(std::round(*row.bound)) : "");
  out << '\n';
}

}  // namespace dsky
