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

// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Every check compares against the naive pairwise oracle.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "dsky/baselines.h"
#include "dsky/datagen.h"
#include "dsky/experiment.h"
#include "dsky/horizontal.h"
#include "dsky/quantiles.h"
#include "dsky/skyline.h"
#include "dsky/vertical.h"
#include "oracle.h"

namespace dsky {
namespace {

namespace fs = std::filesystem;

constexpr double kOptimalWordConstant = 8.0;

int failures = 0;

void Report(int id, const std::string& name, bool ok, const std::string& detail) {
  std::printf("%s %d %s: %s\n", ok ? "PASS" : "FAIL", id, name.c_str(), detail.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

std::string Fmt(const char* fmt, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, fmt, args...);
  return buf;
}

std::size_t HalfUp(std::size_t k) { return (k + 1) / 2; }

// Shared state for the randomized suite.
struct SuiteStats {
  std::size_t configs = 0;
  std::size_t runs = 0;
  std::size_t mismatches = 0;
  std::string first_mismatch;

  std::size_t optimal_runs = 0;
  std::size_t optimal_round_violations = 0;  // rounds > ceil(k/2)
  std::size_t optimal_round_plus_one = 0;    // rounds > ceil(k/2) + 1
  std::size_t optimal_word_violations = 0;
  std::string first_optimal;

  std::size_t tradeoff_runs = 0;
  std::size_t tradeoff_round_violations = 0;
  std::size_t sorted_runs = 0;
  std::size_t sorted_violations = 0;
  std::string first_sorted;
  std::size_t prune_runs = 0;
  std::size_t prune_round_violations = 0;
};

struct SuiteCase {
  std::string label;
  HorizontalInstance instance;
};

SuiteCase MakeCase(std::mt19937_64& rng, int index) {
  SuiteCase c;
  const int family = index % 6;
  const std::size_t n = 1 + rng() % 2000;
  const std::size_t s = 1 + rng() % 10;
  const std::uint64_t seed = rng();
  if (family < 3) {
    const auto kind = static_cast<Distribution>(family);
    const auto part = static_cast<PartitionKind>((index / 6) % 3);
    c.instance = Partition(GenerateSynthetic(GenSpec::Make(kind, n, seed)), part, s, seed);
    c.label = DistributionName(kind) + "/" + PartitionName(part);
  } else if (family == 3) {
    const auto part = static_cast<PartitionKind>((index / 6) % 3);
    std::mt19937_64 local(seed);
    const int side = 2 + static_cast<int>(rng() % 60);
    c.instance = Partition(testing::LatticePoints(n, side, local), part, s, seed);
    c.label = "lattice/" + PartitionName(part);
  } else if (family == 4) {
    const std::size_t m = 1 + rng() % 200;
    std::vector<BitVector> vectors(s, BitVector(m));
    for (auto& v : vectors) {
      for (std::size_t i = 0; i < m; ++i) v[i] = (rng() % 3) == 0;
    }
    c.instance = DisjStaircases(vectors);
    c.label = "disj-staircases";
  } else {
    const std::size_t m = 2 + rng() % 500;
    BitVector u(m);
    for (std::size_t i = 0; i < m; ++i) u[i] = rng() & 1;
    c.instance = OneRoundHard(u, rng() & 1);
    c.label = "one-round-hard";
  }
  return c;
}

void Check(SuiteStats& st, const std::string& what, const std::vector<PointId>& got,
           const std::vector<PointId>& want) {
  ++st.runs;
  if (got != want) {
    if (st.mismatches++ == 0) st.first_mismatch = what;
  }
}

SuiteStats RunSuite() {
  SuiteStats st;
  std::mt19937_64 rng(20260101);
  const int kRounds[] = {3, 5, 7, 9};
  const int kPruneRounds[] = {6, 8, 12};
  for (int i = 0; i < 1200; ++i) {
    SuiteCase c = MakeCase(rng, i);
    ++st.configs;
    const auto& inst = c.instance;
    const auto all = inst.Union();
    const auto want = testing::OracleSkylineIds(all);
    const std::size_t k = want.size();
    const std::size_t s = inst.num_sites();
    const std::string tag = Fmt("#%d %s n=%zu s=%zu", i, c.label.c_str(), all.size(), s);

    Check(st, tag + " naive", RunNaive(inst).skyline.SortedIds(), want);

    auto opt = RunOptimal(inst);
    Check(st, tag + " optimal", opt.skyline.SortedIds(), want);
    ++st.optimal_runs;
    const bool over_rounds = static_cast<std::size_t>(opt.cost.rounds) > HalfUp(k);
    const bool over_words = double(opt.cost.total_words) > kOptimalWordConstant * k * s;
    st.optimal_round_violations += over_rounds;
    st.optimal_round_plus_one += static_cast<std::size_t>(opt.cost.rounds) > HalfUp(k) + 1;
    st.optimal_word_violations += over_words;
    if ((over_rounds || over_words) && st.first_optimal.empty()) {
      st.first_optimal = Fmt("%s k=%zu rounds=%d words=%zu", tag.c_str(), k, opt.cost.rounds,
                             opt.cost.total_words);
    }

    const int r = kRounds[i % 4];
    auto trade = RunTradeoff(inst, {.rounds = r});
    Check(st, tag + Fmt(" tradeoff r=%d", r), trade.skyline.SortedIds(), want);
    ++st.tradeoff_runs;
    st.tradeoff_round_violations += trade.cost.rounds > r;

    if (inst.kind == PartitionKind::kSorted) {
      auto sorted = RunSorted(inst);
      Check(st, tag + " sorted", sorted.skyline.SortedIds(), want);
      ++st.sorted_runs;
      const bool bad = sorted.cost.rounds != 2 || sorted.cost.total_words > 2 * k + 3 * s;
      st.sorted_violations += bad;
      if (bad && st.first_sorted.empty()) {
        st.first_sorted = Fmt("%s k=%zu rounds=%d words=%zu", tag.c_str(), k,
                              sorted.cost.rounds, sorted.cost.total_words);
      }
    }

    const int g = 1 + static_cast<int>(rng() % 40);
    Check(st, tag + Fmt(" agids g=%d", g), RunAgids(inst, g).skyline.SortedIds(), want);
    const int kappa = 1 + static_cast<int>(rng() % 8);
    Check(st, tag + Fmt(" fds kappa=%d", kappa),
          RunFds(inst, {.kappa = kappa}).skyline.SortedIds(), want);

    const auto vert = MakeVertical(all);
    Check(st, tag + " vertical-naive", RunVerticalNaive(vert).skyline.SortedIds(), want);
    const int pr = kPruneRounds[i % 3];
    const std::size_t rho = 1 + rng() % (all.size() + 1);
    auto prune = RunPrune(vert, {.groups = rho, .rounds = pr});
    Check(st, tag + Fmt(" prune rho=%zu r=%d", rho, pr), prune.skyline.SortedIds(), want);
    ++st.prune_runs;
    st.prune_round_violations += prune.cost.rounds > pr;
  }
  return st;
}

HorizontalInstance Synthetic(Distribution kind, std::size_t n, std::size_t s,
                             std::uint64_t seed) {
  return Partition(GenerateSynthetic(GenSpec::Make(kind, n, seed)), PartitionKind::kRandom, s,
                   seed);
}

void CriterionTradeoffScale(const SuiteStats& st) {
  bool ok = st.tradeoff_round_violations == 0;
  std::string detail = Fmt("%zu/%zu suite runs over budget", st.tradeoff_round_violations,
                           st.tradeoff_runs);
  for (auto kind : {Distribution::kIndi, Distribution::kAnti}) {
    const auto inst = Synthetic(kind, 100000, 20, 1);
    const double naive = RunNaive(inst).cost.total_words;
    auto t = RunTradeoff(inst, {.rounds = 3});
    const double ratio = t.cost.total_words / naive;
    ok &= ratio <= 0.6 && t.cost.rounds <= 3;
    detail += Fmt("; %s tradeoff/naive = %.0f/%.0f = %.2f (limit 0.60)",
                  DistributionName(kind).c_str(), double(t.cost.total_words), naive, ratio);
  }
  Report(3, "tradeoff round budget and word savings", ok, detail);
}

void CriterionQuantiles() {
  std::mt19937_64 rng(555);
  std::size_t boundary_violations = 0, strip_violations = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t s = 1 + rng() % 20;
    const std::size_t d = 1 + rng() % 100;
    const std::size_t n = 2 * d + rng() % 20000;
    // Values are distinct. Half the trials hand each site a contiguous
    // range of them, the worst case for merging summaries.
    const bool ranged = trial % 2;
    std::vector<std::vector<double>> sites(s);
    std::vector<double> all;
    for (std::size_t i = 0; i < n; ++i) all.push_back(double(i) + double(rng() >> 11) * 0x1p-53);
    for (std::size_t i = 0; i < n; ++i) {
      const std::size_t site = ranged ? std::min(s - 1, i * s / n + (rng() % 4 == 0)) : rng() % s;
      sites[site].push_back(all[i]);
    }
    std::sort(all.begin(), all.end());
    std::vector<QuantileSummary> qs;
    for (std::size_t i = 0; i < s; ++i) {
      std::sort(sites[i].begin(), sites[i].end());
      qs.push_back(LocalSummary(sites[i], 1.0 / d, i));
    }
    const auto b = StripBoundaries(qs, d);
    const double slack = double(n) / (2.0 * d);
    for (std::size_t j = 1; j < d; ++j) {
      const double rank = double(testing::RankBelow(all, b[j - 1]));
      if (std::abs(rank - double(j) * n / d) > slack) ++boundary_violations;
    }
    std::vector<std::size_t> count(d, 0);
    for (double x : all) ++count[StripOf(b, x)];
    for (std::size_t c : count) strip_violations += double(c) > 2.0 * n / d;
  }
  Report(5, "quantile strip boundaries", boundary_violations == 0 && strip_violations == 0,
         Fmt("200 configurations, %zu boundary rank violations, %zu overfull strips",
             boundary_violations, strip_violations));
}

void CriterionOneRoundHard() {
  std::mt19937_64 rng(99);
  bool ok = true;
  double words[3] = {};
  std::string detail;
  const std::size_t ms[] = {250, 500, 1000};
  for (int i = 0; i < 3; ++i) {
    BitVector u(ms[i]);
    for (std::size_t j = 0; j < ms[i]; ++j) u[j] = rng() & 1;
    auto out = RunNaive(OneRoundHard(u, false));
    const std::size_t up = out.transcript.WordsIn(Direction::kUp);
    ok &= up >= ms[i];
    words[i] = double(out.cost.total_words);
    detail += Fmt("m=%zu up=%zu total=%.0f; ", ms[i], up, words[i]);
  }
  const double ratio = words[2] / words[0];
  ok &= ratio >= 3.5 && ratio <= 4.5;
  detail += Fmt("ratio 1000/250 = %.3f", ratio);
  Report(6, "one-round hard instance cost grows linearly", ok, detail);
}

void CriterionVerticalDisj() {
  // Threads split the outer mask of A; each counts its own mismatches.
  const unsigned workers = std::max(1u, std::thread::hardware_concurrency());
  std::size_t pairs = 0, bad = 0, bad_empty = 0;
  std::string first;
  for (std::size_t n = 1; n <= 12; ++n) {
    const std::uint32_t full = 1u << n;
    std::vector<std::size_t> wbad(workers, 0), wempty(workers, 0);
    std::vector<std::string> wfirst(workers);
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (std::uint32_t a = w; a < full; a += workers) {
          std::vector<std::size_t> sa;
          for (std::size_t i = 0; i < n; ++i) if ((a >> i) & 1) sa.push_back(i + 1);
          for (std::uint32_t b = 0; b < full; ++b) {
            std::vector<std::size_t> sb;
            for (std::size_t i = 0; i < n; ++i) if ((b >> i) & 1) sb.push_back(i + 1);
            const auto size = testing::OracleSkylineIds(VerticalDisj(sa, sb, n).Join()).size();
            if ((size == 1) != ((a & b) != 0)) {
              ++wbad[w];
              if (a == 0 || b == 0) ++wempty[w];
              if (wfirst[w].empty()) {
                wfirst[w] = Fmt("n=%zu A=%#x B=%#x skyline=%zu", n, a, b, size);
              }
            }
          }
        }
      });
    }
    for (auto& t : pool) t.join();
    pairs += std::size_t(full) * full;
    for (unsigned w = 0; w < workers; ++w) {
      bad += wbad[w];
      bad_empty += wempty[w];
      if (first.empty() && !wfirst[w].empty()) first = wfirst[w];
    }
  }
  Report(7, "vertical disjointness reduction", bad == 0,
         Fmt("%zu pairs, %zu mismatches (%zu with an empty set)%s%s", pairs, bad, bad_empty,
             first.empty() ? "" : ", first: ", first.c_str()));
}

void CriterionPrune(const SuiteStats& st) {
  const auto pts = GenerateSynthetic(GenSpec::Make(Distribution::kCorr, 100000, 1));
  const auto vert = MakeVertical(pts);
  auto out = RunPrune(vert, {.groups = 10000, .rounds = 8});
  const bool sound = out.skyline.SortedIds() == ComputeSkyline(pts).SortedIds();
  const bool ok = st.prune_round_violations == 0 && sound && out.cost.rounds <= 8 &&
                  out.cost.recovered_points <= 5000;
  Report(8, "interactive pruning budget and recovery", ok,
         Fmt("%zu/%zu suite runs over budget; corr n=100000 rho=10000 r=8: recovered %zu "
             "(limit 5000), rounds %d, skyline %s",
             st.prune_round_violations, st.prune_runs, out.cost.recovered_points,
             out.cost.rounds, sound ? "exact" : "WRONG"));
}

void CriterionRhoSweep() {
  const auto vert = MakeVertical(GenerateSynthetic(GenSpec::Make(Distribution::kAnti, 100000, 1)));
  const std::size_t rhos[] = {10, 100, 1000, 10000, 100000};
  std::vector<double> words;
  std::string detail;
  for (std::size_t rho : rhos) {
    auto out = RunPrune(vert, {.groups = rho, .rounds = 8});
    words.push_back(double(out.cost.total_words));
    detail += Fmt("rho=%zu words=%zu recovered=%zu; ", rho, out.cost.total_words,
                  out.cost.recovered_points);
  }
  const auto best = std::min_element(words.begin(), words.end()) - words.begin();
  const bool interior = best != 0 && best != static_cast<long>(words.size()) - 1;
  detail += Fmt("minimum at rho=%zu", rhos[best]);
  Report(9, "rho sweep has an interior minimum", interior, detail);
}

std::string ReadAll(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), {}};
}

void CriterionDeterminism() {
  const fs::path root = fs::temp_directory_path() / "dsky_acceptance_determinism";
  fs::remove_all(root);
  std::string tables[2];
  bool ok = true;
  std::size_t files = 0;
  for (int run = 0; run < 2; ++run) {
    RunConfig c;
    c.data = "anti";
    c.n = 5000;
    c.sites = 7;
    c.algorithms = AlgorithmNames();
    c.algorithms.erase(std::find(c.algorithms.begin(), c.algorithms.end(), "sorted"));
    c.rounds = 6;
    c.repeat = 2;
    c.seed = 11;
    c.timing = false;
    c.parallel_sites = run == 1;  // threading must not change anything
    c.transcript_dir = (root / std::to_string(run)).string();
    std::ostringstream out;
    TableFormat f{.with_max = true};
    WriteHeader(out, f);
    for (const auto& row : RunExperiment(c)) WriteRow(out, row, f);
    c.partition = PartitionKind::kSorted;
    c.algorithms = {"sorted"};
    for (const auto& row : RunExperiment(c)) WriteRow(out, row, f);
    tables[run] = out.str();
  }
  ok &= tables[0] == tables[1];
  for (const auto& entry : fs::directory_iterator(root / "0")) {
    ++files;
    const fs::path twin = root / "1" / entry.path().filename();
    ok &= fs::exists(twin) && ReadAll(entry.path()) == ReadAll(twin);
  }
  ok &= files > 0;
  fs::remove_all(root);
  Report(10, "rerun determinism", ok,
         Fmt("metric tables %s, %zu transcript files compared",
             tables[0] == tables[1] ? "identical" : "DIFFER", files));
}

int Main() {
  const SuiteStats st = RunSuite();
  Report(1, "oracle correctness", st.mismatches == 0 && st.configs >= 1000,
         Fmt("%zu configurations, %zu protocol runs, %zu mismatches%s%s", st.configs, st.runs,
             st.mismatches, st.first_mismatch.empty() ? "" : ", first: ",
             st.first_mismatch.c_str()));
  Report(2, "optimal protocol rounds and words",
         st.optimal_round_violations == 0 && st.optimal_word_violations == 0,
         Fmt("C=%.0f; %zu/%zu runs exceed ceil(k/2) rounds, %zu exceed C*k*s words%s%s",
             kOptimalWordConstant, st.optimal_round_violations, st.optimal_runs,
             st.optimal_word_violations, st.first_optimal.empty() ? "" : ", first: ",
             st.first_optimal.c_str()));
  std::printf("INFO 2 runs exceeding ceil(k/2)+1 rounds: %zu/%zu\n", st.optimal_round_plus_one,
              st.optimal_runs);
  CriterionTradeoffScale(st);
  Report(4, "sorted partition protocol", st.sorted_violations == 0 && st.sorted_runs > 0,
         Fmt("%zu sorted instances, %zu over 2 rounds or 2k+3s words%s%s", st.sorted_runs,
             st.sorted_violations, st.first_sorted.empty() ? "" : ", first: ",
             st.first_sorted.c_str()));
  CriterionQuantiles();
  CriterionOneRoundHard();
  CriterionVerticalDisj();
  CriterionPrune(st);
  CriterionRhoSweep();
  CriterionDeterminism();
  std::printf("%d criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}

}  // namespace
}  // namespace dsky

int main() { return dsky::Main(); }
