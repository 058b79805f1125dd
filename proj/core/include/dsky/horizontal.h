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

// Skyline protocols for horizontally partitioned data: every site holds a
// subset of whole points.

#ifndef DSKY_HORIZONTAL_H_
#define DSKY_HORIZONTAL_H_

#include <cstddef>
#include <optional>
#include <vector>

#include "dsky/coordsim.h"
#include "dsky/point.h"

namespace dsky {

enum class PartitionKind { kRandom, kByKey, kSorted };

struct HorizontalInstance {
  std::vector<std::vector<Point>> sites;
  PartitionKind kind = PartitionKind::kRandom;

  std::size_t num_sites() const { return sites.size(); }
  std::size_t total_points() const;
  std::vector<Point> Union() const;
};

// Checks disjointness by id, distinct coordinates across the union, and,
// for kSorted, that every x in site i is strictly below every x in site
// i+1 (empty sites are skipped). Throws InstanceError.
void ValidateHorizontal(const HorizontalInstance& instance);

// Each site ships its local skyline in one round.
ProtocolOutcome RunNaive(const HorizontalInstance& instance,
                         SimOptions options = {});

// Per round every live site reports its max-x and max-y points; the
// coordinator confirms the global max-x and max-y points and piggybacks
// them on the next request so sites can prune.
ProtocolOutcome RunOptimal(const HorizontalInstance& instance,
                           SimOptions options = {});

struct TradeoffOptions {
  int rounds = 3;  // round budget r, at least 3
  // When set, the strip count is fixed from the known output size instead
  // of being guessed step by step.
  std::optional<std::size_t> known_k;
};

struct TradeoffStep {
  double k_guess = 0.0;
  std::size_t strips = 0;
  std::size_t new_skyline_points = 0;
  std::size_t remaining_before = 0;  // union size reported by the summaries
};

struct TradeoffTrace {
  int step_budget = 0;  // t = ceil(r / 2)
  std::vector<TradeoffStep> steps;
  std::size_t final_upload_points = 0;
};

// Strip count for one step: max(1, ceil((2 k / (t-1)) * (n (t-1) / (2 s))^(1/t)))
// when k is a guess, or the known-k optimum when `known_k` is true.
std::size_t TradeoffStripCount(double k, std::size_t n, std::size_t s, int t,
                               bool known_k);

// Quantile-strip pruning for (t - 1) two-round steps, then one round in
// which sites ship whatever survived.
ProtocolOutcome RunTradeoff(const HorizontalInstance& instance,
                            const TradeoffOptions& tradeoff,
                            SimOptions options = {},
                            TradeoffTrace* trace = nullptr);

// Two rounds for data split across sites by increasing x. Throws
// InstanceError if the instance is not a strictly sorted partition.
ProtocolOutcome RunSorted(const HorizontalInstance& instance,
                          SimOptions options = {});

namespace internal {

// Default round cap for an instance of n points.
int DefaultRoundCap(std::size_t n);

// Local skyline of each site, sorted by increasing x.
std::vector<std::vector<Point>> LocalSkylines(
    const HorizontalInstance& instance);

}  // namespace internal

}  // namespace dsky

#endif  // DSKY_HORIZONTAL_H_
