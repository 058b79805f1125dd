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

// Skyline protocols for vertically partitioned data. Alice holds (x, id)
// for every point, Bob holds (id, y); the coordinator must join them.

#ifndef DSKY_VERTICAL_H_
#define DSKY_VERTICAL_H_

#include <cstddef>
#include <vector>

#include "dsky/coordsim.h"
#include "dsky/point.h"

namespace dsky {

struct VerticalInstance {
  std::vector<HalfPoint> alice;  // (x, id), sorted decreasing by x
  std::vector<HalfPoint> bob;    // (id, y), sorted decreasing by y

  std::size_t size() const { return alice.size(); }
  // Joins both columns back into points (ascending id).
  std::vector<Point> Join() const;
};

// Splits points into the two column stores, each sorted decreasing by its
// coordinate (ties by ascending id).
VerticalInstance MakeVertical(const std::vector<Point>& points);

// Same id set on both sides, each id once per side, sort order respected,
// and distinct joined coordinates. Throws InstanceError.
void ValidateVertical(const VerticalInstance& instance);

// Both sites ship their full column; the coordinator joins and computes the
// skyline.
ProtocolOutcome RunVerticalNaive(const VerticalInstance& instance,
                                 SimOptions options = {});

struct PruneOptions {
  std::size_t groups = 500;  // rho
  int rounds = 8;            // round budget r, at least 6
};

enum class Side { kAlice, kBob };

struct PruneCursor {
  std::size_t f_x = 0;
  std::size_t f_y = 0;
  std::size_t l_x = 0;
  std::size_t l_y = 0;
};

struct PruneStep {
  Side side = Side::kAlice;
  std::size_t group = 0;  // 1-based group fetched
  PruneCursor after;
};

struct PruneTrace {
  std::size_t group_count = 0;  // effective number of non-empty groups
  PruneCursor after_stage1;
  std::vector<PruneStep> steps;
  bool bulk_fetch = false;
  Side bulk_side = Side::kAlice;
  std::size_t bulk_from = 0;   // first group, inclusive
  std::size_t bulk_to = 0;     // last group, inclusive
  std::vector<PointId> recovered;  // ascending
};

// Interactive pruning: recover the top group of each column, then keep
// recovering groups from the side with fewer unresolved groups until one
// side is fully recovered or pruned, finishing with one bulk fetch when the
// round budget runs out.
ProtocolOutcome RunPrune(const VerticalInstance& instance,
                         const PruneOptions& prune, SimOptions options = {},
                         PruneTrace* trace = nullptr);

}  // namespace dsky

#endif  // DSKY_VERTICAL_H_
