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

// Comparison heuristics for horizontally partitioned data: a grid-based
// filter (AGiDS) and a score-threshold feedback loop (FDS).

#ifndef DSKY_BASELINES_H_
#define DSKY_BASELINES_H_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "dsky/coordsim.h"
#include "dsky/horizontal.h"
#include "dsky/point.h"

namespace dsky {

// Equal-width g x g grid over a bounding box. Cells are addressed by
// row * g + column, both 0-based.
struct GridSpec {
  int cells_per_axis = 20;
  double x_min = 0.0;
  double x_max = 1.0;
  double y_min = 0.0;
  double y_max = 1.0;

  // Grid over the given box; a degenerate axis is widened so every cell
  // has positive width. Throws ParameterError if g < 1.
  static GridSpec Over(int g, double x_min, double x_max, double y_min,
                       double y_max);

  int Column(double x) const;
  int Row(double y) const;
  std::int64_t CellOf(const Point& p) const;
};

// Cells of `nonempty` that survive pruning: a cell is dropped when another
// non-empty cell has a strictly larger column and a strictly larger row.
// Output ascending.
std::vector<std::int64_t> SurvivingCells(std::vector<std::int64_t> nonempty,
                                         int cells_per_axis);

struct AgidsTrace {
  GridSpec grid;
  std::vector<std::int64_t> nonempty;   // global, ascending
  std::vector<std::int64_t> surviving;  // ascending
};

// Round 1 agrees on the bounding box, round 2 collects the non-empty cells
// of every local skyline, round 3 fetches the points in surviving cells.
ProtocolOutcome RunAgids(const HorizontalInstance& instance, int cells_per_axis,
                         SimOptions options = {}, AgidsTrace* trace = nullptr);

struct FdsOptions {
  int kappa = 1;
  // Accepted for interface parity; feedback always carries every newly
  // confirmed skyline point, which covers the l = 1 setting.
  int ell = 1;
};

// Iterations of three rounds: top-kappa by x + y, everything above the
// smallest reported score, then skyline feedback so sites can prune.
ProtocolOutcome RunFds(const HorizontalInstance& instance,
                       const FdsOptions& fds, SimOptions options = {});

}  // namespace dsky

#endif  // DSKY_BASELINES_H_
