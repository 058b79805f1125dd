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

#ifndef DSKY_SKYLINE_H_
#define DSKY_SKYLINE_H_

#include <span>
#include <vector>

#include "dsky/point.h"

namespace dsky {

// The non-dominated subset of a point set, sorted strictly increasing by x
// (and therefore strictly decreasing by y).
struct Skyline {
  std::vector<Point> points;

  std::size_t size() const { return points.size(); }
  bool empty() const { return points.empty(); }
  std::vector<PointId> SortedIds() const;
};

// Sort-and-scan skyline: O(n log n). Throws InstanceError on duplicate
// coordinates or ids.
Skyline ComputeSkyline(std::span<const Point> points);

// Same as ComputeSkyline but skips validation. For protocol internals that
// operate on subsets of an already validated instance.
Skyline ComputeSkylineUnchecked(std::span<const Point> points);

// Quadratic reference implementation: keeps p iff no q dominates it.
Skyline SkylineBruteForce(std::span<const Point> points);

// Removes from `points` every point that is dominated by, or equal to, some
// member of `confirmed`. Order of the survivors is preserved.
void PruneDominated(std::vector<Point>& points, std::span<const Point> confirmed);

}  // namespace dsky

#endif  // DSKY_SKYLINE_H_
