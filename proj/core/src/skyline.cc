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

#include "dsky/skyline.h"

#include <algorithm>
#include <limits>
#include <string>
#include <unordered_set>
#include <utility>

#include "dsky/point.h"

namespace dsky {
namespace {

struct PairHash {
  std::size_t operator()(const std::pair<double, double>& p) const {
    const std::size_t h1 = std::hash<double>{}(p.first);
    const std::size_t h2 = std::hash<double>{}(p.second);
    return h1 ^ (h2 + 0x9e3779b97f4a7c15ULL + (h1 << 6) + (h1 >> 2));
  }
};

bool ByXAscending(const Point& a, const Point& b) {
  return a.x < b.x || (a.x == b.x && a.y < b.y);
}

}  // namespace

void ValidateDistinct(const std::vector<Point>& points) {
  std::unordered_set<PointId> ids;
  std::unordered_set<std::pair<double, double>, PairHash> coords;
  ids.reserve(points.size());
  coords.reserve(points.size());
  for (const Point& p : points) {
    if (!ids.insert(p.id).second) {
      throw InstanceError("duplicate point id " + std::to_string(p.id));
    }
    if (!coords.insert({p.x, p.y}).second) {
      throw InstanceError("duplicate coordinates (" + std::to_string(p.x) +
                          ", " + std::to_string(p.y) + ") at id " +
                          std::to_string(p.id));
    }
  }
}

std::vector<PointId> Skyline::SortedIds() const {
  std::vector<PointId> ids;
  ids.reserve(points.size());
  for (const Point& p : points) ids.push_back(p.id);
  std::sort(ids.begin(), ids.end());
  return ids;
}

Skyline ComputeSkyline(std::span<const Point> points) {
  ValidateDistinct(std::vector<Point>(points.begin(), points.end()));
  return ComputeSkylineUnchecked(points);
}

Skyline ComputeSkylineUnchecked(std::span<const Point> points) {
  std::vector<Point> sorted(points.begin(), points.end());
  // x descending, ties broken by y descending so the tallest point of a
  // column is seen first.
  std::sort(sorted.begin(), sorted.end(), [](const Point& a, const Point& b) {
    return a.x > b.x || (a.x == b.x && a.y > b.y);
  });
  Skyline result;
  double max_y = -std::numeric_limits<double>::infinity();
  for (const Point& p : sorted) {
    if (p.y > max_y) {
      result.points.push_back(p);
      max_y = p.y;
    }
  }
  std::reverse(result.points.begin(), result.points.end());
  return result;
}

Skyline SkylineBruteForce(std::span<const Point> points) {
  Skyline result;
  for (const Point& p : points) {
    bool dominated = false;
    for (const Point& q : points) {
      if (Dominates(q, p)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) result.points.push_back(p);
  }
  std::sort(result.points.begin(), result.points.end(), ByXAscending);
  return result;
}

void PruneDominated(std::vector<Point>& points,
                    std::span<const Point> confirmed) {
  if (confirmed.empty() || points.empty()) return;
  // Staircase of the confirmed set, x descending with a running max of y:
  // p is covered iff the best y among confirmed points with x >= p.x is
  // at least p.y.
  std::vector<Point> stair(confirmed.begin(), confirmed.end());
  std::sort(stair.begin(), stair.end(), [](const Point& a, const Point& b) {
    return a.x > b.x;
  });
  std::vector<double> best_y(stair.size());
  double running = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < stair.size(); ++i) {
    running = std::max(running, stair[i].y);
    best_y[i] = running;
  }
  std::erase_if(points, [&](const Point& p) {
    // Last index with stair.x >= p.x.
    auto it = std::partition_point(
        stair.begin(), stair.end(),
        [&](const Point& c) { return c.x >= p.x; });
    if (it == stair.begin()) return false;
    return best_y[static_cast<std::size_t>(it - stair.begin()) - 1] >= p.y;
  });
}

}  // namespace dsky
