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

#ifndef DSKY_POINT_H_
#define DSKY_POINT_H_

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace dsky {

using PointId = std::uint64_t;

// A 2-D point with an identifier. Larger is better on both axes.
struct Point {
  PointId id = 0;
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Point&, const Point&) = default;
};

// u dominates v iff u is at least as large on both coordinates and the
// coordinate pairs differ.
constexpr bool Dominates(const Point& u, const Point& v) {
  return u.x >= v.x && u.y >= v.y && (u.x != v.x || u.y != v.y);
}

// Raised when an instance violates a structural invariant (duplicate
// coordinates, duplicate ids, a broken partition precondition).
class InstanceError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Raised for out-of-range protocol or generator parameters.
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Throws InstanceError if two points share an id or an (x, y) pair.
void ValidateDistinct(const std::vector<Point>& points);

}  // namespace dsky

#endif  // DSKY_POINT_H_
